"""Limit objects: modified Polya products and their parameter space.

A parameter point omega = (alpha, gamma) has a weakly decreasing nonnegative
atom vector alpha (square-summable here: always finite) and a Gaussian weight
gamma >= 0.  The associated even positive-definite function of one real
variable is

    Pi(omega, u) = exp(-gamma u^2/4) * prod_j 1 / (1 + alpha_j u^2/4),

and products of Pi over the entries of a vector are exactly the limits of the
finite-dimensional spherical functions along the rescaled sequences built in
:mod:`spherica.limits`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, ShapeError, ValidationError
from .symfunc import Partition, _jacobi_trudi_det, newton_h_from_p

_WEIGHT_TOL = 1e-12


@dataclass(frozen=True)
class OmegaParam:
    """Canonical limit parameter: atoms sorted decreasing, zeros trimmed."""

    alpha: tuple[float, ...]
    gamma: float

    def __init__(self, alpha: Sequence[float] = (), gamma: float = 0.0):
        atoms = []
        for a in alpha:
            f = float(a)
            if not math.isfinite(f) or f < 0.0:
                raise ValidationError(f"alpha entries must be finite and >= 0: {a!r}")
            if f > 0.0:
                atoms.append(f)
        atoms.sort(reverse=True)
        g = float(gamma)
        if not math.isfinite(g) or g < 0.0:
            raise ValidationError(f"gamma must be finite and >= 0: {gamma!r}")
        object.__setattr__(self, "alpha", tuple(atoms))
        object.__setattr__(self, "gamma", g)

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "gamma": self.gamma}

    @classmethod
    def from_json(cls, obj) -> "OmegaParam":
        if not isinstance(obj, dict) or set(obj) - {"alpha", "gamma"}:
            raise ValidationError(
                'omega must be an object with keys "alpha" and "gamma"'
            )
        alpha = obj.get("alpha", [])
        gamma = obj.get("gamma", 0.0)
        if not isinstance(alpha, (list, tuple)) or not all(
            isinstance(a, (int, float)) and not isinstance(a, bool) for a in alpha
        ):
            raise ValidationError('"alpha" must be a list of numbers')
        if not isinstance(gamma, (int, float)) or isinstance(gamma, bool):
            raise ValidationError('"gamma" must be a number')
        return cls(alpha, gamma)

    @classmethod
    def from_file(cls, path) -> "OmegaParam":
        with open(path, "r", encoding="utf-8") as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValidationError(f"invalid JSON in {path}: {exc}") from exc
        return cls.from_json(obj)


@dataclass(frozen=True)
class MixtureParam:
    """Finite convex combination of limit parameters."""

    components: tuple[tuple[float, OmegaParam], ...]

    def __init__(self, components: Sequence[tuple[float, OmegaParam]]):
        comps = []
        for w, om in components:
            f = float(w)
            if not math.isfinite(f) or f <= 0.0:
                raise ValidationError(f"mixture weights must be positive: {w!r}")
            if not isinstance(om, OmegaParam):
                raise ValidationError("mixture components must pair weight and omega")
            comps.append((f, om))
        if not comps:
            raise ValidationError("mixture needs at least one component")
        total = math.fsum(w for w, _ in comps)
        if abs(total - 1.0) > _WEIGHT_TOL:
            raise ValidationError(f"mixture weights must sum to 1, got {total!r}")
        object.__setattr__(self, "components", tuple(comps))

    def to_json(self) -> dict:
        return {
            "components": [
                {"weight": w, "omega": om.to_json()} for w, om in self.components
            ]
        }

    @classmethod
    def from_json(cls, obj) -> "MixtureParam":
        if not isinstance(obj, dict) or set(obj) != {"components"}:
            raise ValidationError('mixture must be an object with key "components"')
        comps = obj["components"]
        if not isinstance(comps, list) or not comps:
            raise ValidationError('"components" must be a non-empty list')
        parsed = []
        for entry in comps:
            if not isinstance(entry, dict) or set(entry) != {"weight", "omega"}:
                raise ValidationError(
                    'each component must have keys "weight" and "omega"'
                )
            w = entry["weight"]
            if not isinstance(w, (int, float)) or isinstance(w, bool):
                raise ValidationError('"weight" must be a number')
            parsed.append((float(w), OmegaParam.from_json(entry["omega"])))
        return cls(parsed)

    @classmethod
    def from_file(cls, path) -> "MixtureParam":
        with open(path, "r", encoding="utf-8") as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValidationError(f"invalid JSON in {path}: {exc}") from exc
        return cls.from_json(obj)


def polya_eval(omega: OmegaParam, u: float) -> float:
    """Pi(omega, u) = e^{-gamma u^2/4} prod_j 1/(1 + alpha_j u^2/4)."""
    u = float(u)
    if not math.isfinite(u):
        raise DomainError("polya_eval requires finite u")
    q = u * u / 4.0
    acc = math.exp(-omega.gamma * q)
    for a in omega.alpha:
        acc /= 1.0 + a * q
    return acc


def p_tilde(omega: OmegaParam, m: int) -> float:
    """Image of the power sum p_m under the limit morphism:

    p~_1 = gamma + sum alpha_j,  p~_m = sum alpha_j^m for m >= 2.
    """
    if m < 1:
        raise DomainError("p_tilde is indexed from m = 1")
    if m == 1:
        return omega.gamma + math.fsum(omega.alpha)
    return math.fsum(a**m for a in omega.alpha)


def sigma_moment(omega: OmegaParam, m: int) -> float:
    """Even moments of the representing measure: M_0 = gamma + p_1(alpha),
    M_m = p_{m+1}(alpha) for m >= 1."""
    if m < 0:
        raise DomainError("sigma_moment is indexed from m = 0")
    if m == 0:
        return omega.gamma + math.fsum(omega.alpha)
    return math.fsum(a ** (m + 1) for a in omega.alpha)


def log_deriv_coeffs(omega: OmegaParam, order: int) -> list[float]:
    """Odd Taylor coefficients of Pi'/Pi at 0: returns [c_1, c_3, ...].

    c_1 = -(gamma + p_1(alpha))/2 and c_{2m-1} = (-1)^m p_m(alpha)/2^{2m-1}
    for m >= 2.
    """
    if order < 1:
        raise DomainError("order must be >= 1")
    out = [-(omega.gamma + math.fsum(omega.alpha)) / 2.0]
    for m in range(2, order + 1):
        pm = math.fsum(a**m for a in omega.alpha)
        out.append(((-1.0) ** m) * pm / float(2 ** (2 * m - 1)))
    return out


def h_tilde(omega: OmegaParam, max_m: int) -> list[float]:
    """[h~_0 .. h~_max_m]: complete homogeneous images via Newton recursion
    from the p~ values.  These are the Taylor coefficients of Pi:
    Pi(omega, u) = sum_m h~_m (-u^2/4)^m inside |u| < 2/sqrt(max alpha)."""
    if max_m < 0:
        raise DomainError("max_m must be nonnegative")
    p = [p_tilde(omega, m) for m in range(1, max_m + 1)]
    return newton_h_from_p(p)


def s_tilde(omega: OmegaParam, m: Partition | Sequence[int]) -> float:
    """Schur image s~_m(omega) by Jacobi-Trudi over the h~ values."""
    part = m if isinstance(m, Partition) else Partition(m)
    if part.length == 0:
        return 1.0
    table = h_tilde(omega, part.parts[0] + part.length - 1)
    return _jacobi_trudi_det(part.parts, table)


def phi_omega(omega: OmegaParam, xi: Sequence[float]) -> float:
    """Limit spherical function: prod_j Pi(omega, xi_j).

    Multiplicative over concatenation of xi by construction (a left-to-right
    product), which mirrors the defining property of the limit objects.
    """
    acc = 1.0
    for v in xi:
        acc *= polya_eval(omega, float(v))
    return acc


def phi_omega_matrix(omega: OmegaParam, x) -> float:
    """phi_omega at a full square complex matrix, through its singular values."""
    arr = np.asarray(x)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.real)) or (
        np.iscomplexobj(arr) and not np.all(np.isfinite(arr.imag))
    ):
        raise DomainError("matrix entries must be finite")
    s = np.linalg.svd(arr, compute_uv=False)
    return phi_omega(omega, [float(v) for v in s])


def mixture_eval(mixture: MixtureParam, xi: Sequence[float]) -> float:
    """Convex combination sum_i w_i phi_{omega_i}(xi)."""
    return math.fsum(w * phi_omega(om, xi) for w, om in mixture.components)


def second_deriv_identity(omega: OmegaParam, h: float = 1e-4) -> tuple[float, float]:
    """(-2 Pi''(0) estimated by central differences, p~_1(omega)).

    The two agree: the curvature of Pi at the origin recovers the first
    morphism value.
    """
    h = float(h)
    if not (h > 0.0) or not math.isfinite(h):
        raise DomainError("h must be positive and finite")
    lhs = -2.0 * (polya_eval(omega, h) - 2.0 + polya_eval(omega, -h)) / (h * h)
    return lhs, p_tilde(omega, 1)
