"""Finite-n to infinite-dimensional-limit sweeps.

Each sweep evaluates a finite-n quantity along a sequence of sizes n and
compares it against its closed-form limit:

* power sums of the scaled squared parameters against the limiting moments,
* spherical-function values at a one-dimensional test direction against the
  limiting positive-definite function Pi(omega, u),
* angular-density observables against their concentration value at
  theta = (pi/2, ..., pi/2).

Monte Carlo sweeps give each grid point its own derived master seed
(seed + 1000003 * point_index) so that changing the grid does not reshuffle
the randomness of the points that stay.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

from .errors import DomainError, ShapeError
from .montecarlo import RngStream, _blocks, mc_spherical
from .polya import OmegaParam, p_tilde, polya_eval
from .spherical import DiagonalPoint, _weyl_cmn, spherical_series


@dataclass(frozen=True)
class SweepReport:
    """Values of one finite-n quantity along a size grid, with its limit.

    std_errors is None for deterministic sweeps, otherwise one standard
    error per grid point.
    """

    kind: str
    params: dict
    n_values: tuple[int, ...]
    values: tuple[float, ...]
    limit_value: float
    std_errors: tuple[float, ...] | None = None

    @property
    def abs_errors(self) -> tuple[float, ...]:
        return tuple(abs(v - self.limit_value) for v in self.values)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "n_values": list(self.n_values),
            "values": list(self.values),
            "limit_value": self.limit_value,
            "abs_errors": list(self.abs_errors),
            "std_errors": None if self.std_errors is None else list(self.std_errors),
        }

    def to_csv(self) -> str:
        lines = ["n,value,limit,abs_error,std_error"]
        for i, n in enumerate(self.n_values):
            se = "" if self.std_errors is None else repr(self.std_errors[i])
            lines.append(
                f"{n},{self.values[i]!r},{self.limit_value!r},"
                f"{self.abs_errors[i]!r},{se}"
            )
        return "\n".join(lines) + "\n"


def _check_grid(n_values: Sequence[int], minimum: int) -> tuple[int, ...]:
    grid = tuple(int(n) for n in n_values)
    if not grid:
        raise DomainError("empty size grid")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError("size grid must be strictly increasing")
    if grid[0] < minimum:
        raise DomainError(f"size grid must start at n >= {minimum}")
    return grid


def t_n_map(lam, n: int | None = None) -> OmegaParam:
    """Scaling map at size n: lam -> omega with alpha_j = (lam_j / n)^2 and
    no Gaussian part."""
    point = lam if isinstance(lam, DiagonalPoint) else DiagonalPoint(lam)
    size = point.dimension if n is None else int(n)
    if size != point.dimension:
        raise ShapeError(f"lam has {point.dimension} entries, expected {size}")
    if size == 0:
        raise DomainError("empty parameter vector")
    return OmegaParam([(v / size) ** 2 for v in point.values], 0.0)


def lambda_sequence_for(omega: OmegaParam, n: int) -> tuple[float, ...]:
    """A size-n parameter vector whose image under t_n_map converges to
    omega: atoms alpha_j become entries n sqrt(alpha_j), and the Gaussian
    weight gamma is spread uniformly over the remaining n - k entries."""
    n = int(n)
    k = len(omega.alpha)
    need = k + 1 if omega.gamma > 0.0 else max(k, 1)
    if n < need:
        raise DomainError(f"need n >= {need} for this omega, got n = {n}")
    entries = [n * math.sqrt(a) for a in omega.alpha]
    rest = n - k
    if omega.gamma > 0.0:
        entries.extend([n * math.sqrt(omega.gamma / rest)] * rest)
    else:
        entries.extend([0.0] * rest)
    entries.sort(reverse=True)
    return tuple(entries)


def powersum_convergence(
    omega: OmegaParam, m: int, n_values: Sequence[int]
) -> SweepReport:
    """Power sums p_m of the scaled squared parameters along the grid,
    against the limiting moment (gamma + p_1 for m = 1, p_m otherwise)."""
    m = int(m)
    if m < 1:
        raise DomainError("power-sum degree must be >= 1")
    need = len(omega.alpha) + (1 if omega.gamma > 0.0 else 0)
    grid = _check_grid(n_values, max(need, 1))
    limit = p_tilde(omega, m)
    values = []
    for n in grid:
        lam = lambda_sequence_for(omega, n)
        values.append(math.fsum((v / n) ** (2 * m) for v in lam))
    return SweepReport(
        kind="powersum_convergence",
        params={"omega": omega.to_json(), "m": m},
        n_values=grid,
        values=tuple(values),
        limit_value=limit,
    )


def spherical_convergence(
    omega: OmegaParam,
    u: float,
    n_values: Sequence[int],
    method: str = "series",
    n_samples: int = 100_000,
    seed: int = 0,
) -> SweepReport:
    """Finite-n spherical values at the one-dimensional direction
    (u, 0, ..., 0), with parameters lambda_sequence_for(omega, n), against
    the limit Pi(omega, u).

    method "series" is deterministic; "mc" uses the Haar sampler with an
    independent derived seed per grid point and reports standard errors.
    """
    u = float(u)
    if not math.isfinite(u):
        raise DomainError("u must be finite")
    if method not in ("series", "mc"):
        raise DomainError(f"unknown method {method!r}")
    need = len(omega.alpha) + (1 if omega.gamma > 0.0 else 0)
    grid = _check_grid(n_values, max(need, 1))
    limit = polya_eval(omega, u)
    values: list[float] = []
    std_errors: list[float] = []
    for i, n in enumerate(grid):
        lam = lambda_sequence_for(omega, n)
        xi = (u,) + (0.0,) * (n - 1)
        if method == "series":
            values.append(spherical_series(lam, xi).value)
        else:
            est = mc_spherical(lam, xi, n_samples, seed + 1000003 * i)
            values.append(est.mean)
            std_errors.append(est.std_error)
    params: dict = {"omega": omega.to_json(), "u": u, "method": method}
    if method == "mc":
        params["n_samples"] = int(n_samples)
        params["seed"] = int(seed)
    return SweepReport(
        kind="spherical_convergence",
        params=params,
        n_values=grid,
        values=tuple(values),
        limit_value=limit,
        std_errors=tuple(std_errors) if method == "mc" else None,
    )


def _mean_cos_sq(theta: np.ndarray) -> float:
    c = np.cos(theta)
    return float(np.mean(c * c))


def _density_rows(m: int, n: int, th: np.ndarray) -> np.ndarray:
    # unnormalized angular density on rows of th, shape (batch, m)
    acc = np.ones(th.shape[0])
    for i in range(m):
        for j in range(i + 1, m):
            acc *= (np.sin(th[:, i] + th[:, j]) * np.sin(th[:, i] - th[:, j])) ** 2
    for i in range(m):
        acc *= np.sin(2.0 * th[:, i]) * np.sin(th[:, i]) ** (2 * (n - 2 * m))
    return np.abs(acc)


def weyl_concentration_sweep(
    m: int,
    n_values: Sequence[int],
    observable: Callable[[np.ndarray], float] | None = None,
    n_samples: int = 100_000,
    seed: int = 0,
) -> SweepReport:
    """Expectation of an angular observable under the (m, n) density along
    the grid, against its value at the concentration point (pi/2, ..., pi/2).

    m = 1 uses adaptive quadrature (deterministic, no standard errors).
    m >= 2 uses self-normalized importance sampling from the uniform
    proposal on [0, pi]^m, one derived seed per grid point.
    """
    m = int(m)
    if m < 1:
        raise DomainError("m must be >= 1")
    grid = _check_grid(n_values, 2 * m)
    obs = _mean_cos_sq if observable is None else observable
    limit = float(obs(np.full(m, math.pi / 2.0)))
    values: list[float] = []
    std_errors: list[float] = []
    for i, n in enumerate(grid):
        if m == 1:
            c = _weyl_cmn(1, n)
            total, _ = integrate.quad(
                lambda t: obs(np.array([t]))
                * abs(math.sin(2.0 * t) * math.sin(t) ** (2 * (n - 2))),
                0.0,
                math.pi,
                limit=200,
                points=[math.pi / 2.0],
            )
            values.append(c * total)
        else:
            w_blocks: list[np.ndarray] = []
            f_blocks: list[np.ndarray] = []
            for b, take in _blocks(int(n_samples)):
                stream = RngStream(seed + 1000003 * i, b)
                th = stream.uniforms((take, m)) * math.pi
                w_blocks.append(_density_rows(m, n, th))
                f_blocks.append(np.array([float(obs(row)) for row in th]))
            w_sum = math.fsum(float(np.sum(w)) for w in w_blocks)
            wf_sum = math.fsum(
                float(np.sum(w * f)) for w, f in zip(w_blocks, f_blocks)
            )
            est = wf_sum / w_sum
            var = math.fsum(
                float(np.sum((w / w_sum) ** 2 * (f - est) ** 2))
                for w, f in zip(w_blocks, f_blocks)
            )
            values.append(est)
            std_errors.append(math.sqrt(var))
    params: dict = {
        "m": m,
        "observable": "mean_cos_sq" if observable is None else "custom",
    }
    if m >= 2:
        params["n_samples"] = int(n_samples)
        params["seed"] = int(seed)
    return SweepReport(
        kind="weyl_concentration",
        params=params,
        n_values=grid,
        values=tuple(values),
        limit_value=limit,
        std_errors=tuple(std_errors) if m >= 2 else None,
    )


def sweep_to_text(report: SweepReport, fmt: str) -> str:
    """Render a report as 'json' (single line) or 'csv'."""
    if fmt == "json":
        return json.dumps(report.to_json(), sort_keys=True) + "\n"
    if fmt == "csv":
        return report.to_csv()
    raise DomainError(f"unknown format {fmt!r}")
