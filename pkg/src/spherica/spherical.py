"""Positive-definite spherical functions on n x n complex matrices.

The bi-unitarily invariant functions evaluated here depend only on singular
value vectors, so arguments are canonicalized diagonal points (entries made
nonnegative and sorted in decreasing order).  Two independent evaluation
routes are provided for the Fourier transform of an orbit:

* a closed determinant form with Bessel J0 entries divided by squared
  Vandermonde products, valid when all squared entries are well separated;
* a Schur-function series with factorial coefficients, valid everywhere,
  truncated with a certified tail bound.

The same machinery, with I0 in place of J0 (equivalently positive instead of
negative squared variables), gives the exponential orbital integral and the
radial heat kernel.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

from .errors import (
    ConvergenceError,
    DegeneracyError,
    DomainError,
    RangeError,
    ShapeError,
)
from .series import SeriesOptions, bessel_i0, bessel_j0, hyper_f
from .symfunc import _jacobi_trudi_det, _partition_tuples, complete_h_table

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class DiagonalPoint:
    """Canonical singular-value vector.

    Entries are stored as absolute values sorted in decreasing order; sign
    flips and permutations of the input are symmetries of everything computed
    from it, so two inputs on the same orbit compare equal.
    """

    values: tuple[float, ...]

    def __init__(self, values: Sequence[float]):
        vals = []
        for v in values:
            f = float(v)
            if not math.isfinite(f):
                raise DomainError("diagonal entries must be finite")
            vals.append(abs(f))
        vals.sort(reverse=True)
        object.__setattr__(self, "values", tuple(vals))

    @property
    def dimension(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class EvalResult:
    """Value with provenance.

    abs_error   certified (determinant: conditioning-based; series: tail bound)
    terms_used  series: partitions summed; determinant: matrix order
    path        "determinant" or "series"
    """

    value: float
    abs_error: float
    terms_used: int
    path: str


@dataclass(frozen=True)
class SphericalOptions:
    rel_tol: float = 1e-10
    degeneracy_tol: float = 1e-6
    max_weight: int = 64
    max_weight_cap: int = 240

    def __post_init__(self):
        if not (self.rel_tol > 0.0):
            raise DomainError("rel_tol must be positive")
        if not (0.0 < self.degeneracy_tol < 1.0):
            raise DomainError("degeneracy_tol must lie in (0, 1)")
        if self.max_weight < 1 or self.max_weight_cap < self.max_weight:
            raise DomainError("need 1 <= max_weight <= max_weight_cap")


_DEFAULT = SphericalOptions()


def _as_point(x) -> DiagonalPoint:
    return x if isinstance(x, DiagonalPoint) else DiagonalPoint(x)


def squared_gap_product(values: Sequence[float]) -> float:
    """D(v) = prod_{i<j} (v_i^2 - v_j^2)."""
    vals = [float(v) for v in values]
    acc = 1.0
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            acc *= vals[i] * vals[i] - vals[j] * vals[j]
    return acc


def _is_degenerate(values: Sequence[float], tol: float) -> bool:
    # canonical order assumed: squares descending, so adjacent gaps are minimal
    sq = [v * v for v in values]
    if len(sq) < 2:
        return False
    scale = sq[0]
    return any(sq[i] - sq[i + 1] <= tol * scale for i in range(len(sq) - 1))


def _lu_full_pivot(a: list[list[float]]) -> tuple[float, list[float]]:
    """Elimination with full pivoting; returns (sign, diagonal pivots)."""
    n = len(a)
    a = [row[:] for row in a]
    sign = 1.0
    diag = []
    for k in range(n):
        p, q, best = k, k, -1.0
        for i in range(k, n):
            for j in range(k, n):
                v = abs(a[i][j])
                if v > best:
                    best, p, q = v, i, j
        if best == 0.0:
            diag.extend([0.0] * (n - k))
            break
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        if q != k:
            for row in a:
                row[k], row[q] = row[q], row[k]
            sign = -sign
        piv = a[k][k]
        diag.append(piv)
        for i in range(k + 1, n):
            f = a[i][k] / piv
            if f != 0.0:
                a[i][k] = 0.0
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
    return sign, diag


def _balanced_product(numerators: Sequence[float], denominators: Sequence[float]) -> float:
    """Product of numerators over denominators, interleaved to keep the
    running value near 1 in magnitude (all inputs positive)."""
    acc = 1.0
    i = j = 0
    while i < len(numerators) or j < len(denominators):
        if j >= len(denominators) or (i < len(numerators) and acc <= 1.0):
            acc *= numerators[i]
            i += 1
        else:
            acc /= denominators[j]
            j += 1
    return acc


def _det_ratio(
    matrix: list[list[float]],
    extra_num: list[float],
    extra_den: list[float],
    extra_sign: float,
) -> tuple[float, float]:
    """(extra_sign * prod(extra_num) / prod(extra_den)) * det(matrix), with a
    conditioning-based absolute error estimate (Hadamard bound over |det|)."""
    n = len(matrix)
    sign, diag = _lu_full_pivot(matrix)
    for d in diag:
        if d < 0.0:
            sign = -sign
    mags = [abs(d) for d in diag]
    value = 0.0
    if all(m > 0.0 for m in mags):
        value = extra_sign * sign * _balanced_product(mags + extra_num, extra_den)
    rownorms = [math.sqrt(math.fsum(e * e for e in row)) for row in matrix]
    hadamard = _balanced_product([max(r, 1e-300) for r in rownorms] + extra_num, extra_den)
    abs_error = 8.0 * n * n * _EPS * hadamard + 1e-300
    return value, abs_error


def _gap_factors(values: Sequence[float]) -> list[float]:
    # positive for canonical (descending) input with distinct squares
    out = []
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            out.append(values[i] * values[i] - values[j] * values[j])
    return out


def spherical_det(x, xi, opts: SphericalOptions = _DEFAULT) -> EvalResult:
    """Determinant form of the spherical function.

    phi_x(xi) = (delta!)^2 (-4)^{n(n-1)/2} det(J0(x_j xi_k)) / (D(x) D(xi)),
    delta = (n-1, ..., 1, 0), D(v) = prod_{i<j}(v_i^2 - v_j^2).

    Requires all squared entries of x (and of xi) to be pairwise separated
    beyond opts.degeneracy_tol relative to the largest square; otherwise a
    DegeneracyError directs the caller to spherical_series.  The formula is
    symmetric under exchanging x and xi, and the implementation evaluates in a
    canonical argument order so the symmetry holds bitwise.
    """
    x = _as_point(x)
    xi = _as_point(xi)
    if x.dimension != xi.dimension:
        raise ShapeError(f"dimension mismatch: {x.dimension} vs {xi.dimension}")
    n = x.dimension
    if n == 0:
        raise DomainError("empty diagonal point")
    for p, name in ((x, "x"), (xi, "xi")):
        if _is_degenerate(p.values, opts.degeneracy_tol):
            raise DegeneracyError(
                f"coincident squared entries in {name}; use spherical_series"
            )
    a, b = (x.values, xi.values) if x.values >= xi.values else (xi.values, x.values)

    matrix = [[bessel_j0(a[j] * b[k]) for k in range(n)] for j in range(n)]
    num = [float(math.factorial(j)) for j in range(n)] * 2 + [4.0] * (n * (n - 1) // 2)
    den = _gap_factors(a) + _gap_factors(b)
    extra_sign = -1.0 if (n * (n - 1) // 2) % 2 else 1.0
    value, abs_error = _det_ratio(matrix, num, den, extra_sign)
    return EvalResult(value, abs_error, n, "determinant")


def spherical_det_f_kernel(x, xi, opts: SphericalOptions = _DEFAULT) -> EvalResult:
    """Same value through the squared-variable kernel determinant:

    (delta!)^2 det(F(Lam_i Xi_j)) / (D(Lam) D(Xi)) with Lam = x^2,
    Xi = -xi^2/4 and D here the plain Vandermonde in the squared variables.
    Kept as an independently coded cross-check of the prefactor bookkeeping.
    """
    x = _as_point(x)
    xi = _as_point(xi)
    if x.dimension != xi.dimension:
        raise ShapeError(f"dimension mismatch: {x.dimension} vs {xi.dimension}")
    n = x.dimension
    for p, name in ((x, "x"), (xi, "xi")):
        if _is_degenerate(p.values, opts.degeneracy_tol):
            raise DegeneracyError(
                f"coincident squared entries in {name}; use spherical_series"
            )
    lam = [v * v for v in x.values]
    xis = [-(v * v) / 4.0 for v in xi.values]
    matrix = [[hyper_f(lam[i] * xis[j]) for j in range(n)] for i in range(n)]
    num = [float(math.factorial(j)) for j in range(n)] * 2
    den = []
    sign = 1.0
    for vals in (lam, xis):
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                g = vals[i] - vals[j]
                if g < 0.0:
                    sign = -sign
                den.append(abs(g))
    value, abs_error = _det_ratio(matrix, num, den, sign)
    return EvalResult(value, abs_error, n, "determinant")


def spherical_eval(
    x, xi, path: str = "auto", opts: SphericalOptions = _DEFAULT
) -> EvalResult:
    """Spherical function with explicit route selection.

    path "det" and "series" force the corresponding evaluator; "auto" takes
    the determinant when both arguments are separated beyond
    opts.degeneracy_tol and the series otherwise.
    """
    if path not in ("auto", "det", "series"):
        raise DomainError(f"unknown path {path!r}")
    if path == "det":
        return spherical_det(x, xi, opts)
    if path == "series":
        return spherical_series(x, xi, opts=opts)
    xp = _as_point(x)
    xip = _as_point(xi)
    if _is_degenerate(xp.values, opts.degeneracy_tol) or _is_degenerate(
        xip.values, opts.degeneracy_tol
    ):
        return spherical_series(xp, xip, opts=opts)
    return spherical_det(xp, xip, opts)


# ---------------------------------------------------------------------------
# Schur series route


def _series_tail_bound(
    p1_lam: float, xi_max: float, n: int, n_xi_vars: int, rows: int, start: int
) -> float:
    """Upper bound on the absolute sum of all series layers beyond weight
    ``start``.

    Construction: for a partition m with at most ``rows`` parts,
      coefficient^2 <= prod_i ((n-rows)!/(m_i + n - rows)!)^2   (worst row),
      s_m(Lam)      <= p1(Lam)^{|m|}                            (monomial count),
      s_m(|Xi|)     <= prod_i C(m_i + K - 1, K - 1) max|Xi|^{m_i},
    so each layer is dominated by the coefficients of the ``rows``-fold
    convolution of v_j = C(j+K-1, K-1) (p1 max|Xi|)^j ((n-rows)!/(j+n-rows)!)^2,
    which decays factorially in j.  The finite convolution is summed exactly
    and the remainder is closed off geometrically; +inf means "not certified".
    """
    if p1_lam <= 0.0 or xi_max <= 0.0:
        return 0.0
    K = n_xi_vars
    J = start + 160
    base = n - rows
    lr = math.log(p1_lam) + math.log(xi_max)
    lg_base = math.lgamma(base + 1)
    lg_k = math.lgamma(K)
    logv = np.empty(J + 1)
    for j in range(J + 1):
        logv[j] = (
            math.lgamma(j + K)
            - math.lgamma(j + 1)
            - lg_k
            + j * lr
            + 2.0 * (lg_base - math.lgamma(base + 1 + j))
        )
    if np.max(logv) > 700.0:
        return math.inf
    with np.errstate(over="ignore", under="ignore"):
        v = np.exp(logv)
        conv = v.copy()
        for _ in range(rows - 1):
            conv = np.convolve(conv, v)[: J + 1]
    if not np.all(np.isfinite(conv)):
        return math.inf
    tail = float(np.sum(conv[start + 1 :]))
    c_last, c_prev = float(conv[J]), float(conv[J - 1])
    if c_last > 0.0:
        if c_prev <= 0.0:
            return math.inf
        rho = c_last / c_prev
        if rho >= 0.9:
            return math.inf
        tail += c_last * rho / (1.0 - rho)
    return tail


def _schur_fourier_series(
    xvals: Sequence[float],
    xi_quarter_sq: Sequence[float],
    alternating: bool,
    max_weight: int,
    opts: SphericalOptions,
) -> EvalResult:
    """sum over partitions m of (delta!/(m+delta)!)^2 s_m(Lam) s_m(Xi) with
    Lam = x^2 and |Xi| = xi^2/4; ``alternating`` attaches (-1)^{|m|} (the
    J0-type kernel), otherwise all terms are positive (I0-type).

    Variables are rescaled by their maxima and the scale is folded into the
    factorial coefficient through lgamma, so the routine stays in range for
    large dimensions and large entries.
    """
    n = len(xvals)
    lam = [v * v for v in xvals]
    xiq = [float(q) for q in xi_quarter_sq]
    n_lam = sum(1 for v in lam if v != 0.0)
    n_xi = sum(1 for q in xiq if q != 0.0)
    rows = min(n_lam, n_xi)
    if rows == 0:
        return EvalResult(1.0, 0.0, 1, "series")

    c_lam = max(lam[0], 1.0)
    c_xi = max(max(xiq), 1.0)
    half_logc = 0.5 * (math.log(c_lam) + math.log(c_xi))
    p1_lam = math.fsum(lam)
    xi_max = max(xiq)
    lam_hat = [v / c_lam for v in lam]
    xi_hat = [q / c_xi for q in xiq]

    W = max_weight
    while True:
        h_lam = complete_h_table(lam_hat, W + rows)
        h_xi = complete_h_table(xi_hat, W + rows)
        lg = [math.lgamma(t + 1) for t in range(n + W + 1)]  # lg[t] = log t!

        total = 1.0  # empty partition
        comp = 0.0
        abs_sum = 1.0
        count = 1
        for parts in _partition_tuples(W, rows):
            w = sum(parts)
            if w == 0:
                continue
            s_l = _jacobi_trudi_det(parts, h_lam)
            if s_l == 0.0:
                continue
            s_x = _jacobi_trudi_det(parts, h_xi)
            if s_x == 0.0:
                continue
            log_a = w * half_logc
            for i, mi in enumerate(parts):
                d = n - 1 - i
                log_a += lg[d] - lg[d + mi]
            term = math.exp(2.0 * log_a) * s_l * s_x
            if alternating and (w & 1):
                term = -term
            count += 1
            abs_sum += abs(term)
            y = term - comp
            t = total + y
            comp = (t - total) - y
            total = t

        tail = _series_tail_bound(p1_lam, xi_max, n, n_xi, rows, W)
        if tail <= opts.rel_tol * abs(total) + 1e-14:
            return EvalResult(total, tail + 4.0 * _EPS * abs_sum, count, "series")
        if W >= opts.max_weight_cap:
            raise ConvergenceError(
                f"series tail not certified at max weight {W}",
                partial=total,
                abs_error=tail,
            )
        W = min(2 * W, opts.max_weight_cap)


def spherical_series(
    x, xi, max_weight: int | None = None, opts: SphericalOptions = _DEFAULT
) -> EvalResult:
    """Series form of the spherical function.

    Handles coincident and zero entries (no Vandermonde division).  The
    initial truncation weight is max_weight (default opts.max_weight) and is
    doubled up to opts.max_weight_cap until the tail bound certifies
    opts.rel_tol; failure to certify raises ConvergenceError with the partial
    sum attached.
    """
    x = _as_point(x)
    xi = _as_point(xi)
    if x.dimension != xi.dimension:
        raise ShapeError(f"dimension mismatch: {x.dimension} vs {xi.dimension}")
    if x.dimension == 0:
        raise DomainError("empty diagonal point")
    w0 = opts.max_weight if max_weight is None else int(max_weight)
    if w0 < 1:
        raise DomainError("max_weight must be positive")
    xiq = [v * v / 4.0 for v in xi.values]
    return _schur_fourier_series(x.values, xiq, True, w0, opts)


def orbital_integral(
    lam, theta, path: str = "auto", opts: SphericalOptions = _DEFAULT
) -> EvalResult:
    """Exponential orbital integral

    I(lam, theta) = 2^{n(n-1)} [1! ... (n-1)!]^2 det(I0(lam_i theta_j))
                    / (D(lam) D(theta)),

    the two-sided unitary average of exp(Re tr(lam u theta v*)).  ``path`` is
    "auto" (determinant when separated, series otherwise), "det", or
    "series"; the series is the positive-kernel analogue of the spherical one
    and handles degenerate inputs, e.g. theta = 0 gives exactly 1.

    Arguments with max(lam) * max(theta) > 700 are refused (RangeError, I0
    overflow guard).
    """
    lam = _as_point(lam)
    theta = _as_point(theta)
    if lam.dimension != theta.dimension:
        raise ShapeError(f"dimension mismatch: {lam.dimension} vs {theta.dimension}")
    n = lam.dimension
    if n == 0:
        raise DomainError("empty diagonal point")
    if path not in ("auto", "det", "series"):
        raise DomainError(f"unknown path {path!r}")
    big = max(lam.values[0] * theta.values[0], 0.0)
    if big > 700.0:
        raise RangeError("orbital_integral overflow guard: max(lam)*max(theta) > 700")

    degenerate = _is_degenerate(lam.values, opts.degeneracy_tol) or _is_degenerate(
        theta.values, opts.degeneracy_tol
    )
    if path == "det" and degenerate:
        raise DegeneracyError("coincident squared entries; use the series path")
    if path == "series" or (path == "auto" and degenerate):
        thq = [v * v / 4.0 for v in theta.values]
        return _schur_fourier_series(lam.values, thq, False, opts.max_weight, opts)

    a, b = (
        (lam.values, theta.values)
        if lam.values >= theta.values
        else (theta.values, lam.values)
    )
    matrix = [[bessel_i0(a[i] * b[j]) for j in range(n)] for i in range(n)]
    num = [2.0] * (n * (n - 1)) + [float(math.factorial(j)) for j in range(1, n)] * 2
    den = _gap_factors(a) + _gap_factors(b)
    value, abs_error = _det_ratio(matrix, num, den, 1.0)
    return EvalResult(value, abs_error, n, "determinant")


def heat_kernel(t: float, lam, theta, opts: SphericalOptions = _DEFAULT) -> float:
    """Radial heat kernel

    H0(t, lam, theta) = 1/(n! (2t)^n) * e^{-(|lam|^2+|theta|^2)/4t}
                        * det(I0(lam_i theta_j / 2t)) / (D(lam) D(theta)).

    Requires t > 0 and squared entries separated beyond opts.degeneracy_tol.
    """
    t = float(t)
    if not (t > 0.0) or not math.isfinite(t):
        raise DomainError("heat_kernel requires t > 0")
    lam = _as_point(lam)
    theta = _as_point(theta)
    if lam.dimension != theta.dimension:
        raise ShapeError(f"dimension mismatch: {lam.dimension} vs {theta.dimension}")
    n = lam.dimension
    for p, name in ((lam, "lam"), (theta, "theta")):
        if _is_degenerate(p.values, opts.degeneracy_tol):
            raise DegeneracyError(f"coincident squared entries in {name}")
    norm2 = math.fsum(v * v for v in lam.values) + math.fsum(
        v * v for v in theta.values
    )
    matrix = [
        [bessel_i0(lam.values[i] * theta.values[j] / (2.0 * t)) for j in range(n)]
        for i in range(n)
    ]
    num = [math.exp(-norm2 / (4.0 * t))]
    den = (
        [float(math.factorial(n))]
        + [2.0 * t] * n
        + _gap_factors(lam.values)
        + _gap_factors(theta.values)
    )
    value, _ = _det_ratio(matrix, num, den, 1.0)
    return value


# ---------------------------------------------------------------------------
# Radial Laplacian


def radial_laplacian(
    F: Callable[[np.ndarray], float],
    lam,
    fd_step: float | None = None,
    opts: SphericalOptions = _DEFAULT,
) -> float:
    """Radial part of the flat Laplacian, applied by central differences:

    LF = sum_i (d^2F/dl_i^2 + (1/l_i) dF/dl_i)
         + 2 sum_{i<j} (d_iF - d_jF)/(l_i - l_j)
         + 2 sum_{i<j} (d_iF + d_jF)/(l_i + l_j).

    Entries must be nonzero and squared entries pairwise separated (the
    divided differences blow up otherwise).  Default step 1e-4 * (1 + |lam|).
    """
    lam = _as_point(lam)
    v = np.array(lam.values, dtype=float)
    n = len(v)
    if n == 0:
        raise DomainError("empty diagonal point")
    if _is_degenerate(lam.values, opts.degeneracy_tol) or v[-1] == 0.0:
        raise DegeneracyError("radial_laplacian needs nonzero, separated entries")
    h = float(fd_step) if fd_step is not None else 1e-4 * (1.0 + float(np.linalg.norm(v)))
    if not (h > 0.0):
        raise DomainError("fd_step must be positive")

    f0 = float(F(v))
    grad = np.empty(n)
    second = np.empty(n)
    for i in range(n):
        vp = v.copy()
        vm = v.copy()
        vp[i] += h
        vm[i] -= h
        fp = float(F(vp))
        fm = float(F(vm))
        grad[i] = (fp - fm) / (2.0 * h)
        second[i] = (fp - 2.0 * f0 + fm) / (h * h)

    pieces = [float(second[i] + grad[i] / v[i]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            pieces.append(2.0 * (grad[i] - grad[j]) / (v[i] - v[j]))
            pieces.append(2.0 * (grad[i] + grad[j]) / (v[i] + v[j]))
    return math.fsum(pieces)


# ---------------------------------------------------------------------------
# Weyl integration constants and angular densities


def weyl_c_n(n: int) -> float:
    """Polar-coordinates constant c_n = 2^n pi^{n^2} / (n! (prod_{j<n} j!)^2).

    Computed in log space and exponentiated; underflows to subnormal/zero for
    n around 31+ (the constant genuinely leaves double range).  n > 50 is
    refused.
    """
    n = int(n)
    if n < 1:
        raise DomainError("weyl_c_n requires n >= 1")
    if n > 50:
        raise RangeError("weyl_c_n is out of double range beyond n = 50")
    log_c = (
        n * math.log(2.0)
        + n * n * math.log(math.pi)
        - math.lgamma(n + 1)
        - 2.0 * math.fsum(math.lgamma(j + 1) for j in range(1, n))
    )
    return math.exp(log_c)


_cmn_cache: dict[tuple[int, int], float] = {}
_cmn_lock = threading.Lock()


def _weyl_density_unnormalized(m: int, n: int, theta: Sequence[float]) -> float:
    th = [float(v) for v in theta]
    acc = 1.0
    for i in range(m):
        for j in range(i + 1, m):
            acc *= (math.sin(th[i] + th[j]) * math.sin(th[i] - th[j])) ** 2
    for v in th:
        acc *= math.sin(2.0 * v) * math.sin(v) ** (2 * (n - 2 * m))
    return abs(acc)


def _weyl_cmn(m: int, n: int) -> float:
    key = (m, n)
    hit = _cmn_cache.get(key)
    if hit is not None:
        return hit
    if m == 1:
        total, _ = integrate.quad(
            lambda t: _weyl_density_unnormalized(1, n, [t]), 0.0, math.pi, limit=200
        )
    elif m == 2:
        total, _ = integrate.dblquad(
            lambda t2, t1: _weyl_density_unnormalized(2, n, [t1, t2]),
            0.0,
            math.pi,
            0.0,
            math.pi,
        )
    else:
        ranges = [(0.0, math.pi)] * m
        total, _ = integrate.nquad(
            lambda *ts: _weyl_density_unnormalized(m, n, ts), ranges
        )
    c = 1.0 / total
    with _cmn_lock:
        return _cmn_cache.setdefault(key, c)


def weyl_density_mn(m: int, n: int, theta: Sequence[float]) -> float:
    """Normalized angular density on [0, pi]^m:

    D_{m,n}(theta) = c_{m,n} | prod_{i<j} sin^2(t_i+t_j) sin^2(t_i-t_j)
                     * prod_i sin(2 t_i) sin^{2(n-2m)}(t_i) |.

    Requires n >= 2m >= 2.  The constant c_{m,n} is fixed by quadrature once
    per (m, n) and cached.  Mass concentrates at theta = (pi/2, ..., pi/2) as
    n grows.
    """
    m = int(m)
    n = int(n)
    if not (n >= 2 * m >= 2):
        raise DomainError("weyl_density_mn requires n >= 2m >= 2")
    th = [float(v) for v in theta]
    if len(th) != m:
        raise ShapeError(f"theta must have length {m}")
    for v in th:
        if not (0.0 <= v <= math.pi):
            raise DomainError("theta entries must lie in [0, pi]")
    return _weyl_cmn(m, n) * _weyl_density_unnormalized(m, n, th)
