"""Monte Carlo oracles over the two-sided unitary action.

Reproducibility contract
------------------------
* Core generator: Philox-4x64 (counter-based), keyed by the 128-bit pair
  (master_seed, stream_id).  Streams with distinct ids are independent.
* Gaussians are produced by inverse-transform sampling: 53-bit uniforms
  u = (k + 1/2) * 2^-53 with k drawn from [0, 2^53), mapped through the
  inverse normal CDF (scipy.special.ndtri).  No ziggurat, no rejection, so
  the stream consumption per sample is fixed and platform independent.
* Estimators consume samples in fixed-size blocks of 8192; block b draws all
  of its variates from stream (master_seed, b) in a documented order, and
  block results are reduced in index order with exact summation (math.fsum).
  The estimate therefore depends only on (master_seed, n_samples), not on
  any parallel execution plan.

Haar unitaries: complex Ginibre matrix, QR decomposition, then each column of
Q is multiplied by the phase of the matching diagonal entry of R.  Without
the phase correction QR output is not Haar distributed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.special import ndtri

from .errors import DomainError, RangeError, ShapeError
from .polya import OmegaParam
from .spherical import DiagonalPoint

_BLOCK = 8192
_MASK64 = (1 << 64) - 1
_INV53 = 2.0**-53


class RngStream:
    """One reproducible substream: (master_seed, stream_id) -> Philox-4x64."""

    def __init__(self, master_seed: int, stream_id: int = 0):
        self.master_seed = int(master_seed)
        self.stream_id = int(stream_id)
        key = np.array(
            [self.master_seed & _MASK64, self.stream_id & _MASK64], dtype=np.uint64
        )
        self._gen = np.random.Generator(np.random.Philox(key=key))

    def uniforms(self, shape) -> np.ndarray:
        """Open-interval (0,1) uniforms with exactly 53 random bits each."""
        k = self._gen.integers(0, 1 << 53, size=shape, dtype=np.uint64)
        return (k.astype(np.float64) + 0.5) * _INV53

    def normals(self, shape) -> np.ndarray:
        """Standard normals by the inverse CDF applied to uniforms()."""
        return ndtri(self.uniforms(shape))

    def complex_ginibre(self, shape) -> np.ndarray:
        """iid CN(0,1) entries: one normals() call of shape (2, *shape),
        first slab real parts, second slab imaginary parts."""
        z = self.normals((2,) + tuple(shape))
        return (z[0] + 1j * z[1]) / math.sqrt(2.0)


@dataclass(frozen=True)
class McEstimate:
    """Sample mean with its standard error.

    imag_mean / imag_std_error carry the orthogonal-component diagnostic for
    oscillatory integrands (it should be 0 within noise) and are None when
    the integrand is real by construction.
    """

    mean: float
    std_error: float
    n_samples: int
    master_seed: int
    imag_mean: float | None = None
    imag_std_error: float | None = None


def haar_unitary(n: int, stream: RngStream) -> np.ndarray:
    """One n x n Haar-distributed unitary (Ginibre + QR + phase fix)."""
    if n < 1:
        raise DomainError("haar_unitary requires n >= 1")
    z = stream.complex_ginibre((n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    absd = np.abs(d)
    ph = np.where(absd > 0.0, d / np.where(absd > 0.0, absd, 1.0), 1.0)
    return q * ph


def _haar_isometry_batch(stream: RngStream, count: int, n: int, m: int) -> np.ndarray:
    # first m columns of Haar unitaries: QR of an n x m Ginibre slab, phased
    z = stream.complex_ginibre((count, n, m))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=1, axis2=2)
    absd = np.abs(d)
    ph = np.where(absd > 0.0, d / np.where(absd > 0.0, absd, 1.0), 1.0)
    return q * ph[:, None, :]


def _blocks(n_samples: int):
    b = 0
    done = 0
    while done < n_samples:
        take = min(_BLOCK, n_samples - done)
        yield b, take
        b += 1
        done += take


def _finalize(sums: list[float], squares: list[float], n: int) -> tuple[float, float]:
    s1 = math.fsum(sums)
    s2 = math.fsum(squares)
    mean = s1 / n
    var = max(0.0, (s2 - n * mean * mean) / (n - 1)) if n > 1 else 0.0
    return mean, math.sqrt(var / n)


def _check_samples(n_samples: int) -> int:
    n_samples = int(n_samples)
    if n_samples < 100:
        raise DomainError("need at least 100 samples")
    return n_samples


def mc_spherical(x, xi, n_samples: int, seed: int = 0) -> McEstimate:
    """Haar average of exp(i <xi, U x V*>): mean of cos over samples of
    z = sum_j xi_j Re (U diag(x) V*)_{jj}, with the sin component reported as
    the imaginary-part diagnostic.

    Per block and sample the draw order is: U slab, then V slab.
    """
    x = x if isinstance(x, DiagonalPoint) else DiagonalPoint(x)
    xi = xi if isinstance(xi, DiagonalPoint) else DiagonalPoint(xi)
    if x.dimension != xi.dimension:
        raise ShapeError(f"dimension mismatch: {x.dimension} vs {xi.dimension}")
    n_samples = _check_samples(n_samples)
    n = x.dimension
    xv = np.array(x.values)
    xiv = np.array(xi.values)

    sc, sc2, ss, ss2 = [], [], [], []
    for b, take in _blocks(n_samples):
        stream = RngStream(seed, b)
        u = _haar_isometry_batch(stream, take, n, n)
        v = _haar_isometry_batch(stream, take, n, n)
        diag = np.einsum("bja,a,bja->bj", u, xv.astype(complex), v.conj())
        z = diag.real @ xiv
        c = np.cos(z)
        s = np.sin(z)
        sc.append(float(np.sum(c)))
        sc2.append(float(np.sum(c * c)))
        ss.append(float(np.sum(s)))
        ss2.append(float(np.sum(s * s)))
    mean, se = _finalize(sc, sc2, n_samples)
    imean, ise = _finalize(ss, ss2, n_samples)
    return McEstimate(mean, se, n_samples, int(seed), imean, ise)


def mc_orbital_exp(lam, theta, n_samples: int, seed: int = 0) -> McEstimate:
    """Haar average of exp(Re tr(diag(lam) U diag(theta) V*)).

    The integrand is log-normal-like with heavy skew; the variance guard
    refuses |lam| * |theta| > 10 (Euclidean norms) where the estimator is
    useless at any affordable sample count.
    """
    lam = lam if isinstance(lam, DiagonalPoint) else DiagonalPoint(lam)
    theta = theta if isinstance(theta, DiagonalPoint) else DiagonalPoint(theta)
    if lam.dimension != theta.dimension:
        raise ShapeError(f"dimension mismatch: {lam.dimension} vs {theta.dimension}")
    n_samples = _check_samples(n_samples)
    lv = np.array(lam.values)
    tv = np.array(theta.values)
    if float(np.linalg.norm(lv)) * float(np.linalg.norm(tv)) > 10.0:
        raise RangeError("mc_orbital_exp variance guard: |lam|*|theta| > 10")
    n = lam.dimension

    s1, s2 = [], []
    for b, take in _blocks(n_samples):
        stream = RngStream(seed, b)
        u = _haar_isometry_batch(stream, take, n, n)
        v = _haar_isometry_batch(stream, take, n, n)
        diag = np.einsum("bja,a,bja->bj", u, tv.astype(complex), v.conj())
        z = diag.real @ lv
        e = np.exp(z)
        s1.append(float(np.sum(e)))
        s2.append(float(np.sum(e * e)))
    mean, se = _finalize(s1, s2, n_samples)
    return McEstimate(mean, se, n_samples, int(seed))


def _phi_omega_singvals(omega: OmegaParam, s: np.ndarray) -> np.ndarray:
    # s: (batch, n) singular values; returns prod_j Pi(omega, s_j) per row
    q = 0.25 * s * s
    vals = np.exp(-omega.gamma * np.sum(q, axis=1))
    for a in omega.alpha:
        vals = vals / np.prod(1.0 + a * q, axis=1)
    return vals


def mc_biinvariant_avg(
    omega: OmegaParam, x, y, n: int, n_samples: int, seed: int = 0
) -> McEstimate:
    """Average of phi_omega over a doubly averaged translate:

        E_{k1,k2} [ phi_omega( X + k1 Y k2* ) ],

    where X, Y embed the m-vectors x, y as the leading diagonal block of an
    n x n matrix (n >= 2m).  Only the first m columns of each Haar unitary
    matter, so the samplers draw n x m isometries: V1 slab then V2 slab.
    """
    xs = DiagonalPoint(x)
    ys = DiagonalPoint(y)
    m = xs.dimension
    if ys.dimension != m:
        raise ShapeError("x and y must have the same length")
    n = int(n)
    if n < 2 * m:
        raise DomainError(f"need n >= 2m = {2 * m}, got n = {n}")
    n_samples = _check_samples(n_samples)
    xfull = np.zeros(n)
    xfull[:m] = xs.values
    yv = np.array(ys.values, dtype=complex)
    idx = np.arange(n)

    s1, s2 = [], []
    for b, take in _blocks(n_samples):
        stream = RngStream(seed, b)
        v1 = _haar_isometry_batch(stream, take, n, m)
        v2 = _haar_isometry_batch(stream, take, n, m)
        a = np.zeros((take, n, n), dtype=complex)
        a[:, idx, idx] = xfull
        a += np.einsum("bim,m,bjm->bij", v1, yv, v2.conj())
        sv = np.linalg.svd(a, compute_uv=False)
        vals = _phi_omega_singvals(omega, sv)
        s1.append(float(np.sum(vals)))
        s2.append(float(np.sum(vals * vals)))
    mean, se = _finalize(s1, s2, n_samples)
    return McEstimate(mean, se, n_samples, int(seed))


def ambient_laplacian_fd(
    f: Callable[[np.ndarray], float], x: np.ndarray, fd_step: float | None = None
) -> float:
    """Flat Laplacian of f at the matrix x by central second differences over
    all 2n^2 real coordinates (real and imaginary part of every entry)."""
    x = np.asarray(x, dtype=complex)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {x.shape}")
    n = x.shape[0]
    h = (
        float(fd_step)
        if fd_step is not None
        else 1e-4 * (1.0 + float(np.linalg.norm(x)))
    )
    if not (h > 0.0):
        raise DomainError("fd_step must be positive")
    f0 = float(f(x))
    pieces = []
    for j in range(n):
        for k in range(n):
            for unit in (1.0, 1.0j):
                step = np.zeros((n, n), dtype=complex)
                step[j, k] = h * unit
                pieces.append(float(f(x + step)) - 2.0 * f0 + float(f(x - step)))
    return math.fsum(pieces) / (h * h)
