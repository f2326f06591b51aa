"""Symmetric-function algebra on real variable lists.

Partitions index everything downstream: Schur polynomials enter the series
form of the matrix-argument evaluators, and the power-sum / complete-homogeneous
bases carry the scaling limit.  All evaluation routines sort their variable
list once (descending), so results are bitwise invariant under permutation of
the inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of nonnegative integers, trailing zeros trimmed.

    >>> Partition((3, 1, 0)).parts
    (3, 1)
    >>> Partition(()).weight
    0
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        cleaned = tuple(int(p) for p in parts)
        if any(p < 0 for p in cleaned):
            raise DomainError(f"partition parts must be nonnegative: {cleaned}")
        if any(cleaned[i] < cleaned[i + 1] for i in range(len(cleaned) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing: {cleaned}")
        while cleaned and cleaned[-1] == 0:
            cleaned = cleaned[:-1]
        object.__setattr__(self, "parts", cleaned)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def _as_sorted_vars(x: Sequence[float]) -> list[float]:
    vals = [float(v) for v in x]
    for v in vals:
        if not np.isfinite(v):
            raise DomainError("variables must be finite")
    vals.sort(reverse=True)
    return vals


def power_p(m: int, x: Sequence[float]) -> float:
    """Power sum p_m(x) = sum_k x_k^m for m >= 1."""
    if m < 1:
        raise DomainError("power sums are indexed from m = 1")
    return float(sum(v**m for v in _as_sorted_vars(x)))


def complete_h_table(x: Sequence[float], max_m: int) -> list[float]:
    """[h_0(x), ..., h_max_m(x)] by the one-variable-at-a-time recurrence.

    h_m(x_1..x_k) = h_m(x_1..x_{k-1}) + x_k h_{m-1}(x_1..x_k); subtraction-free
    for nonnegative variables.
    """
    if max_m < 0:
        raise DomainError("max_m must be nonnegative")
    h = [0.0] * (max_m + 1)
    h[0] = 1.0
    for xk in _as_sorted_vars(x):
        for j in range(1, max_m + 1):
            h[j] += xk * h[j - 1]
    return h


def complete_h(m: int, x: Sequence[float]) -> float:
    """Complete homogeneous sum h_m(x); h_0 = 1, h_m(()) = 0 for m >= 1."""
    if m < 0:
        raise DomainError("complete_h is indexed from m = 0")
    return complete_h_table(x, m)[m]


def newton_h_from_p(p: Sequence[float]) -> list[float]:
    """Recover [h_0..h_M] from power sums [p_1..p_M] via Newton's identities.

    m * h_m = sum_{i=1..m} p_i * h_{m-i}.
    """
    M = len(p)
    h = [0.0] * (M + 1)
    h[0] = 1.0
    for m in range(1, M + 1):
        acc = 0.0
        for i in range(1, m + 1):
            acc += p[i - 1] * h[m - i]
        h[m] = acc / m
    return h


def _jacobi_trudi_det(parts: tuple[int, ...], h: Sequence[float]) -> float:
    """det(h_{m_i - i + j})_{1<=i,j<=l} with h_k = 0 for k < 0.

    Closed forms for l <= 3, LU with partial pivoting (numpy) beyond.
    """

    def hv(k: int) -> float:
        return h[k] if k >= 0 else 0.0

    l = len(parts)
    if l == 0:
        return 1.0
    if l == 1:
        return hv(parts[0])
    if l == 2:
        a, b = parts
        return hv(a) * hv(b) - hv(a + 1) * hv(b - 1)
    if l == 3:
        m = [[hv(parts[i] - i + j) for j in range(3)] for i in range(3)]
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
    mat = np.array(
        [[hv(parts[i] - (i + 1) + (j + 1)) for j in range(l)] for i in range(l)],
        dtype=float,
    )
    return float(np.linalg.det(mat))


def schur(m: Partition | Sequence[int], x: Sequence[float]) -> float:
    """Schur polynomial s_m(x) via the Jacobi-Trudi determinant.

    Returns 0.0 exactly when m has more nonzero parts than x has nonzero
    entries (stability under zero variables).
    """
    part = m if isinstance(m, Partition) else Partition(m)
    vals = _as_sorted_vars(x)
    nonzero = sum(1 for v in vals if v != 0.0)
    if part.length > nonzero:
        return 0.0
    if part.length == 0:
        return 1.0
    max_index = part.parts[0] + part.length - 1
    h = complete_h_table(vals, max_index)
    return _jacobi_trudi_det(part.parts, h)


def _partition_tuples(max_weight: int, max_length: int) -> Iterator[tuple[int, ...]]:
    # weight ascending; within a weight, lexicographically descending
    def gen(remaining: int, cap: int, slots: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first, slots - 1):
                yield (first,) + rest

    for w in range(max_weight + 1):
        yield from gen(w, w, max_length)


def enumerate_partitions(max_weight: int, max_length: int) -> Iterator[Partition]:
    """Every partition with weight <= max_weight and at most max_length parts.

    Deterministic order: weight ascending, then lexicographically descending
    within each weight, e.g. (2), (1, 1).
    """
    if max_weight < 0 or max_length < 0:
        raise DomainError("max_weight and max_length must be nonnegative")
    for parts in _partition_tuples(max_weight, max_length):
        yield Partition(parts)


def cauchy_rhs(x: Sequence[float], y: Sequence[float]) -> float:
    """prod_{i,j} 1/(1 - x_i y_j); requires every |x_i y_j| < 1."""
    xs = _as_sorted_vars(x)
    ys = _as_sorted_vars(y)
    acc = 1.0
    for xi in xs:
        for yj in ys:
            q = xi * yj
            if abs(q) >= 1.0:
                raise DomainError(f"cauchy_rhs requires |x_i y_j| < 1, got {q!r}")
            acc /= 1.0 - q
    return acc


def cauchy_lhs(x: Sequence[float], y: Sequence[float], max_weight: int) -> float:
    """sum over partitions of weight <= max_weight of s_m(x) s_m(y).

    Truncation of the Cauchy identity; partitions longer than either variable
    list contribute 0 and are skipped.
    """
    xs = _as_sorted_vars(x)
    ys = _as_sorted_vars(y)
    max_len = min(len(xs), len(ys))
    top = max_weight + max_len
    hx = complete_h_table(xs, top)
    hy = complete_h_table(ys, top)
    acc = 0.0
    for parts in _partition_tuples(max_weight, max_len):
        acc += _jacobi_trudi_det(parts, hx) * _jacobi_trudi_det(parts, hy)
    return acc
