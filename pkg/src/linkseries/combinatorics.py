"""Stirling numbers, second-order Eulerian numbers and enumeration oracles.

All Stirling numbers are unsigned.  The first-kind numbers are extended to
arbitrary integer arguments by the duality ``[a; b] = {-b; -a}`` and by
vanishing when the two arguments have opposite signs.
"""
from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import InconsistencyError, OracleScaleError

PARTITION_ORACLE_MAX = 12
PERMUTATION_ORACLE_MAX = 9


class _Triangle:
    """Row table grown on demand from a row recurrence.

    ``step(prev_row, n)`` returns row n.  Growth happens under a lock; rows
    are tuples, so readers never see a partially built row.
    """

    def __init__(self, row0: tuple[int, ...], step: Callable[[tuple[int, ...], int], tuple[int, ...]]):
        self._rows = [row0]
        self._step = step
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    m = len(self._rows)
                    self._rows.append(self._step(self._rows[m - 1], m))
        return self._rows[n]

    def get(self, n: int, k: int) -> int:
        row = self.row(n)
        return row[k] if 0 <= k < len(row) else 0


def _stirling1_step(prev, n):
    # [n;k] = [n-1;k-1] + (n-1)[n-1;k]
    return tuple(
        (prev[k - 1] if k >= 1 else 0) + (n - 1) * (prev[k] if k < len(prev) else 0)
        for k in range(n + 1)
    )


def _stirling2_step(prev, n):
    # {n;k} = {n-1;k-1} + k{n-1;k}
    return tuple(
        (prev[k - 1] if k >= 1 else 0) + k * (prev[k] if k < len(prev) else 0)
        for k in range(n + 1)
    )


def _eulerian2_step(prev, n):
    def at(i):
        return prev[i] if 0 <= i < len(prev) else 0

    return tuple((i + 1) * at(i) + (2 * n - 1 - i) * at(i - 1) for i in range(n))


_STIRLING1 = _Triangle((1,), _stirling1_step)
_STIRLING2 = _Triangle((1,), _stirling2_step)
_EULERIAN2 = _Triangle((1,), _eulerian2_step)


def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind ``[n; k]`` for n >= 0."""
    if n < 0:
        raise ValueError(f"stirling1 needs n >= 0, got {n}")
    return _STIRLING1.get(n, k)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind ``{n; k}`` for n >= 0."""
    if n < 0:
        raise ValueError(f"stirling2 needs n >= 0, got {n}")
    return _STIRLING2.get(n, k)


def stirling1_ext(a: int, b: int) -> int:
    """``[a; b]`` for all integers a, b."""
    if a >= 0 and b >= 0:
        return stirling1(a, b)
    if a <= 0 and b <= 0:
        return stirling2(-b, -a)
    return 0


def stirling2_ext(a: int, b: int) -> int:
    """``{a; b}`` for all integers a, b (companion duality ``{a; b} = [-b; -a]``)."""
    if a >= 0 and b >= 0:
        return stirling2(a, b)
    if a <= 0 and b <= 0:
        return stirling1(-b, -a)
    return 0


def eulerian2(n: int, i: int) -> int:
    """Second-order Eulerian number ``<<n>>_i``; zero outside ``0 <= i < max(n, 1)``."""
    if n < 0:
        raise ValueError(f"eulerian2 needs n >= 0, got {n}")
    return _EULERIAN2.get(n, i)


def stirling_row(kind: str, n: int) -> tuple[int, ...]:
    tables = {"first": _STIRLING1, "second": _STIRLING2, "eulerian2": _EULERIAN2}
    return tables[kind].row(n)


def binomial_int(y: int, m: int) -> int:
    """``C(y, m)`` for any integer y and m >= 0, as falling factorial over m!."""
    if m < 0:
        return 0
    num = 1
    for t in range(m):
        num *= y - t
    q, rem = divmod(num, math.factorial(m))
    if rem:
        raise InconsistencyError(f"falling factorial of {y} not divisible by {m}!")
    return q


@dataclass(frozen=True)
class BinomialBasisPoly:
    """``sum(coeffs[i] * C(x + i, 2 * order))``, a degree ``2 * order`` polynomial in x."""

    order: int
    coeffs: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return poly_eval_binomial_basis(self, x)


def stirling1_poly(n: int) -> BinomialBasisPoly:
    """The polynomial ``x -> [x; x - n]`` with second-order Eulerian coefficients."""
    if n < 0:
        raise ValueError(f"order must be >= 0, got {n}")
    return BinomialBasisPoly(n, tuple(eulerian2(n, i) for i in range(n + 1)))


def poly_eval_binomial_basis(p: BinomialBasisPoly, x: int) -> int:
    return sum(c * binomial_int(x + i, 2 * p.order) for i, c in enumerate(p.coeffs) if c)


# Oracles.  Deliberately naive: every object is generated and inspected.


@lru_cache(maxsize=None)
def _block_count_histogram(n: int) -> tuple[int, ...]:
    # restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[:i])
    hist = [0] * (n + 1)
    if n == 0:
        hist[0] = 1
        return tuple(hist)
    a = [0] * n
    maxes = [0] * n  # maxes[i] = max(a[:i+1])
    while True:
        hist[maxes[-1] + 1] += 1
        i = n - 1
        while i > 0 and a[i] > maxes[i - 1]:
            i -= 1
        if i == 0:
            break
        a[i] += 1
        maxes[i] = max(maxes[i - 1], a[i])
        for t in range(i + 1, n):
            a[t] = 0
            maxes[t] = maxes[i]
    return tuple(hist)


def count_set_partitions(n: int, k: int) -> int:
    """Number of partitions of an n-set into exactly k blocks, by enumeration."""
    if n > PARTITION_ORACLE_MAX:
        raise OracleScaleError(f"partition oracle limited to n <= {PARTITION_ORACLE_MAX}")
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    hist = _block_count_histogram(n)
    return hist[k] if k <= n else 0


def _cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if not seen[start]:
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


@lru_cache(maxsize=None)
def _cycle_count_histogram(n: int) -> tuple[int, ...]:
    hist = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        hist[_cycle_count(perm)] += 1
    return tuple(hist)


def count_cycle_perms(n: int, k: int) -> int:
    """Number of permutations of n elements with exactly k cycles, by enumeration."""
    if n > PERMUTATION_ORACLE_MAX:
        raise OracleScaleError(f"permutation oracle limited to n <= {PERMUTATION_ORACLE_MAX}")
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    hist = _cycle_count_histogram(n)
    return hist[k] if k <= n else 0
