"""Exact integer polynomials, truncated power series and binomial sums.

Coefficients are plain Python ints, so every operation is exact at any
magnitude.  Polynomials carry a variable tag (``"x"``, ``"u"`` or ``"y"``)
so that the change of variable ``u = x**(N-1)`` is always explicit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import NonInvertibleError, RangeError, UsageError

VARIABLES = ("x", "u", "y")


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of degree i."""

    coeffs: tuple[int, ...] = ()
    var: str = "x"

    def __post_init__(self):
        if self.var not in VARIABLES:
            raise UsageError(f"unknown variable tag {self.var!r}")
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @classmethod
    def constant(cls, c: int, var: str = "x") -> IntPolynomial:
        return cls((c,), var)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1, var: str = "x") -> IntPolynomial:
        return cls((0,) * degree + (coeff,), var)

    @property
    def degree(self) -> int | float:
        # -inf for the zero polynomial
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other, self.var)
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other, self.var)
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return poly_mul(self, other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise UsageError("negative powers are not polynomials")
        out = IntPolynomial.constant(1, self.var)
        for _ in range(n):
            out = poly_mul(out, self)
        return out

    def __call__(self, t: int) -> int:
        return poly_eval(self, t)

    def scale(self, c: int) -> IntPolynomial:
        return IntPolynomial(tuple(c * a for a in self.coeffs), self.var)

    def spread(self, m: int, var: str = "x") -> IntPolynomial:
        """Substitute ``var**m`` for the variable: degree j moves to degree m*j."""
        if m < 1:
            raise UsageError(f"substitution power must be >= 1, got {m}")
        out = [0] * (m * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for j, c in enumerate(self.coeffs):
            out[m * j] = c
        return IntPolynomial(tuple(out), var)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                coeff = "" if c == 1 else "-" if c == -1 else str(c)
                terms.append(coeff + mono)
        return " + ".join(terms).replace("+ -", "- ")


def _check_vars(a: IntPolynomial, b: IntPolynomial) -> None:
    if a.var != b.var:
        raise UsageError(f"variable mismatch: {a.var!r} vs {b.var!r}")


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    _check_vars(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    return IntPolynomial(tuple(a[i] + b[i] for i in range(n)), a.var)


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    _check_vars(a, b)
    if a.is_zero() or b.is_zero():
        return IntPolynomial((), a.var)
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            out[i + j] += ai * bj
    return IntPolynomial(tuple(out), a.var)


def poly_eval(p: IntPolynomial, t: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known exactly in degrees ``0..trunc`` (inclusive)."""

    poly: IntPolynomial
    trunc: int

    def __post_init__(self):
        if self.trunc < 0:
            raise UsageError(f"truncation degree must be >= 0, got {self.trunc}")
        if len(self.poly.coeffs) > self.trunc + 1:
            object.__setattr__(
                self, "poly", IntPolynomial(self.poly.coeffs[: self.trunc + 1], self.poly.var)
            )

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], trunc: int, var: str = "x") -> TruncatedSeries:
        return cls(IntPolynomial(tuple(coeffs), var), trunc)

    @property
    def var(self) -> str:
        return self.poly.var

    def coefficient(self, k: int) -> int:
        if not 0 <= k <= self.trunc:
            raise RangeError(f"degree {k} outside 0..{self.trunc}")
        return self.poly[k]

    def coefficients(self) -> list[int]:
        """All coefficients of degrees 0..trunc, zeros included."""
        return [self.poly[k] for k in range(self.trunc + 1)]

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return TruncatedSeries(self.poly + other.poly, min(self.trunc, other.trunc))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return TruncatedSeries(self.poly - other.poly, min(self.trunc, other.trunc))

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-self.poly, self.trunc)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        d = min(self.trunc, other.trunc)
        a = IntPolynomial(self.poly.coeffs[: d + 1], self.var)
        b = IntPolynomial(other.poly.coeffs[: d + 1], other.var)
        return TruncatedSeries(poly_mul(a, b), d)


def series_inverse(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with constant term +1 or -1."""
    c0 = s.poly[0]
    if c0 not in (1, -1):
        raise NonInvertibleError(f"constant term {c0} is not a unit in Z")
    d = s.trunc
    a = [s.poly[k] for k in range(d + 1)]
    t = [0] * (d + 1)
    t[0] = c0
    for k in range(1, d + 1):
        acc = 0
        for i in range(1, k + 1):
            if a[i]:
                acc += a[i] * t[k - i]
        # c0 is its own inverse
        t[k] = -c0 * acc
    return TruncatedSeries(IntPolynomial(tuple(t), s.var), d)


def substitute_power(s: TruncatedSeries, m: int, var: str = "x") -> TruncatedSeries:
    """Replace the series variable by ``var**m``; truncation scales to ``m * trunc``."""
    if m < 1:
        raise UsageError(f"substitution power must be >= 1, got {m}")
    return TruncatedSeries(s.poly.spread(m, var), m * s.trunc)


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise UsageError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def alt_binomial_sum(f: Callable[[int], int] | Sequence[int], p: int) -> int:
    """``sum((-1)**r * C(p, r) * f(r) for r in 0..p)``.

    ``f`` may be a callable or a sequence indexed from 0.  The result is
    ``(-1)**p`` times the p-th forward difference of ``f`` at 0.
    """
    if p < 0:
        raise UsageError(f"p must be >= 0, got {p}")
    get = f.__getitem__ if isinstance(f, Sequence) else f
    total = 0
    c = 1  # C(p, r), updated in place
    for r in range(p + 1):
        total += c * get(r) if r % 2 == 0 else -c * get(r)
        c = c * (p - r) // (r + 1)
    return total


def binomial_transform(seq: Sequence[int]) -> list[int]:
    """Apply ``alt_binomial_sum`` for every p; the map is an involution."""
    return [alt_binomial_sum(seq, p) for p in range(len(seq))]
