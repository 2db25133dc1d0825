"""E1 page, Euler series and growth estimates for the link model.

Everything here is exact integer arithmetic except :func:`growth_rate`,
whose outputs are floats computed from exact ratios.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, NamedTuple, Sequence

from .combinatorics import stirling1_ext, stirling2
from .conf_poincare import ModelParams, link_term_poincare
from .errors import (
    InconsistencyError,
    RangeError,
    SlopeError,
    UndefinedRatioError,
    UsageError,
)
from .exact_arith import (
    IntPolynomial,
    TruncatedSeries,
    alt_binomial_sum,
    binomial,
    poly_eval,
    series_inverse,
    substitute_power,
)


@dataclass(frozen=True)
class BigradedDimTable:
    """Dimensions of E1^{p,q} for 0 <= p <= p_max.

    ``entries`` holds the nonzero dimensions only; lookups of any other
    (p, q) with p in range return 0.
    """

    params: ModelParams
    p_max: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        if not 0 <= p <= self.p_max:
            raise KeyError(pq)
        return self.entries.get(pq, 0)

    def top_degree(self, p: int) -> int:
        """Largest q that can carry a nonzero entry in column p."""
        return 0 if p == 0 else (self.params.ell * p - 1) * self.params.step

    def lattice_cells(self):
        """All (p, q) with q a lattice degree up to the column's top degree."""
        step = self.params.step
        for p in range(self.p_max + 1):
            for q in range(0, self.top_degree(p) + 1, step):
                yield p, q


class EulerSeriesReport(NamedTuple):
    params: ModelParams
    trunc: int
    summed: TruncatedSeries
    closed: TruncatedSeries
    agree: bool


def e1_line(p: int, params: ModelParams) -> IntPolynomial:
    """Poincare polynomial in x of the column E1^{p,*}."""
    if p < 0:
        raise UsageError(f"p must be >= 0, got {p}")
    line = IntPolynomial((), "x")
    for i in range(p + 1):
        sign = 1 if (p - i) % 2 == 0 else -1
        line = line + link_term_poincare(i, params).scale(sign * binomial(p, i))
    if any(c < 0 for c in line.coeffs):
        raise InconsistencyError(f"negative dimension in column p={p} for {params}")
    return line


def e1_table(p_max: int, params: ModelParams) -> BigradedDimTable:
    if p_max < 0:
        raise UsageError(f"p_max must be >= 0, got {p_max}")
    entries = {}
    for p in range(p_max + 1):
        for q, dim in enumerate(e1_line(p, params).coeffs):
            if dim:
                entries[(p, q)] = dim
    return BigradedDimTable(params, p_max, entries)


def empirical_slopes(table: BigradedDimTable) -> tuple[Fraction, Fraction]:
    """Smallest and largest q/p over nonzero entries with p >= 1."""
    ratios = [Fraction(q, p) for (p, q), dim in table.entries.items() if p >= 1 and dim]
    if not ratios:
        raise SlopeError("no nonzero entry with p >= 1; slopes are undefined")
    return min(ratios), max(ratios)


def _stirling_term(ell: int, j: int) -> Callable[[int], int]:
    # r -> [ell*r; ell*r - j], a polynomial of degree 2j in r
    return lambda r: stirling1_ext(ell * r, ell * r - j)


def _certified_difference_sum(q: Callable[[int], int], degree: int) -> int:
    """Sum of all alternating binomial sums of a degree-``degree`` polynomial ``q``.

    The terms vanish beyond p = degree; the first vanishing term is checked.
    """
    total = sum(alt_binomial_sum(q, p) for p in range(degree + 1))
    tail = alt_binomial_sum(q, degree + 1)
    if tail != 0:
        raise InconsistencyError(f"alternating sum at p={degree + 1} is {tail}, expected 0")
    return total


def _on_lattice(u_series: TruncatedSeries, params: ModelParams, D: int) -> TruncatedSeries:
    s = substitute_power(u_series, params.step, "x")
    # degrees between step*J and D are off the lattice, hence known zeros
    return TruncatedSeries(s.poly, D)


def euler_series_summed(params: ModelParams, D: int) -> TruncatedSeries:
    """Euler series of E1 from the double alternating sum over the model's terms."""
    if D < 0:
        raise UsageError(f"truncation degree must be >= 0, got {D}")
    J = D // params.step
    coeffs = [
        _certified_difference_sum(_stirling_term(params.ell, j), 2 * j) for j in range(J + 1)
    ]
    return _on_lattice(TruncatedSeries.from_coeffs(coeffs, J, "u"), params, D)


def _product_series(factors: Sequence[int], J: int) -> TruncatedSeries:
    # prod (1 - m u) over m in factors, in u
    p = IntPolynomial.constant(1, "u")
    for m in factors:
        p = p * IntPolynomial((1, -m), "u")
    return TruncatedSeries(p, J)


def euler_series_closed(params: ModelParams, D: int) -> TruncatedSeries:
    """Expansion of ``1 / ((1 - u)(1 - 2u)...(1 - ell u))`` with u = x^(N-1)."""
    if D < 0:
        raise UsageError(f"truncation degree must be >= 0, got {D}")
    J = D // params.step
    inv = series_inverse(_product_series(range(1, params.ell + 1), J))
    return _on_lattice(inv, params, D)


def knot_power_series(params: ModelParams, D: int) -> TruncatedSeries:
    """Expansion of ``1 / (1 - u)^ell`` with u = x^(N-1)."""
    if D < 0:
        raise UsageError(f"truncation degree must be >= 0, got {D}")
    J = D // params.step
    inv = series_inverse(_product_series([1] * params.ell, J))
    return _on_lattice(inv, params, D)


def relative_series(params: ModelParams, D: int) -> TruncatedSeries:
    """Euler series of the pair (links, ell-fold product of knots)."""
    return euler_series_closed(params, D) - knot_power_series(params, D)


def euler_report(params: ModelParams, D: int) -> EulerSeriesReport:
    summed = euler_series_summed(params, D)
    closed = euler_series_closed(params, D)
    return EulerSeriesReport(params, D, summed, closed, summed == closed)


def tot_lower_bound(n: int, alpha, series: TruncatedSeries) -> tuple[int, tuple[int, int]]:
    """Lower bound on the total dimension of Tot(E2) over a window of degrees.

    Returns ``(|chi_n|, (ceil(n (1 - 1/alpha)), n))`` where ``chi_n`` is the
    x^n coefficient of the Euler series.
    """
    alpha = Fraction(alpha)
    if alpha <= 1:
        raise SlopeError(f"lower slope must exceed 1, got {alpha}")
    if not 0 <= n <= series.trunc:
        raise RangeError(f"degree {n} outside 0..{series.trunc}")
    start = math.ceil(n * (1 - 1 / alpha))
    return abs(series.coefficient(n)), (start, n)


def lattice_coefficients(series: TruncatedSeries, N: int) -> list[int]:
    step = N - 1
    return [series.coefficient(step * j) for j in range(series.trunc // step + 1)]


def growth_rate(series: TruncatedSeries, N: int, tail: int) -> tuple[float, float]:
    """Mean ratio of consecutive lattice coefficients over the last ``tail`` steps.

    Returns ``(u_ratio, x_rate)`` with ``x_rate = u_ratio ** (1 / (N - 1))``.
    """
    if tail < 1:
        raise UsageError(f"tail must be >= 1, got {tail}")
    coeffs = lattice_coefficients(series, N)
    if len(coeffs) < tail + 1:
        raise UndefinedRatioError(f"need {tail + 1} lattice coefficients, have {len(coeffs)}")
    window = coeffs[-(tail + 1):]
    if any(c == 0 for c in window):
        raise UndefinedRatioError("zero coefficient in the tail window")
    mean = sum(Fraction(b, a) for a, b in zip(window, window[1:])) / tail
    u_ratio = float(mean)
    return u_ratio, u_ratio ** (1.0 / (N - 1))


class DifferenceSumCheck(NamedTuple):
    ok: bool
    s_poly: IntPolynomial
    q_at_minus_one: int


def shifted_rising_factorial(d: int, var: str = "x") -> IntPolynomial:
    """``(r + 1)(r + 2)...(r + d)`` as a polynomial."""
    p = IntPolynomial.constant(1, var)
    for i in range(1, d + 1):
        p = p * IntPolynomial((i, 1), var)
    return p


def check_difference_sum(q_coeffs: Sequence[int]) -> DifferenceSumCheck:
    """Check that the alternating binomial sums of a polynomial add up to its value at -1.

    ``s_poly`` is the generating polynomial ``sum(s_p x^p)`` of the sums.
    """
    if not q_coeffs:
        raise UsageError("polynomial coefficients must be nonempty")
    q = IntPolynomial(tuple(q_coeffs), "x")
    d = max(len(q.coeffs) - 1, 0)
    s = [alt_binomial_sum(lambda r: poly_eval(q, r), p) for p in range(d + 3)]
    vanishes = all(v == 0 for v in s[d + 1:])
    q_m1 = poly_eval(q, -1)
    return DifferenceSumCheck(vanishes and sum(s) == q_m1, IntPolynomial(tuple(s), "x"), q_m1)


class StirlingSumCheck(NamedTuple):
    ok: bool
    lhs: int
    rhs: int


def check_stirling_sum(ell: int, j: int) -> StirlingSumCheck:
    """Compare the double alternating sum of ``[ell r; ell r - j]`` with ``{ell + j; ell}``."""
    if ell < 1 or j < 1:
        raise UsageError(f"need ell >= 1 and j >= 1, got ell={ell}, j={j}")
    lhs = _certified_difference_sum(_stirling_term(ell, j), 2 * j)
    rhs = stirling2(ell + j, ell)
    return StirlingSumCheck(lhs == rhs, lhs, rhs)


# names used by the published interface
verify_lemma_5_3 = check_difference_sum
verify_prop_5_2 = check_stirling_sum
