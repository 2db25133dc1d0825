from fractions import Fraction
from math import factorial

import pytest

from linkseries.combinatorics import count_set_partitions, stirling2
from linkseries.conf_poincare import ModelParams
from linkseries.engine import (
    e1_line,
    e1_table,
    empirical_slopes,
    euler_report,
    euler_series_closed,
    euler_series_summed,
    growth_rate,
    knot_power_series,
    lattice_coefficients,
    relative_series,
    shifted_rising_factorial,
    tot_lower_bound,
    check_difference_sum,
    check_stirling_sum,
)
from linkseries.errors import RangeError, SlopeError, UndefinedRatioError
from linkseries.exact_arith import IntPolynomial

from oracles import naive_mul, pascal_binomial

L2N4 = ModelParams(4, 2)


def conf_u_by_hand(k):
    """Coefficients of (1+u)(1+2u)...(1+(k-1)u) via naive convolution."""
    out = [1]
    for j in range(1, k):
        out = naive_mul(out, [1, j])
    return out


def e1_u_by_hand(p, ell):
    out = [0] * (ell * p + 1)
    for i in range(p + 1):
        sign = (-1) ** (p - i)
        for j, c in enumerate(conf_u_by_hand(ell * i)):
            out[j] += sign * pascal_binomial(p, i) * c
    return out


def U_at(series, N):
    return lattice_coefficients(series, N)


def X(*c):
    return IntPolynomial(c, "x")


def test_e1_line_examples():
    assert e1_line(0, L2N4) == X(1)
    assert e1_line(1, L2N4) == X(0, 0, 0, 1)
    assert e1_line(2, L2N4) == X(0, 0, 0, 4, 0, 0, 11, 0, 0, 6)
    line3 = e1_line(3, L2N4)
    assert {q: c for q, c in enumerate(line3.coeffs) if c} == {6: 52, 9: 207, 12: 274, 15: 120}


@pytest.mark.filterwarnings("ignore::UserWarning")
@pytest.mark.parametrize("N", [3, 4, 5])
@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_e1_lines_nonnegative_and_match_hand_sums(N, ell):
    params = ModelParams(N, ell)
    for p in range(7):
        line = e1_line(p, params)
        assert all(c >= 0 for c in line.coeffs)
        assert line.coeffs == IntPolynomial(tuple(e1_u_by_hand(p, ell)), "u").spread(N - 1).coeffs


def test_e1_table_examples():
    t = e1_table(3, L2N4)
    assert t[0, 0] == 1
    assert all(t[0, q] == 0 for q in range(1, 10))
    assert t[2, 3] == 4
    assert t[3, 3] == 0
    with pytest.raises(KeyError):
        t[4, 0]


def test_table_slope_witnesses():
    for ell in range(1, 5):
        for N in (4, 5):
            params = ModelParams(N, ell)
            t = e1_table(6, params)
            for (p, q), dim in t.entries.items():
                assert dim > 0
                if p >= 1:
                    assert q <= (ell * p - 1) * (N - 1)
                else:
                    assert q == 0
            lower, _ = empirical_slopes(t)
            assert lower > 1


def test_empirical_slopes_examples():
    assert empirical_slopes(e1_table(3, L2N4)) == (Fraction(3, 2), Fraction(5))
    lower, _ = empirical_slopes(e1_table(2, ModelParams(4, 1)))
    assert lower == Fraction(3, 2)
    with pytest.raises(SlopeError):
        empirical_slopes(e1_table(0, L2N4))
    with pytest.raises(SlopeError):
        empirical_slopes(e1_table(1, ModelParams(4, 1)))


def test_euler_summed_examples():
    s = euler_series_summed(ModelParams(4, 1), 9)
    assert s.coefficients() == [1, 0, 0, 1, 0, 0, 1, 0, 0, 1]
    s = euler_series_summed(L2N4, 9)
    assert s.coefficients() == [1, 0, 0, 3, 0, 0, 7, 0, 0, 15]
    assert euler_series_summed(ModelParams(5, 3), 4).coefficient(4) == 6 == count_set_partitions(4, 3)


def test_euler_closed_examples():
    assert euler_series_closed(ModelParams(4, 1), 6).coefficients() == [1, 0, 0, 1, 0, 0, 1]
    c = [1, 3]
    for _ in range(2):
        c.append(3 * c[-1] - 2 * c[-2])
    assert U_at(euler_series_closed(L2N4, 9), 4) == c
    for ell in range(1, 5):
        coeffs = U_at(euler_series_closed(ModelParams(4, ell), 24), 4)
        for j in range(9):
            assert coeffs[j] == count_set_partitions(ell + j, ell)


def test_truncation_is_exact_requested_degree():
    s = euler_series_closed(L2N4, 10)
    assert s.trunc == 10
    assert s.coefficient(10) == 0
    assert euler_series_summed(L2N4, 10).trunc == 10


def test_line_by_line_euler_consistency():
    for ell in (1, 2, 3):
        params = ModelParams(4, ell)
        D = 15
        summed = euler_series_summed(params, D)
        J = D // 3
        lines = [e1_line(p, params) for p in range(2 * J + 1)]
        for q in range(D + 1):
            chi = sum((-1) ** p * line[q] for p, line in enumerate(lines))
            assert chi == summed.coefficient(q)


@pytest.mark.parametrize("N", [4, 5])
@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_summed_equals_closed(N, ell):
    params = ModelParams(N, ell)
    rep = euler_report(params, 40)
    assert rep.agree
    assert rep.summed == rep.closed


def test_knot_power_series_examples():
    assert U_at(knot_power_series(ModelParams(4, 1), 30), 4) == [1] * 11
    assert U_at(knot_power_series(L2N4, 30), 4) == list(range(1, 12))
    assert U_at(knot_power_series(ModelParams(4, 3), 12), 4)[4] == 15
    for ell in range(1, 5):
        coeffs = U_at(knot_power_series(ModelParams(5, ell), 48), 5)
        assert coeffs == [pascal_binomial(j + ell - 1, ell - 1) for j in range(13)]


def test_relative_series_examples():
    zero = relative_series(ModelParams(4, 1), 30)
    assert zero.poly.is_zero()
    assert U_at(relative_series(L2N4, 12), 4) == [0, 1, 4, 11, 26]
    assert U_at(relative_series(ModelParams(4, 3), 6), 4)[2] == 25 - 6 == count_set_partitions(5, 3) - 6


def test_relative_series_cross_module_identity():
    for ell in range(1, 5):
        coeffs = U_at(relative_series(ModelParams(4, ell), 45), 4)
        assert coeffs[0] == 0
        for j, c in enumerate(coeffs):
            assert c == stirling2(ell + j, ell) - pascal_binomial(j + ell - 1, ell - 1)


def test_tot_lower_bound_examples():
    series = euler_series_closed(L2N4, 12)
    assert tot_lower_bound(6, Fraction(3, 2), series) == (7, (2, 6))
    assert tot_lower_bound(9, Fraction(3, 2), series) == (15, (3, 9))
    assert tot_lower_bound(7, "3/2", series)[0] == 0
    with pytest.raises(SlopeError):
        tot_lower_bound(6, 1, series)
    with pytest.raises(RangeError):
        tot_lower_bound(13, 2, series)


def test_tot_lower_bound_ceiling_is_exact():
    series = euler_series_closed(L2N4, 12)
    # 12 * (1 - 1/3) = 8 exactly; a float ceiling could drift to 9
    assert tot_lower_bound(12, 3, series)[1] == (8, 12)
    assert tot_lower_bound(10, Fraction(7, 5), series)[1] == (3, 10)


def test_growth_rate_examples():
    assert growth_rate(euler_series_closed(ModelParams(4, 1), 30), 4, 5) == (1.0, 1.0)
    u, x = growth_rate(relative_series(L2N4, 90), 4, 5)
    assert abs(u - 2.0) < 1e-3
    assert abs(x - 2 ** (1 / 3)) < 1e-3
    u, _ = growth_rate(euler_series_closed(ModelParams(4, 3), 120), 4, 5)
    assert abs(u - 3.0) < 1e-2


def test_growth_rate_rejects_zero_window():
    with pytest.raises(UndefinedRatioError):
        growth_rate(relative_series(ModelParams(4, 1), 30), 4, 5)
    with pytest.raises(UndefinedRatioError):
        growth_rate(relative_series(L2N4, 6), 4, 5)


def test_difference_sum_examples():
    res = check_difference_sum([1])
    assert res.ok and res.q_at_minus_one == 1 and res.s_poly == X(1)
    res = check_difference_sum([-5, 0, 1])
    assert res.ok
    assert res.q_at_minus_one == -4
    assert res.s_poly == X(-5, -1, 2)


def test_difference_sum_rising_family():
    for d in range(1, 9):
        res = check_difference_sum(shifted_rising_factorial(d).coeffs)
        assert res.ok and res.q_at_minus_one == 0
        expected = [factorial(d) * (-1) ** k * pascal_binomial(d, k) for k in range(d + 1)]
        assert list(res.s_poly.coeffs) == expected


def test_difference_sum_zero_polynomial():
    res = check_difference_sum([0, 0, 0, 0])
    assert res.ok and res.s_poly.is_zero()


def test_stirling_sum_examples():
    assert check_stirling_sum(1, 1) == (True, 1, 1)
    assert check_stirling_sum(2, 1) == (True, 3, 3)
    assert check_stirling_sum(2, 2) == (True, 7, 7)


def test_interface_aliases():
    from linkseries import engine

    assert engine.verify_lemma_5_3 is check_difference_sum
    assert engine.verify_prop_5_2 is check_stirling_sum
