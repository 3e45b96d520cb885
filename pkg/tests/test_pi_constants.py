"""pi_freq, pi_amp, the odd series, the Pythagorean invariant, arc length,
and the four-way comparison."""

import math
from fractions import Fraction

import pytest

from mzvfactor.numeric import DomainError, pi_oracle
from mzvfactor.pi_constants import (
    arc_length,
    g_eval,
    pi_amp,
    pi_freq,
    pythagorean_check,
    three_way_pi_compare,
    wallis_pair_product,
    wallis_partial,
    zeta2_bracket,
)
from mzvfactor.product import eval_F
from mzvfactor.series import mzv_limit


def test_pi_freq_agrees_with_oracle():
    est = pi_freq(64)
    pi = pi_oracle(64)
    assert abs(est.value.value - pi.value) <= est.value.err + pi.err
    assert est.value.decimal(9).startswith("3.14159265")


def test_pi_freq_crude_bracket():
    # integral-comparison tail at N=10: width below 0.01 and contains pi
    est = pi_freq(64, N=10, em_terms=0)
    pi = pi_oracle(64)
    assert 2 * est.value.err < Fraction(1, 100)
    assert est.value.contains(pi.value)


def test_pi_freq_nested_intervals():
    a = zeta2_bracket(100, em_terms=0)
    b = zeta2_bracket(200, em_terms=0)
    assert a[0] <= b[0] <= b[1] <= a[1]


def test_pi_amp_small_partials():
    assert pi_amp(0).exact_partial == 2
    assert pi_amp(1).exact_partial == Fraction(8, 3)
    assert wallis_pair_product(1) == Fraction(8, 3)


def test_pi_amp_bracket_contains_pi():
    pi = pi_oracle(96)
    for N in (10, 1000):
        est = pi_amp(N, 96)
        assert est.value.contains(pi.value)


def test_wallis_interlacing_by_parity():
    pi = pi_oracle(96)
    for m in range(1, 16):
        v = wallis_partial(m)
        if m % 2 == 1:
            assert v > pi.value + pi.err
        else:
            assert v < pi.value - pi.err


def test_wallis_half_step_recurrence():
    # oracle: multiply single factors directly
    acc = Fraction(2)
    factors = []
    for n in range(1, 6):
        factors.append(Fraction(2 * n, 2 * n - 1))
        factors.append(Fraction(2 * n, 2 * n + 1))
    for m in range(1, 11):
        acc_m = Fraction(2)
        for f in factors[:m]:
            acc_m *= f
        assert wallis_partial(m) == acc_m


def test_g_eval_examples():
    g0, gp0 = g_eval(Fraction(0))
    assert g0.value == 0 and gp0.value == 1
    g1, _ = g_eval(Fraction(1), terms=20)
    assert g1.decimal(9).startswith("0.84147098")


def test_g_eval_independent_series_oracle():
    # evaluate the same alternating series with a plain loop at higher depth
    x = Fraction(1, 3)
    s = Fraction(0)
    for k in range(40):
        term = Fraction((-1) ** k) * x ** (2 * k + 1) / math.factorial(2 * k + 1)
        s += term
    g, _ = g_eval(x)
    assert g.contains(s) or abs(g.value - s) < Fraction(1, 2 ** 100)


def test_g_eval_domain_guard():
    with pytest.raises(DomainError):
        g_eval(Fraction(9, 2))


def test_g_at_half_frequency_hits_one():
    pf = pi_freq(160)
    half = pf.value * Fraction(1, 2)
    g, gp = g_eval(half, precision_bits=160)
    assert g.contains(Fraction(1))
    assert abs(gp.value) <= gp.err + Fraction(1, 2 ** 100)


def test_pythagorean_check_grid():
    pi = pi_oracle(128)
    grid = [pi.value * Fraction(i, 50) for i in range(-50, 51)]
    rep = pythagorean_check(grid, precision_bits=128)
    assert rep.zero_everywhere
    assert rep.max_deviation < Fraction(1, 10 ** 20)


def test_pythagorean_at_zero_exact():
    rep = pythagorean_check([Fraction(0)])
    assert rep.max_deviation == 0


def test_arc_length_equals_frequency_constant():
    arc = arc_length(96, 16)
    pf = pi_freq(96)
    assert abs(arc.value - pf.value.value) < Fraction(1, 10 ** 10)


def test_arc_length_halving_symmetry():
    full = arc_length(96, 16)
    half = arc_length(96, 16, half=True)
    assert abs(full.value - 2 * half.value) < Fraction(1, 10 ** 15)


def test_speed_at_zero_is_one():
    g, gp = g_eval(Fraction(0))
    assert (g * g + gp * gp).contains(Fraction(1))


def test_three_way_compare_64():
    rep = three_way_pi_compare(64, Fraction(1, 10 ** 8), wallis_pairs=2000,
                               quad_nodes=16)
    assert rep.passed
    assert rep.tight_trio_max_distance < Fraction(1, 10 ** 8)


def test_agreement_tightens_with_precision():
    lo = three_way_pi_compare(64, wallis_pairs=500, quad_nodes=16)
    hi = three_way_pi_compare(128, wallis_pairs=500, quad_nodes=16)
    assert hi.tight_trio_max_distance < lo.tight_trio_max_distance


def test_series_coefficient_bridge():
    # coefficients of the product's series match (-1)^k pi_freq^(2k)/(2k+1)!
    pf = pi_freq(160).value
    for k in range(1, 9):
        z = mzv_limit(k, 128)
        target = pf.power(2 * k) * Fraction(1, math.factorial(2 * k + 1))
        assert abs(z.value - target.value) <= z.err + target.err


def test_series_matches_product_spot_checks():
    # rescaled series against the raw truncated product at five points
    pf = pi_freq(128).value
    for x in (Fraction(1, 10), Fraction(1, 4), Fraction(1, 3),
              Fraction(2, 5), Fraction(9, 20)):
        g, _ = g_eval(pf * x, precision_bits=128)
        series_value = g.value / pf.value
        product_value = eval_F(x, 4000)
        assert abs(series_value - product_value) < Fraction(1, 1000)
