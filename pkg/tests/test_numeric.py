"""Exact arithmetic, harmonic cache, tail brackets, and the pi oracle."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mzvfactor.numeric import (
    ApproxReal,
    DomainError,
    HarmonicCache,
    ResourceError,
    err_up,
    even_zeta_bound,
    harmonic,
    pi_oracle,
    power_sum_tail_bracket,
    round_to_bits,
    sqrt_bounds,
    zeta2_tail_bracket,
)
from mzvfactor.series import zeta_even_truncated

rationals = st.fractions(min_value=-1000, max_value=1000)
small_rationals = st.fractions(min_value=Fraction(-8), max_value=Fraction(8))


def test_harmonic_small_values():
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    # direct-summation oracle
    assert harmonic(4) == sum(Fraction(1, k) for k in range(1, 5)) == Fraction(25, 12)


def test_harmonic_cache_is_incremental():
    cache = HarmonicCache()
    assert cache.harmonic(10) == sum(Fraction(1, k) for k in range(1, 11))
    assert len(cache) == 11
    cache.harmonic(3)
    assert len(cache) == 11  # never evicted, never recomputed


@given(st.integers(min_value=1, max_value=400))
def test_harmonic_difference(n):
    assert harmonic(n) - harmonic(n - 1) == Fraction(1, n)


@given(st.integers(min_value=1, max_value=200))
def test_harmonic_even_odd_step(n):
    assert harmonic(2 * n) - harmonic(2 * n - 1) == Fraction(1, 2 * n)


def test_zeta2_tail_bracket_values():
    assert zeta2_tail_bracket(1) == (Fraction(1, 2), Fraction(1))
    assert zeta2_tail_bracket(10) == (Fraction(1, 11), Fraction(1, 10))


def test_zeta2_tail_bracket_contains_true_tail():
    # pi^2/6 from the oracle, compared against the N=10 head plus bracket
    pi = pi_oracle(128)
    target_lo = (pi.value - pi.err) ** 2 / 6
    target_hi = (pi.value + pi.err) ** 2 / 6
    head = zeta_even_truncated(10, 1)
    lo, hi = zeta2_tail_bracket(10)
    assert head + lo <= target_lo
    assert target_hi <= head + hi


def test_even_zeta_bound_dominates_truncations():
    assert even_zeta_bound(1) == 2
    assert zeta_even_truncated(1000, 1) < 2
    assert zeta_even_truncated(1000, 2) < 2
    assert zeta_even_truncated(10, 10) < 2
    with pytest.raises(DomainError):
        even_zeta_bound(0)


def test_power_sum_tail_inside_integral_bracket():
    lo_i, hi_i = zeta2_tail_bracket(50)
    lo, hi = power_sum_tail_bracket(50, 1)
    assert lo_i <= lo <= hi <= hi_i
    assert hi - lo < Fraction(1, 10 ** 20)


def test_power_sum_tail_matches_direct_partial():
    # tail(N) - tail(2N) must equal the directly summed middle block
    for j in (1, 2):
        lo1, hi1 = power_sum_tail_bracket(20, j)
        lo2, hi2 = power_sum_tail_bracket(40, j)
        middle = sum(Fraction(1, n ** (2 * j)) for n in range(21, 41))
        assert lo1 - hi2 <= middle <= hi1 - lo2


def test_pi_oracle_digits():
    pi64 = pi_oracle(64)
    assert pi64.err < Fraction(1, 2 ** 60)
    assert pi64.decimal(17).startswith("3.1415926535897932")
    pi32 = pi_oracle(32)
    assert pi32.err < Fraction(1, 2 ** 28)
    assert pi32.decimal(7).startswith("3.141592")


def test_pi_oracle_consistency_across_precisions():
    a, b = pi_oracle(64), pi_oracle(128)
    assert abs(a.value - b.value) <= a.err + b.err


def test_pi_oracle_rejects_out_of_range_precision():
    with pytest.raises(DomainError):
        pi_oracle(16)
    with pytest.raises(ResourceError):
        pi_oracle(1 << 20)


def test_round_to_bits_error_is_exact():
    q = Fraction(1, 3)
    v, err = round_to_bits(q, 64)
    assert err == abs(v - q)
    assert v.denominator & (v.denominator - 1) == 0  # dyadic


def test_sqrt_bounds_bracket():
    for q in (Fraction(2), Fraction(9), Fraction(1, 7), Fraction(10 ** 12)):
        lo, hi = sqrt_bounds(q, 80)
        assert lo * lo <= q <= hi * hi
        assert hi - lo <= Fraction(1, 2 ** 70) * max(1, hi)


@given(small_rationals)
def test_err_up_is_an_upper_bound(q):
    if q < 0:
        q = -q
    up = err_up(q)
    assert up >= q
    # already-small rationals pass through; everything else becomes a short
    # numerator over a power of two, cheap to carry through long sums
    assert up.numerator.bit_length() <= 40
    assert (up.denominator.bit_length() <= 32
            or up.denominator & (up.denominator - 1) == 0)


# ---- ApproxReal fuzz against exact rational arithmetic ----

@given(rationals, rationals)
@settings(max_examples=200)
def test_approx_add_sub_mul_contain_exact(a, b):
    xa, xb = ApproxReal.from_rational(a), ApproxReal.from_rational(b)
    assert (xa + xb).contains(a + b)
    assert (xa - xb).contains(a - b)
    assert (xa * xb).contains(a * b)


@given(rationals, rationals.filter(lambda q: abs(q) > Fraction(1, 100)))
@settings(max_examples=200)
def test_approx_div_contains_exact(a, b):
    xa, xb = ApproxReal.from_rational(a), ApproxReal.from_rational(b)
    assert (xa / xb).contains(a / b)


@given(rationals.filter(lambda q: q >= 0))
def test_approx_sqrt_contains_true_root(a):
    r = ApproxReal.from_rational(a).sqrt()
    assert (r.lo) ** 2 <= a <= (r.hi) ** 2 or r.lo < 0


def test_approx_div_by_zero_bracket_raises():
    with pytest.raises(DomainError):
        ApproxReal.from_rational(1) / ApproxReal(Fraction(0), Fraction(1, 10))


def test_approx_power_matches_repeated_multiplication():
    x = ApproxReal.from_rational(Fraction(3, 7))
    p = x.power(5)
    assert p.contains(Fraction(3, 7) ** 5)


def test_from_bracket_contains_endpoints_midpoint():
    b = ApproxReal.from_bracket(Fraction(1, 3), Fraction(1, 2))
    assert b.contains(Fraction(1, 3)) and b.contains(Fraction(1, 2))


def test_global_precision_override():
    from mzvfactor.numeric import get_precision, set_precision, sum_approx
    before = get_precision()
    try:
        set_precision(96)
        total = sum_approx(ApproxReal.from_rational(Fraction(1, k))
                           for k in range(1, 20))
        assert total.contains(harmonic(19))
    finally:
        set_precision(before)
    with pytest.raises(DomainError):
        set_precision(8)
