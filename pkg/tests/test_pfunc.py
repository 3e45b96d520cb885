"""Partial fractions, telescoping closed forms, cancellation witnesses, the
truncated double sum, and the structural second-derivative identity."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mzvfactor.numeric import DomainError, harmonic
from mzvfactor.pfunc import (
    finite_part,
    fpp_assembly_identity,
    interchange_bound_check,
    p_coefficient_witness,
    p_eval,
    partial_fraction_check,
    telescoped_tail,
    telescoped_remainder_bound,
)
from mzvfactor.series import zeta_even_truncated


def test_partial_fraction_examples():
    assert partial_fraction_check(Fraction(1, 2), 1, 2)
    assert partial_fraction_check(Fraction(0), 3, 7)


def test_partial_fraction_pole_rejected():
    with pytest.raises(DomainError):
        partial_fraction_check(Fraction(2), 2, 5)


@given(st.fractions(min_value=Fraction(-3), max_value=Fraction(3)),
       st.integers(min_value=1, max_value=30), st.integers(min_value=1, max_value=30))
@settings(max_examples=200)
def test_partial_fraction_random(x, l1, gap):
    l2 = l1 + gap
    if x * x in (Fraction(l1 * l1), Fraction(l2 * l2)):
        return
    assert partial_fraction_check(x, l1, l2)


def test_partial_fraction_200_seeded_triples():
    rng = random.Random(20240817)
    for _ in range(200):
        l1 = rng.randint(1, 50)
        l2 = l1 + rng.randint(1, 50)
        x = Fraction(rng.randint(-300, 300), rng.randint(301, 600))
        assert partial_fraction_check(x, l1, l2)


def test_telescoped_tail_closed_forms():
    # n=1, j=1: closed form -4 H(2) = -6
    partial, closed = telescoped_tail(1, 1, 500)
    assert closed == -6
    assert abs(partial - closed) <= telescoped_remainder_bound(1, 1, 500)

    partial, closed = telescoped_tail(2, 1, 100)
    assert closed == Fraction(-4, 8) * harmonic(4) == Fraction(-25, 24)
    assert abs(partial - closed) <= Fraction(16, 8 * 98)

    partial, closed = telescoped_tail(1, 5, 10)
    assert abs(partial - closed) <= telescoped_remainder_bound(1, 5, 10)


def test_telescoped_tail_partial_is_exact_sum():
    # oracle: direct summation of the telescoping terms
    n, j, M = 3, 2, 30
    s = sum(Fraction(1, l2 - n) - Fraction(1, l2 + n) for l2 in range(n + 1, M + 1))
    partial, _ = telescoped_tail(n, j, M)
    assert partial == Fraction(-4, n ** (2 * j + 1)) * s


def test_finite_part_examples():
    assert finite_part(1, 1) == 0
    assert finite_part(2, 1) == Fraction(2, 3)
    assert finite_part(3, 2) == 4 * (harmonic(5) - Fraction(1, 3)) / Fraction(3 ** 5)


def test_witness_examples():
    w = p_coefficient_witness(1, 1)
    assert (w.tail_part, w.finite_part, w.diagonal_part) == (Fraction(-6), Fraction(0), Fraction(6))
    assert w.cancels
    assert p_coefficient_witness(2, 1).cancels
    assert p_coefficient_witness(5, 3).cancels


def test_witness_cancellation_sweep():
    for n in range(1, 60):
        for j in range(1, 6):
            assert p_coefficient_witness(n, j).cancels


def test_p_eval_at_zero_is_six_zeta():
    v = p_eval(Fraction(0), 1000)
    assert v.contains(6 * zeta_even_truncated(1000, 1))


def test_p_eval_matches_direct_double_sum():
    # oracle: the literal double truncation at small N
    x, N = Fraction(1, 2), 25
    x2 = x * x
    single = sum(Fraction(1, n * n) / (1 - x2 / (n * n)) for n in range(1, N + 1))
    double = Fraction(0)
    for l1 in range(1, N + 1):
        for l2 in range(l1 + 1, N + 1):
            double += 1 / (Fraction(l1 * l1) * l2 * l2
                           * (1 - x2 / (l1 * l1)) * (1 - x2 / (l2 * l2)))
    expected = 6 * single - 8 * x2 * double
    assert p_eval(x, N).contains(expected)


def test_p_eval_near_constant_in_x():
    base = p_eval(Fraction(0), 1000)
    probe = p_eval(Fraction(1, 2), 1000)
    assert abs(base.value - probe.value) < Fraction(1, 100)


def test_p_eval_pole_guard():
    with pytest.raises(DomainError):
        p_eval(Fraction(9999, 10000), 10 ** 4)
    with pytest.raises(DomainError):
        p_eval(Fraction(3, 2), 100)


def test_interchange_bounds():
    assert interchange_bound_check(Fraction(1, 2), 50)
    assert interchange_bound_check(Fraction(1, 10), 50)
    with pytest.raises(DomainError):
        interchange_bound_check(Fraction(0), 10)


def test_interchange_bound_shrinks_with_x():
    # the bound 32 x^2/(1-x^2) vanishes as x -> 0, and so do the sums
    x = Fraction(1, 1000)
    assert interchange_bound_check(x, 20)
    assert 32 * x * x / (1 - x * x) < Fraction(1, 10 ** 4)


def test_assembly_identity_through_twelve():
    for n in range(1, 13):
        assert fpp_assembly_identity(n)
