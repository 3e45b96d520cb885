"""The log-derivative sum p(x) with F'' = -F p: partial-fraction identity,
interchange-of-summation bounds, harmonic telescoping closed forms, the
per-coefficient cancellation witnesses, and the structural second-derivative
identity on the truncated polynomial.

The heart of the constancy argument is exact per-(n, j) cancellation:
the x^(2j) coefficient of the double sum splits into a telescoped tail
-4 H(2n)/n^(2j+1) plus a finite part 4 (H(2n-1) - 1/n)/n^(2j+1), and their
total -6/n^(2j+2) kills the matching coefficient of the single sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numeric import ApproxReal, DomainError, ZERO, harmonic
from .polys import Poly, poly_add, poly_diff, poly_divexact, poly_eq, poly_mul
from .product import f_polynomial


def partial_fraction_check(x: Fraction, l1: int, l2: int) -> bool:
    """Exact check of the two-pole split of 8x^2/(l1^2 l2^2 (1-x^2/l1^2)(1-x^2/l2^2))."""
    if not l1 < l2:
        raise DomainError("need l1 < l2")
    x = Fraction(x)
    x2 = x * x
    if x2 == l1 * l1 or x2 == l2 * l2:
        raise DomainError("pole at x = +-l1 or +-l2")
    lhs = 8 * x2 / (l1 * l1 * l2 * l2
                    * (1 - x2 / (l1 * l1)) * (1 - x2 / (l2 * l2)))
    rhs = (4 * (Fraction(1, l1 - l2) - Fraction(1, l1 + l2))
           / (l2 * (1 - x2 / (l2 * l2)))
           + 4 * (Fraction(1, l2 - l1) - Fraction(1, l2 + l1))
           / (l1 * (1 - x2 / (l1 * l1))))
    return lhs == rhs


def telescoped_tail(n: int, j: int, M: int) -> tuple[Fraction, Fraction]:
    """Partial telescoped l2-sum against its closed form -4 H(2n)/n^(2j+1).

    Returns (partial, closed_form) where
        partial = -4/n^(2j+1) * sum_{l2=n+1}^{M} (1/(l2-n) - 1/(l2+n)),
    and guarantees |partial - closed_form| <= 8n / (n^(2j+1) (M-n)).
    """
    if M <= 2 * n:
        raise DomainError("need M > 2n so the telescoping has collapsed")
    scale = Fraction(-4, n ** (2 * j + 1))
    s = ZERO
    for l2 in range(n + 1, M + 1):
        s += Fraction(1, l2 - n) - Fraction(1, l2 + n)
    partial = scale * s
    closed_form = Fraction(-4, n ** (2 * j + 1)) * harmonic(2 * n)
    bound = Fraction(8 * n, n ** (2 * j + 1) * (M - n))
    if abs(partial - closed_form) > bound:
        raise AssertionError(
            f"telescoped remainder exceeded its bound at n={n}, j={j}, M={M}")
    return partial, closed_form


def telescoped_remainder_bound(n: int, j: int, M: int) -> Fraction:
    return Fraction(8 * n, n ** (2 * j + 1) * (M - n))


def finite_part(n: int, j: int) -> Fraction:
    """-4/n^(2j+1) * sum_{l1=1}^{n-1} (1/(l1-n) - 1/(l1+n)), which collapses
    to 4 (H(2n-1) - 1/n)/n^(2j+1); both evaluations are performed and compared."""
    if n < 1 or j < 1:
        raise DomainError("need n, j >= 1")
    s = ZERO
    for l1 in range(1, n):
        s += Fraction(1, l1 - n) - Fraction(1, l1 + n)
    direct = Fraction(-4, n ** (2 * j + 1)) * s
    closed = 4 * (harmonic(2 * n - 1) - Fraction(1, n)) / Fraction(n ** (2 * j + 1))
    if direct != closed:
        raise AssertionError(f"finite-part closed form failed at n={n}, j={j}")
    return direct


@dataclass(frozen=True)
class PCoefficientWitness:
    """The three exact pieces of the x^(2j) coefficient at index n."""
    n: int
    j: int
    tail_part: Fraction       # -4 H(2n) / n^(2j+1)
    finite_part: Fraction     # 4 (H(2n-1) - 1/n) / n^(2j+1)
    diagonal_part: Fraction   # 6 / n^(2j+2)

    @property
    def cancels(self) -> bool:
        return self.tail_part + self.finite_part + self.diagonal_part == 0


def p_coefficient_witness(n: int, j: int) -> PCoefficientWitness:
    if n < 1 or j < 1:
        raise DomainError("need n, j >= 1")
    nw = n ** (2 * j + 1)
    tail = Fraction(-4, nw) * harmonic(2 * n)
    fin = 4 * (harmonic(2 * n - 1) - Fraction(1, n)) / Fraction(nw)
    diag = Fraction(6, nw * n)
    w = PCoefficientWitness(n=n, j=j, tail_part=tail, finite_part=fin,
                            diagonal_part=diag)
    if not w.cancels:
        raise AssertionError(f"witness failed to cancel at n={n}, j={j}")
    return w


def p_eval(x: Fraction | ApproxReal, N: int, precision: int | None = None) -> ApproxReal:
    """Certified value of the depth-N truncation

        6 sum_{n<=N} 1/(n^2 - x^2)
        - 8 x^2 sum_{l1<l2<=N} 1/((l1^2 - x^2)(l2^2 - x^2)),

    using the exact pair-sum rearrangement (S^2 - S2)/2 of the same
    truncation. Points within 1/N of an integer are rejected: the terms
    blow up and the bracket becomes vacuous.
    """
    if N < 2:
        raise DomainError("p_eval needs N >= 2")
    xa = x if isinstance(x, ApproxReal) else ApproxReal.from_rational(Fraction(x), precision)
    mag = abs(xa.value) + xa.err
    if mag >= 1:
        raise DomainError("p_eval needs 0 <= |x| < 1")
    if 1 - mag < Fraction(1, N):
        raise DomainError(f"x within 1/{N} of the pole at 1; bracket would be vacuous")
    x2 = xa * xa
    one = ApproxReal.exact(1)
    s = ApproxReal.exact(0)
    s2 = ApproxReal.exact(0)
    single = ApproxReal.exact(0)
    for n in range(1, N + 1):
        term = one / (ApproxReal.exact(n * n) - x2)
        single = single + term
        s = s + term
        s2 = s2 + term * term
    pair_sum = (s * s - s2) * Fraction(1, 2)
    return single * 6 - x2 * pair_sum * 8


def interchange_bound_check(x: Fraction, N: int) -> bool:
    """Exact check that both absolute rearranged sums of the double series,
    truncated at N with their inner geometric j-sums in closed form, stay
    below 32 x^2 / (1 - x^2)."""
    x = Fraction(x)
    if not 0 < x < 1:
        raise DomainError("need 0 < x < 1")
    x2 = x * x
    bound = 32 * x2 / (1 - x2)
    sum_a = ZERO   # terms carrying 1/l2^(2j): 8 x^2 / ((l2^2-l1^2)(l2^2-x^2))
    sum_b = ZERO   # terms carrying 1/l1^(2j): 8 x^2 / ((l2^2-l1^2)(l1^2-x^2))
    for l1 in range(1, N + 1):
        for l2 in range(l1 + 1, N + 1):
            gap = l2 * l2 - l1 * l1
            sum_a += 8 * x2 / (gap * (l2 * l2 - x2))
            sum_b += 8 * x2 / (gap * (l1 * l1 - x2))
    return sum_a <= bound and sum_b <= bound


def fpp_assembly_identity(N: int) -> bool:
    """Structural second-derivative identity on the expanded truncation.

    With factors f_0 = x and f_n = 1 - x^2/n^2, checks exactly that
        (prod f)'' = sum_{i != j} f_i' f_j' prod_{m != i,j} f_m
                     + sum_i f_i'' prod_{m != i} f_m
    as polynomials, by expansion and coefficient comparison.
    """
    if N < 1:
        raise DomainError("needs N >= 1")
    factors: list[Poly] = [[ZERO, Fraction(1)]]
    factors += [[Fraction(1), ZERO, Fraction(-1, n * n)] for n in range(1, N + 1)]
    full = f_polynomial(N)
    lhs = poly_diff(poly_diff(full))
    rhs: Poly = [ZERO]
    others = [poly_divexact(full, f) for f in factors]
    for i, fi in enumerate(factors):
        rhs = poly_add(rhs, poly_mul(poly_diff(poly_diff(fi)), others[i]))
        for j, fj in enumerate(factors):
            if i == j:
                continue
            rest = poly_divexact(others[i], fj)
            rhs = poly_add(rhs, poly_mul(poly_mul(poly_diff(fi), poly_diff(fj)), rest))
    return poly_eq(lhs, rhs)
