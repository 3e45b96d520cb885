"""The two pi constants generated by the product (frequency and amplitude),
the normalized odd series g, the Pythagorean invariant, and the arc-length
identification with the geometric circle constant.

pi_freq = sqrt(6 sum 1/n^2) comes from the certified zeta(2) bracket;
pi_amp = 2 prod (2n/(2n-1))(2n/(2n+1)) comes from the interlacing Wallis
partial products; the arc length integrates the unit-speed parametrization
(g, g') between the bracketed endpoints +-pi_freq/2. All three are compared
against the independent Machin oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .numeric import (
    ApproxReal,
    DomainError,
    ResourceError,
    ZERO,
    ONE,
    pi_oracle,
    power_sum_tail_bracket,
    require_precision,
)
from .series import zeta_even_truncated

WALLIS_N_CEILING = 10 ** 6

# exp(4) < 55: a certified Lipschitz bound for g, g', g'' on [-4, 4]
_SERIES_LIPSCHITZ = Fraction(55)


@dataclass(frozen=True)
class PiEstimate:
    which: str                    # "freq" | "amp" | "oracle" | "arc"
    value: ApproxReal
    truncation: dict = field(default_factory=dict)
    exact_partial: Optional[Fraction] = None


# ---------------------------------------------------------------------------
# pi_freq
# ---------------------------------------------------------------------------

def zeta2_bracket(N: int, em_terms: int = 6) -> tuple[Fraction, Fraction]:
    """Exact bracket for sum 1/n^2: head to N plus the certified tail.

    em_terms = 0 falls back to the elementary integral comparison
    (1/(N+1), 1/N); larger depths use the Euler-Maclaurin bracket.
    """
    head = zeta_even_truncated(N, 1)
    if em_terms == 0:
        return head + Fraction(1, N + 1), head + Fraction(1, N)
    lo, hi = power_sum_tail_bracket(N, 1, em_terms)
    return head + lo, head + hi


def pi_freq(precision_bits: int, N: Optional[int] = None,
            em_terms: int = 6) -> PiEstimate:
    """sqrt of six times the certified zeta(2) bracket."""
    require_precision(precision_bits)
    target = Fraction(1, 1 << (precision_bits + 2))
    n = N if N is not None else 64
    em = em_terms
    while True:
        lo, hi = zeta2_bracket(n, em)
        value = ApproxReal.from_bracket(6 * lo, 6 * hi,
                                        precision_bits + 16).sqrt(precision_bits + 16)
        # a pinned truncation reports whatever width it certifies
        if value.err <= target or N is not None:
            return PiEstimate(which="freq", value=value,
                              truncation={"N": n, "em_terms": em,
                                          "precision_bits": precision_bits})
        if em < 9:
            em += 1
        elif n < 2 ** 20:
            n *= 2
        else:
            raise ResourceError("pi_freq cannot reach the requested precision")


# ---------------------------------------------------------------------------
# pi_amp and the Wallis partial products
# ---------------------------------------------------------------------------

def _wallis_raw(N: int) -> tuple[int, int]:
    """Unreduced numerator/denominator of 2 prod_{n<=N} (2n)^2/((2n-1)(2n+1)),
    in closed factorial form; skipping the gcd matters at large N."""
    if N < 0:
        raise DomainError("needs N >= 0")
    if N > WALLIS_N_CEILING:
        raise ResourceError(f"Wallis truncation {N} exceeds {WALLIS_N_CEILING}")
    if N == 0:
        return 2, 1
    nf = math.factorial(N)
    tnf = math.factorial(2 * N)
    return (nf ** 4) << (4 * N + 1), tnf * tnf * (2 * N + 1)


def wallis_pair_product(N: int) -> Fraction:
    """2 prod_{n<=N} (2n/(2n-1))(2n/(2n+1)), exact."""
    num, den = _wallis_raw(N)
    return Fraction(num, den)


def wallis_partial(half_steps: int) -> Fraction:
    """Partial product after `half_steps` single factors; even and odd counts
    land on opposite sides of the limit (the interlacing bracket)."""
    if half_steps < 0:
        raise DomainError("needs half_steps >= 0")
    pairs, odd = divmod(half_steps, 2)
    w = wallis_pair_product(pairs)
    if odd:
        n = pairs + 1
        w *= Fraction(2 * n, 2 * n - 1)
    return w


def pi_amp(N: int, precision_bits: int = 128) -> PiEstimate:
    """N-pair Wallis partial product with the certified interlacing bracket
    [W_N, W_N * (2N+2)/(2N+1)].

    The bracket endpoints are dyadic roundings taken outward (floor below,
    ceiling above), so the certificate survives the rounding.
    """
    require_precision(precision_bits)
    num, den = _wallis_raw(N)
    shift = precision_bits + 8
    lo = Fraction((num << shift) // den, 1 << shift)
    hi_num = num * (2 * N + 2)
    hi_den = den * (2 * N + 1)
    hi = Fraction((hi_num << shift) // hi_den + 1, 1 << shift)
    # report the partial product itself; the radius covers the whole bracket
    value = ApproxReal(lo, hi - lo)
    return PiEstimate(which="amp", value=value, truncation={"N": N},
                      exact_partial=Fraction(num, den) if N <= 10 ** 4 else None)


# ---------------------------------------------------------------------------
# The normalized odd series g and its derivative
# ---------------------------------------------------------------------------

def _auto_terms(x_abs: Fraction, precision_bits: int) -> int:
    eps = Fraction(1, 1 << (precision_bits + 8))
    t = 1
    term = x_abs
    while True:
        # term currently |x|^(2t+1)/(2t+1)!; also require the ratio < 1
        term = term * x_abs * x_abs / ((2 * t) * (2 * t + 1))
        if term <= eps and x_abs * x_abs < (2 * t + 2) * (2 * t + 3):
            return t
        t += 1
        if t > 4096:
            raise ResourceError("series refuses to converge at this |x|")


def g_eval(x: Fraction | ApproxReal, terms: Optional[int] = None,
           precision_bits: int = 128) -> tuple[ApproxReal, ApproxReal]:
    """(g(x), g'(x)) for g(x) = sum (-1)^k x^(2k+1)/(2k+1)!.

    The partial sums are exact rationals; the alternating remainders bound
    the truncation, and a certified Lipschitz constant absorbs any input
    bracket width. Requires |x| <= 4.
    """
    require_precision(precision_bits)
    xa = x if isinstance(x, ApproxReal) else ApproxReal.exact(Fraction(x))
    xv = xa.value
    if abs(xv) + xa.err > 4:
        raise DomainError("g_eval is certified on [-4, 4] only")
    T = terms if terms is not None else _auto_terms(abs(xv), precision_bits)
    if xv == 0:
        g_sum, gp_sum = ZERO, ONE
        rem_g = rem_gp = ZERO
    else:
        g_sum = ZERO
        gp_sum = ZERO
        xp = xv          # x^(2k+1)
        x2 = xv * xv
        for k in range(T + 1):
            sign = 1 if k % 2 == 0 else -1
            fact = math.factorial(2 * k + 1)
            g_sum += Fraction(sign) * xp / fact
            gp_sum += Fraction(sign) * (xp / xv) / math.factorial(2 * k)
            xp *= x2
        ax = abs(xv)
        if ax * ax >= (2 * T + 2) * (2 * T + 3):
            raise DomainError("too few terms for the alternating remainder bound")
        rem_g = ax ** (2 * T + 3) / Fraction(math.factorial(2 * T + 3))
        rem_gp = ax ** (2 * T + 2) / Fraction(math.factorial(2 * T + 2))
    slop = _SERIES_LIPSCHITZ * xa.err
    g = ApproxReal.from_bracket(g_sum - rem_g - slop, g_sum + rem_g + slop,
                                precision_bits + 16)
    gp = ApproxReal.from_bracket(gp_sum - rem_gp - slop, gp_sum + rem_gp + slop,
                                 precision_bits + 16)
    return g, gp


@dataclass(frozen=True)
class PythagoreanReport:
    grid_size: int
    precision_bits: int
    max_deviation: Fraction       # max over the grid of |g^2 + g'^2 - 1| + err
    zero_everywhere: bool         # every bracket contains 0


def pythagorean_check(grid: list[Fraction | ApproxReal],
                      terms: Optional[int] = None,
                      precision_bits: int = 128) -> PythagoreanReport:
    """Certify g(x)^2 + g'(x)^2 = 1 across the grid."""
    worst = ZERO
    all_zero = True
    for x in grid:
        g, gp = g_eval(x, terms, precision_bits)
        dev = g * g + gp * gp - 1
        worst = max(worst, abs(dev.value) + dev.err)
        if not dev.contains(0):
            all_zero = False
    return PythagoreanReport(grid_size=len(grid), precision_bits=precision_bits,
                             max_deviation=worst, zero_everywhere=all_zero)


# ---------------------------------------------------------------------------
# Arc length of the parametrized half-circle
# ---------------------------------------------------------------------------

def _speed(x: Fraction, precision_bits: int) -> ApproxReal:
    g, gp = g_eval(x, None, precision_bits)
    sq = g * g + gp * gp
    lo = max(ZERO, sq.lo)
    return ApproxReal.from_bracket(lo, sq.hi, precision_bits + 16).sqrt(precision_bits + 16)


def _simpson(a: Fraction, b: Fraction, m: int, precision_bits: int) -> ApproxReal:
    h = (b - a) / m
    total = ApproxReal.exact(0)
    for i in range(m + 1):
        w = 1 if i in (0, m) else (4 if i % 2 == 1 else 2)
        total = total + _speed(a + i * h, precision_bits) * w
    return total * (h / 3)


def arc_length(precision_bits: int, quad_nodes: int = 32,
               half: bool = False) -> ApproxReal:
    """Integrate sqrt(g'^2 + g^2) over [-pi_freq/2, pi_freq/2] (or the right
    half), with the certified node errors, a node-doubling truncation
    estimate, and the endpoint-bracket sliver folded into the error."""
    require_precision(precision_bits)
    if quad_nodes < 8:
        raise DomainError("needs quad_nodes >= 8")
    m = quad_nodes + (quad_nodes % 2)
    pf = pi_freq(precision_bits + 24)
    a = pf.value.value / 2
    delta = pf.value.err / 2
    lo_end = ZERO if half else -a
    q1 = _simpson(lo_end, a, m, precision_bits + 16)
    q2 = _simpson(lo_end, a, 2 * m, precision_bits + 16)
    doubling = abs(q2.value - q1.value)
    ends = 1 if half else 2
    # endpoint sliver: |speed| <= sqrt(2) e^2 < 12 anywhere within |x| <= 2
    extra = doubling + ends * delta * 12
    return ApproxReal(q2.value, q2.err + extra)


# ---------------------------------------------------------------------------
# The four-way comparison
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PiPairRecord:
    first: str
    second: str
    distance: Fraction
    combined_err: Fraction
    tolerance: Fraction

    @property
    def passed(self) -> bool:
        return self.distance <= self.combined_err + self.tolerance


@dataclass(frozen=True)
class PiComparisonReport:
    precision_bits: int
    tolerance: Fraction
    estimates: dict
    pairs: list[PiPairRecord]
    tight_trio_max_distance: Fraction   # raw max distance among freq/oracle/arc

    @property
    def passed(self) -> bool:
        return (all(p.passed for p in self.pairs)
                and self.tight_trio_max_distance <= self.tolerance)


def three_way_pi_compare(precision_bits: int,
                         tolerance: Fraction | None = None,
                         wallis_pairs: int = 20_000,
                         quad_nodes: int = 32) -> PiComparisonReport:
    """Pairwise bracket agreement of pi_freq, pi_amp, arc_length and the
    oracle; the non-Wallis trio must additionally agree raw (value to value)
    within the tolerance, since their brackets are tight."""
    require_precision(precision_bits)
    tol = tolerance if tolerance is not None else Fraction(1, 1 << (precision_bits // 2))
    ests = {
        "freq": pi_freq(precision_bits).value,
        "amp": pi_amp(wallis_pairs, precision_bits).value,
        "arc": arc_length(precision_bits, quad_nodes),
        "oracle": pi_oracle(precision_bits),
    }
    names = sorted(ests)
    pairs = []
    for i, na in enumerate(names):
        for nb in names[i + 1:]:
            a, b = ests[na], ests[nb]
            pairs.append(PiPairRecord(first=na, second=nb,
                                      distance=abs(a.value - b.value),
                                      combined_err=a.err + b.err,
                                      tolerance=tol))
    trio = ["freq", "arc", "oracle"]
    tight = max(abs(ests[x].value - ests[y].value)
                for i, x in enumerate(trio) for y in trio[i + 1:])
    return PiComparisonReport(precision_bits=precision_bits, tolerance=tol,
                              estimates=ests, pairs=pairs,
                              tight_trio_max_distance=tight)
