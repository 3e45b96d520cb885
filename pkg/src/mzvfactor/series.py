"""Truncated multiple zeta values zeta_N({2}^k), truncated even zeta values,
power-series coefficients of the truncated product, and certified limits.

zeta_N({2}^k) is the k-th elementary symmetric function of {1/n^2 : n <= N},
which gives the O(k)-memory recursion used throughout:

    e[n][k] = e[n-1][k] + e[n-1][k-1] / n^2.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .numeric import (
    ApproxReal,
    DomainError,
    ResourceError,
    ZERO,
    ONE,
    power_sum_tail_bracket,
    require_precision,
    round_to_bits,
)

BRUTEFORCE_LIMIT = 12
EXACT_N_LIMIT = 10 ** 4
MZV_N_CEILING = 10 ** 6


class MzvTable:
    """Full table of zeta_n({2}^k) for 0 <= n <= N, 0 <= k <= k_max.

    Row 0 is the empty truncation (1, 0, 0, ...). Mostly a test and
    inspection surface; production queries use the rolling-row routines.
    """

    def __init__(self, N: int, k_max: int):
        if N < 1:
            raise DomainError("MzvTable needs N >= 1")
        self.N = N
        self.k_max = k_max
        rows = [[ONE] + [ZERO] * k_max]
        for n in range(1, N + 1):
            prev = rows[-1]
            inv2 = Fraction(1, n * n)
            row = [ONE]
            for k in range(1, k_max + 1):
                row.append(prev[k] + prev[k - 1] * inv2)
            rows.append(row)
        self.rows = rows

    def value(self, n: int, k: int) -> Fraction:
        if k > n:
            return ZERO
        return self.rows[n][k]


def mzv_row(N: int, k_max: int) -> list[Fraction]:
    """[zeta_N({2}^0), ..., zeta_N({2}^k_max)] with O(k_max) memory."""
    if N < 1:
        raise DomainError("mzv_row needs N >= 1")
    row = [ONE] + [ZERO] * k_max
    for n in range(1, N + 1):
        inv2 = Fraction(1, n * n)
        # descending k so each update reads the previous n's entries
        for k in range(min(k_max, n), 0, -1):
            row[k] += row[k - 1] * inv2
    return row


def mzv_truncated(N: int, k: int) -> Fraction:
    """zeta_N({2}^k) = sum over 1 <= n_1 < ... < n_k <= N of prod 1/n_i^2."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    if k == 0:
        return ONE
    if k > N:
        return ZERO
    return mzv_row(N, k)[k]


def mzv_row_approx(N: int, k_max: int, precision: int | None = None) -> list[ApproxReal]:
    """The same rolling recursion with certified brackets; numerators of the
    exact entries grow past any sane size above N = 10^4, so deep truncations
    run here instead."""
    if N < 1:
        raise DomainError("mzv_row_approx needs N >= 1")
    row = [ApproxReal.exact(1)] + [ApproxReal.exact(0)] * k_max
    for n in range(1, N + 1):
        inv2 = Fraction(1, n * n)
        for k in range(min(k_max, n), 0, -1):
            row[k] = row[k] + row[k - 1] * inv2
    return row


def mzv_bruteforce(N: int, k: int) -> Fraction:
    """Independent oracle: explicit enumeration of the increasing tuples.

    Guarded at N <= 12 because the tuple count is combinatorial.
    """
    if N > BRUTEFORCE_LIMIT:
        raise DomainError(f"brute-force enumeration refused for N > {BRUTEFORCE_LIMIT}")
    if k < 0:
        raise DomainError("k must be nonnegative")
    total = ZERO
    for combo in itertools.combinations(range(1, N + 1), k):
        term = ONE
        for n in combo:
            term *= Fraction(1, n * n)
        total += term
    return total


def zeta_even_truncated(N: int, j: int) -> Fraction:
    """sum_{n=1}^N 1/n^(2j)."""
    if N < 1 or j < 1:
        raise DomainError("zeta_even_truncated needs N >= 1, j >= 1")
    return sum((Fraction(1, n ** (2 * j)) for n in range(1, N + 1)), ZERO)


def f_series_coefficients(N: int, k_max: int) -> list[Fraction]:
    """Coefficients c_k of x^(2k+1) in the expanded truncated product:
    c_k = (-1)^k zeta_N({2}^k)."""
    if k_max > N:
        raise DomainError("k_max must not exceed N (higher coefficients vanish)")
    row = mzv_row(N, k_max)
    return [row[k] if k % 2 == 0 else -row[k] for k in range(k_max + 1)]


# ---------------------------------------------------------------------------
# Certified limits
# ---------------------------------------------------------------------------

def _interval_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _interval_sub(a, b):
    return (a[0] - b[1], a[1] - b[0])


def _interval_mul(a, b):
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(products), max(products))


def tail_power_sums(N: int, k: int, em_terms: int = 6) -> list[tuple[Fraction, Fraction]]:
    """Brackets for p_i = sum_{n>N} 1/n^(2i), i = 1..k."""
    return [power_sum_tail_bracket(N, i, em_terms) for i in range(1, k + 1)]


def tail_elementary_brackets(N: int, k: int, em_terms: int = 6) -> list[tuple[Fraction, Fraction]]:
    """Brackets for e_m of the tail set {1/n^2 : n > N}, m = 0..k.

    Newton's identities, run in exact rational interval arithmetic:
        m e_m = sum_{i=1..m} (-1)^(i-1) e_{m-i} p_i.
    """
    p = tail_power_sums(N, k, em_terms)
    e: list[tuple[Fraction, Fraction]] = [(ONE, ONE)]
    for m in range(1, k + 1):
        acc = (ZERO, ZERO)
        for i in range(1, m + 1):
            term = _interval_mul(e[m - i], p[i - 1])
            acc = _interval_add(acc, term) if i % 2 == 1 else _interval_sub(acc, term)
        lo, hi = acc
        e.append((max(ZERO, lo / m), hi / m))
    return e


def mzv_limit_bracket(k: int, N: int = 1000, em_terms: int = 6) -> tuple[Fraction, Fraction]:
    """Exact rational bracket for zeta({2}^k).

    Splits the elementary symmetric function over {1..N} and the tail:
        zeta({2}^k) = sum_j zeta_N({2}^j) * e_{k-j}(tail),
    an identity, so the only width comes from the tail power-sum brackets.
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    if k == 0:
        return (ONE, ONE)
    if N > MZV_N_CEILING:
        raise ResourceError(f"truncation {N} exceeds ceiling {MZV_N_CEILING}")
    if N <= EXACT_N_LIMIT:
        head = [(h, h) for h in mzv_row(N, k)]
    else:
        head = [(a.lo, a.hi) for a in mzv_row_approx(N, k)]
    tails = tail_elementary_brackets(N, k, em_terms)
    lo = ZERO
    hi = ZERO
    for j in range(k + 1):
        tlo, thi = tails[k - j]
        hlo, hhi = head[j]
        lo += hlo * tlo
        hi += hhi * thi
    return (lo, hi)


def mzv_monotone_tail_bound(N: int, k: int) -> Fraction:
    """The coarse certified tail bound zeta({2}^{k-1} head) * sum_{n>N} 1/n^2
    <= (zeta_N({2}^{k-1}) + 1) / N, kept as a cross-check on the sharp bracket."""
    if k < 1:
        raise DomainError("k must be positive")
    head = mzv_truncated(N, k - 1) if k > 1 else ONE
    return (head + 1) * Fraction(1, N)


def mzv_limit(k: int, precision_bits: int, N: int | None = None) -> ApproxReal:
    """zeta({2}^k) with certified error meeting the requested precision."""
    require_precision(precision_bits)
    if k == 0:
        return ApproxReal.exact(1)
    target = Fraction(1, 1 << (precision_bits + 2))
    n = N if N is not None else 256
    em = 6
    while True:
        lo, hi = mzv_limit_bracket(k, n, em)
        mid = (lo + hi) / 2
        v, r = round_to_bits(mid, precision_bits + 8)
        err = (hi - lo) / 2 + r
        if err <= target:
            return ApproxReal(v, err)
        if N is not None or (n >= MZV_N_CEILING and em + 1 >= 16):
            raise ResourceError(
                f"cannot certify zeta({{2}}^{k}) to {precision_bits} bits "
                f"within configured ceilings")
        if em < 9:
            em += 1
        else:
            n *= 2
            if n > MZV_N_CEILING:
                raise ResourceError("truncation ceiling reached")
