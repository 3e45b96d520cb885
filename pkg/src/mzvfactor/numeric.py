"""Exact rational arithmetic, harmonic numbers, tail brackets, and a
self-contained high-precision pi oracle.

Everything here is certified: an ApproxReal is a dyadic midpoint together
with an exact rational radius that is guaranteed to contain the true real
number. No floating point is used anywhere in the package; "rounding" means
explicit dyadic rounding whose error is computed exactly and added to the
radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

ExactRational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

DEFAULT_PRECISION = 128
MAX_PRECISION = 1 << 14


class DomainError(ValueError):
    """An operation was evaluated at a pole or outside its domain."""


class ResourceError(RuntimeError):
    """A request exceeded a configured resource ceiling (precision, N, ...)."""


_precision = DEFAULT_PRECISION


def set_precision(bits: int) -> None:
    """Set the global working precision in bits (per-operation overrides allowed)."""
    global _precision
    require_precision(bits)
    _precision = bits


def get_precision() -> int:
    return _precision


def require_precision(bits: int) -> None:
    if bits < 32:
        raise DomainError(f"precision must be at least 32 bits, got {bits}")
    if bits > MAX_PRECISION:
        raise ResourceError(f"precision {bits} exceeds ceiling {MAX_PRECISION}")


def _floor_log2(q: Fraction) -> int:
    # floor(log2 |q|) within +-1, good enough to aim a rounding shift
    return abs(q.numerator).bit_length() - q.denominator.bit_length()


def round_to_bits(q: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Round q to a dyadic rational with about `bits` significant bits.

    Returns (dyadic value, exact rounding error |value - q|).
    """
    if q == 0:
        return ZERO, ZERO
    shift = bits - _floor_log2(q)
    if shift >= 0:
        scaled = q * (1 << shift)
        n = round(scaled)
        v = Fraction(n, 1 << shift)
    else:
        scaled = q / (1 << -shift)
        n = round(scaled)
        v = Fraction(n * (1 << -shift))
    return v, abs(v - q)


ERR_BITS = 32


def err_up(q: Fraction) -> Fraction:
    """Round an error radius up to a short dyadic upper bound.

    Radii only ever need an upper bound; keeping them at ERR_BITS significant
    bits with power-of-two denominators stops exact-rational bookkeeping from
    ballooning across long summations.
    """
    if q == 0:
        return ZERO
    if q < 0:
        raise DomainError("negative error radius")
    if q.denominator.bit_length() <= ERR_BITS and q.numerator.bit_length() <= ERR_BITS:
        return q
    shift = ERR_BITS - _floor_log2(q)
    if shift <= 0:
        step = 1 << (-shift)
        n = -((-q.numerator) // (q.denominator * step))
        return Fraction(n * step)
    n = -((-q.numerator << shift) // q.denominator)   # ceil(q * 2^shift)
    return Fraction(n, 1 << shift)


def sqrt_bounds(q: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Exact rational bounds lo <= sqrt(q) <= hi with hi - lo <= 2^(1-bits)*sqrt(q)-ish."""
    if q < 0:
        raise DomainError("sqrt of a negative rational")
    if q == 0:
        return ZERO, ZERO
    # scale so the integer sqrt carries enough bits
    m = bits + 4 + max(0, -_floor_log2(q) // 2 + 1)
    s = math.isqrt((q.numerator << (2 * m)) // q.denominator)
    lo = Fraction(s, 1 << m)
    hi = Fraction(s + 1, 1 << m)
    return lo, hi


def frac_to_decimal(q: Fraction, places: int = 30) -> str:
    """Exact decimal expansion of q truncated toward zero at `places` digits."""
    sign = "-" if q < 0 else ""
    q = abs(q)
    ipart = q.numerator // q.denominator
    rem = q.numerator - ipart * q.denominator
    digits = []
    for _ in range(places):
        rem *= 10
        d = rem // q.denominator
        digits.append(str(d))
        rem -= d * q.denominator
        if rem == 0:
            break
    frac = "".join(digits)
    return f"{sign}{ipart}.{frac}" if frac else f"{sign}{ipart}"


@dataclass(frozen=True)
class ApproxReal:
    """A certified bracket: the true value lies in [value - err, value + err].

    `value` is a dyadic rational, `err` an exact nonnegative rational. All
    arithmetic propagates worst-case error and accounts for its own dyadic
    rounding exactly.
    """

    value: Fraction
    err: Fraction = ZERO

    def __post_init__(self) -> None:
        if self.err < 0:
            raise DomainError("negative error radius")
        object.__setattr__(self, "err", err_up(self.err))

    # ---- constructors ----

    @staticmethod
    def exact(q: Fraction | int) -> "ApproxReal":
        return ApproxReal(Fraction(q), ZERO)

    @staticmethod
    def from_rational(q: Fraction | int, prec: int | None = None,
                      err: Fraction = ZERO) -> "ApproxReal":
        p = _precision if prec is None else prec
        v, r = round_to_bits(Fraction(q), p)
        return ApproxReal(v, err + r)

    @staticmethod
    def from_bracket(lo: Fraction, hi: Fraction, prec: int | None = None) -> "ApproxReal":
        if hi < lo:
            raise DomainError("empty bracket")
        p = _precision if prec is None else prec
        mid = (lo + hi) / 2
        v, r = round_to_bits(mid, p)
        return ApproxReal(v, (hi - lo) / 2 + r)

    # ---- views ----

    @property
    def lo(self) -> Fraction:
        return self.value - self.err

    @property
    def hi(self) -> Fraction:
        return self.value + self.err

    def contains(self, q: Fraction | int) -> bool:
        return self.lo <= q <= self.hi

    def overlaps(self, other: "ApproxReal", slack: Fraction = ZERO) -> bool:
        return abs(self.value - other.value) <= self.err + other.err + slack

    def abs_upper(self) -> Fraction:
        return abs(self.value) + self.err

    def decimal(self, places: int = 30) -> str:
        return frac_to_decimal(self.value, places)

    # ---- arithmetic ----

    def _prec(self) -> int:
        return _precision

    def __neg__(self) -> "ApproxReal":
        return ApproxReal(-self.value, self.err)

    def __abs__(self) -> "ApproxReal":
        return ApproxReal(abs(self.value), self.err)

    def __add__(self, other: "ApproxReal | Fraction | int") -> "ApproxReal":
        other = _coerce(other)
        v, r = round_to_bits(self.value + other.value, self._prec())
        return ApproxReal(v, self.err + other.err + r)

    __radd__ = __add__

    def __sub__(self, other: "ApproxReal | Fraction | int") -> "ApproxReal":
        return self + (-_coerce(other))

    def __rsub__(self, other: "ApproxReal | Fraction | int") -> "ApproxReal":
        return _coerce(other) + (-self)

    def __mul__(self, other: "ApproxReal | Fraction | int") -> "ApproxReal":
        other = _coerce(other)
        v, r = round_to_bits(self.value * other.value, self._prec())
        err = (abs(self.value) * other.err + abs(other.value) * self.err
               + self.err * other.err + r)
        return ApproxReal(v, err)

    __rmul__ = __mul__

    def __truediv__(self, other: "ApproxReal | Fraction | int") -> "ApproxReal":
        other = _coerce(other)
        bmag = abs(other.value)
        if bmag <= other.err:
            raise DomainError("division by a bracket containing zero")
        q = self.value / other.value
        v, r = round_to_bits(q, self._prec())
        err = (self.err * bmag + abs(self.value) * other.err) / (bmag * (bmag - other.err)) + r
        return ApproxReal(v, err)

    def __rtruediv__(self, other: "ApproxReal | Fraction | int") -> "ApproxReal":
        return _coerce(other) / self

    def sqrt(self, prec: int | None = None) -> "ApproxReal":
        p = self._prec() if prec is None else prec
        if self.lo < 0:
            raise DomainError("sqrt of a bracket extending below zero")
        lo, _ = sqrt_bounds(self.lo, p)
        _, hi = sqrt_bounds(self.hi, p)
        return ApproxReal.from_bracket(lo, hi, p)

    def power(self, n: int) -> "ApproxReal":
        if n < 0:
            raise DomainError("negative powers not supported")
        out = ApproxReal.exact(1)
        base = self
        e = n
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out


def _coerce(x: "ApproxReal | Fraction | int") -> ApproxReal:
    if isinstance(x, ApproxReal):
        return x
    return ApproxReal.exact(Fraction(x))


def sum_approx(terms: Iterable[ApproxReal]) -> ApproxReal:
    """Left-to-right certified sum (fixed order for reproducibility)."""
    total = ApproxReal.exact(0)
    for t in terms:
        total = total + t
    return total


# ---------------------------------------------------------------------------
# Harmonic numbers
# ---------------------------------------------------------------------------

class HarmonicCache:
    """Monotone, append-only cache of H(n) = sum_{k<=n} 1/k.

    Safe for concurrent reads once warmed; verification runs never evict.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [ZERO]

    def harmonic(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError("harmonic number needs n >= 0")
        vals = self._values
        while len(vals) <= n:
            m = len(vals)
            vals.append(vals[m - 1] + Fraction(1, m))
        return vals[n]

    def __len__(self) -> int:
        return len(self._values)


_cache = HarmonicCache()


def harmonic(n: int) -> Fraction:
    """H(n), exact, memoized in the shared cache."""
    return _cache.harmonic(n)


# ---------------------------------------------------------------------------
# Elementary tail brackets
# ---------------------------------------------------------------------------

def zeta2_tail_bracket(N: int) -> tuple[Fraction, Fraction]:
    """Integral-comparison bracket: 1/(N+1) <= sum_{n>N} 1/n^2 <= 1/N."""
    if N < 1:
        raise DomainError("tail bracket needs N >= 1")
    return Fraction(1, N + 1), Fraction(1, N)


def even_zeta_bound(j: int) -> Fraction:
    """Certified upper bound 2 for sum_{n>=1} 1/n^(2j), any j >= 1.

    Follows from the integral comparison sum <= 1 + 1/(2j-1) <= 2.
    """
    if j < 1:
        raise DomainError("even zeta bound needs j >= 1")
    return Fraction(2)


# ---------------------------------------------------------------------------
# pi oracle (Machin arctangent series, independent of everything else)
# ---------------------------------------------------------------------------

def _atan_inv_bracket(m: int, eps: Fraction) -> tuple[Fraction, Fraction]:
    """Exact bracket for arctan(1/m) via the alternating Taylor series.

    Consecutive partial sums bracket the limit, so [min(S_T, S_{T+1}),
    max(S_T, S_{T+1})] is certified once the appended term is below eps.
    """
    s = ZERO
    term_num = Fraction(1, m)
    k = 0
    prev = s
    while True:
        prev = s
        t = term_num / (2 * k + 1)
        s = s + t if k % 2 == 0 else s - t
        if t <= eps and k > 0:
            break
        term_num /= m * m
        k += 1
    return (min(prev, s), max(prev, s))


def pi_oracle(precision_bits: int) -> ApproxReal:
    """pi to the requested precision via 16*atan(1/5) - 4*atan(1/239).

    The truncation error is the exact alternating-series bracket; the only
    other error is the final dyadic rounding, also exact.
    """
    require_precision(precision_bits)
    eps = Fraction(1, 1 << (precision_bits + 8))
    lo5, hi5 = _atan_inv_bracket(5, eps / 32)
    lo239, hi239 = _atan_inv_bracket(239, eps / 8)
    lo = 16 * lo5 - 4 * hi239
    hi = 16 * hi5 - 4 * lo239
    return ApproxReal.from_bracket(lo, hi, precision_bits)


# ---------------------------------------------------------------------------
# Bernoulli numbers and Euler-Maclaurin power-sum tails
# ---------------------------------------------------------------------------

def _bernoulli_even(count: int) -> list[Fraction]:
    """[B_2, B_4, ..., B_{2*count}] via the defining recurrence."""
    total = 2 * count + 1
    b = [ZERO] * total
    b[0] = ONE
    for m in range(1, total):
        acc = ZERO
        for j in range(m):
            acc += Fraction(math.comb(m + 1, j)) * b[j]
        b[m] = -acc / (m + 1)
    return [b[2 * i] for i in range(1, count + 1)]


_BERNOULLI_EVEN = _bernoulli_even(16)


def power_sum_tail_bracket(N: int, j: int, em_terms: int = 6) -> tuple[Fraction, Fraction]:
    """Exact rational bracket for sum_{n>N} 1/n^(2j).

    Euler-Maclaurin at a = N+1:
        tail = 1/((2j-1) a^(2j-1)) + 1/(2 a^(2j))
               + sum_i B_{2i} * (2j+2i-2)! / ((2i)! (2j-1)!) / a^(2j+2i-1) + R,
    and since x^(-2j) is completely monotone the remainder R is bounded by
    the first omitted term and shares its sign, so appending one extra term
    yields a two-sided bracket.
    """
    if N < 1 or j < 1:
        raise DomainError("power_sum_tail_bracket needs N, j >= 1")
    if em_terms < 0 or em_terms + 1 > len(_BERNOULLI_EVEN):
        raise ResourceError("requested Euler-Maclaurin depth not available")
    a = N + 1
    s = Fraction(1, (2 * j - 1) * a ** (2 * j - 1)) + Fraction(1, 2 * a ** (2 * j))
    for i in range(1, em_terms + 1):
        coef = _BERNOULLI_EVEN[i - 1] * Fraction(
            math.factorial(2 * j + 2 * i - 2),
            math.factorial(2 * i) * math.factorial(2 * j - 1))
        s += coef / a ** (2 * j + 2 * i - 1)
    i = em_terms + 1
    omit = _BERNOULLI_EVEN[i - 1] * Fraction(
        math.factorial(2 * j + 2 * i - 2),
        math.factorial(2 * i) * math.factorial(2 * j - 1)) / a ** (2 * j + 2 * i - 1)
    return (min(s, s + omit), max(s, s + omit))
