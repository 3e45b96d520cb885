"""The level-k vertex universe, its weight function, the two edge systems,
component enumeration, and the exact residual identities that produce the
factorization (2k+1)(2k) zeta({2}^k) = zeta({2}^{k-1}) * 6 zeta(2).

Vertices come in two kinds:
  V1 (mu; n): an index set mu (strictly increasing, |mu| <= k-1) with a
      distinguished positive integer n;
  V2 (mu; l1, l2; eps): an index set (|mu| <= k-2), a pair l1 < l2, and a
      marker eps in {1, 2} selecting l_eps.

Distinctness counts how many distinguished integers avoid mu. Alpha edges
join vertices whose weights cancel in finite groups; beta edges join each
V1 vertex to the pair vertices carrying its integer, an infinite family
that cancels by harmonic telescoping. The vertices in no alpha component
reproduce (2k+1)(2k) zeta_N({2}^k) exactly at every truncation N; those in
no beta component reproduce 6 zeta_N({2}^{k-1}) zeta_N(2).

Alpha rule 2 (the eps flip) deliberately skips 2-distinct vertices with
|mu| = k-2: flipping eps there does not cancel (the pair sums to
8/(l1^2 l2^2) times the mu weight), and exactly those vertices must stay
edge-free for the residual identity to hold.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional, Union

from .numeric import ApproxReal, DomainError, ZERO, pi_oracle
from .series import mzv_limit, mzv_truncated, zeta_even_truncated


class V1(NamedTuple):
    mu: tuple[int, ...]
    n: int


class V2(NamedTuple):
    mu: tuple[int, ...]
    l1: int
    l2: int
    eps: int


Vertex = Union[V1, V2]

ALPHA_SAFETY_BOUND = 64


class StructuralFailure(AssertionError):
    """An enumerated object contradicts a structural claim (for instance an
    alpha closure that refuses to stay finite); carries the partial findings."""

    def __init__(self, message: str, artifact=None):
        super().__init__(message)
        self.artifact = artifact


def _check_mu(mu: tuple[int, ...]) -> None:
    if any(a <= 0 for a in mu):
        raise DomainError(f"index set entries must be positive: {mu}")
    if any(a >= b for a, b in zip(mu, mu[1:])):
        raise DomainError(f"index set must be strictly increasing: {mu}")


def validate_vertex(v: Vertex, k: int) -> None:
    if isinstance(v, V1):
        _check_mu(v.mu)
        if v.n <= 0:
            raise DomainError("V1 needs a positive distinguished integer")
        if len(v.mu) > k - 1:
            raise DomainError(f"V1 order {len(v.mu)} exceeds k-1 at level {k}")
    elif isinstance(v, V2):
        _check_mu(v.mu)
        if not 0 < v.l1 < v.l2:
            raise DomainError("V2 needs 0 < l1 < l2")
        if v.eps not in (1, 2):
            raise DomainError("eps must be 1 or 2")
        if len(v.mu) > k - 2:
            raise DomainError(f"V2 order {len(v.mu)} exceeds k-2 at level {k}")
    else:
        raise DomainError(f"not a vertex: {v!r}")


def distinctness(v: Vertex) -> int:
    """How many distinguished integers lie outside mu (0, 1, or 2)."""
    if isinstance(v, V1):
        return 0 if v.n in v.mu else 1
    return (v.l1 not in v.mu) + (v.l2 not in v.mu)


def _mu_square_product(mu: tuple[int, ...]) -> Fraction:
    acc = Fraction(1)
    for m in mu:
        acc /= m * m
    return acc


def weight(v: Vertex, k: int) -> Fraction:
    """The weight t_k(v), exact."""
    validate_vertex(v, k)
    j = len(v.mu)
    p = _mu_square_product(v.mu)
    if isinstance(v, V1):
        sign = -1 if j % 2 == 0 else 1
        return 6 * sign * p * Fraction(1, v.n ** (2 * (k - j)))
    sign = 1 if j % 2 == 0 else -1
    eps_sign = 1 if v.eps == 1 else -1
    le = v.l1 if v.eps == 1 else v.l2
    return Fraction(8 * sign * eps_sign, 1) * p / (
        le ** (2 * (k - j - 1)) * (v.l2 * v.l2 - v.l1 * v.l1))


def weight_form_alt(v: V2, k: int) -> Fraction:
    """The 4(...) display of the same pair weight, for cross-checking."""
    validate_vertex(v, k)
    j = len(v.mu)
    p = _mu_square_product(v.mu)
    sign = 1 if j % 2 == 0 else -1
    eps_sign = 1 if v.eps == 1 else -1
    le = v.l1 if v.eps == 1 else v.l2
    return (4 * sign * p / Fraction(le ** (2 * (k - j) - 1))
            * (Fraction(eps_sign, v.l2 - v.l1) - Fraction(1, v.l1 + v.l2)))


def weight_form_consistency(v: V2, k: int) -> bool:
    return weight(v, k) == weight_form_alt(v, k)


# ---------------------------------------------------------------------------
# Alpha edges
# ---------------------------------------------------------------------------

def _without(mu: tuple[int, ...], x: int) -> tuple[int, ...]:
    return tuple(m for m in mu if m != x)


def _with(mu: tuple[int, ...], x: int) -> tuple[int, ...]:
    return tuple(sorted(mu + (x,)))


def alpha_neighbors(v: Vertex, k: int) -> set[Vertex]:
    """All alpha partners of v.

    Rule 1 toggles n's membership in mu on V1 vertices. Rule 2 flips eps,
    except on 2-distinct vertices of top order k-2 (see module docstring).
    Rule 3 draws triangles on eps = 1 vertices (lam; a,b), (lam+a; a,b),
    (lam+b; a,b). Rule 4 toggles the larger pair element's membership on
    eps = 1 vertices that carry the smaller one.
    """
    validate_vertex(v, k)
    out: set[Vertex] = set()
    if isinstance(v, V1):
        if v.n in v.mu:
            out.add(V1(_without(v.mu, v.n), v.n))
        elif len(v.mu) + 1 <= k - 1:
            out.add(V1(_with(v.mu, v.n), v.n))
        return out

    j = len(v.mu)
    s1 = v.l1 in v.mu
    s2 = v.l2 in v.mu
    # rule 2
    if not (not s1 and not s2 and j == k - 2):
        out.add(V2(v.mu, v.l1, v.l2, 3 - v.eps))
    if v.eps == 1:
        # rule 3 triangles
        if not s1 and not s2:
            if j + 1 <= k - 2:
                out.add(V2(_with(v.mu, v.l1), v.l1, v.l2, 1))
                out.add(V2(_with(v.mu, v.l2), v.l1, v.l2, 1))
        elif s1 and not s2:
            lam = _without(v.mu, v.l1)
            out.add(V2(lam, v.l1, v.l2, 1))
            out.add(V2(_with(lam, v.l2), v.l1, v.l2, 1))
        elif s2 and not s1:
            lam = _without(v.mu, v.l2)
            out.add(V2(lam, v.l1, v.l2, 1))
            out.add(V2(_with(lam, v.l1), v.l1, v.l2, 1))
        # rule 4: membership toggle of l2 when l1 is present
        if s1 and s2:
            out.add(V2(_without(v.mu, v.l2), v.l1, v.l2, 1))
        elif s1 and not s2 and j + 1 <= k - 2:
            out.add(V2(_with(v.mu, v.l2), v.l1, v.l2, 1))
    return out


def is_alpha_residual(v: Vertex, k: int) -> bool:
    """The classified residual reading: 1-distinct V1 of order k-1 and
    2-distinct V2 of order k-2 carry no alpha edge."""
    if isinstance(v, V1):
        return len(v.mu) == k - 1 and v.n not in v.mu
    return len(v.mu) == k - 2 and v.l1 not in v.mu and v.l2 not in v.mu


# ---------------------------------------------------------------------------
# Beta edges
# ---------------------------------------------------------------------------

def beta_neighbors(v: Vertex, k: int, M: int) -> set[Vertex]:
    """All beta partners of v with integer entries <= M.

    A V1 vertex (mu; n) of order 1..k-2 joins every pair vertex that carries
    n in the marked slot; an order-0 vertex joins every empty-set pair vertex
    (the stated rule for the empty set really is that broad). Top order k-1
    carries no beta edge. V2 partners are the inverse images.
    """
    validate_vertex(v, k)
    if M < 1:
        raise DomainError("beta_neighbors needs a positive bound M")
    out: set[Vertex] = set()
    if isinstance(v, V1):
        j = len(v.mu)
        if j == 0:
            if k >= 2:
                for l1 in range(1, M + 1):
                    for l2 in range(l1 + 1, M + 1):
                        out.add(V2((), l1, l2, 1))
                        out.add(V2((), l1, l2, 2))
        elif j <= k - 2:
            for l in range(1, M + 1):
                if l == v.n:
                    continue
                if l > v.n:
                    out.add(V2(v.mu, v.n, l, 1))
                else:
                    out.add(V2(v.mu, l, v.n, 2))
        return out
    if len(v.mu) == 0:
        return {V1((), n) for n in range(1, M + 1)}
    le = v.l1 if v.eps == 1 else v.l2
    return {V1(v.mu, le)}


def is_beta_residual(v: Vertex, k: int) -> bool:
    """Only V1 vertices of top order k-1 (either distinctness) lack beta edges."""
    return isinstance(v, V1) and len(v.mu) == k - 1


# ---------------------------------------------------------------------------
# Components
# ---------------------------------------------------------------------------

def _vertex_key(v: Vertex):
    if isinstance(v, V1):
        return (0, v.mu, v.n, 0)
    return (1, v.mu, v.l1, v.l2, v.eps)


@dataclass(frozen=True)
class WeightedComponent:
    kind: str                      # "alpha" | "beta"
    k: int
    vertices: tuple[Vertex, ...]   # sorted by the canonical key
    weight_sum: Fraction
    bound: Optional[int] = None    # beta truncation, None for alpha

    @property
    def key(self) -> Vertex:
        return self.vertices[0]

    def size(self) -> int:
        return len(self.vertices)


def component(v: Vertex, kind: str, k: int, M: Optional[int] = None,
              safety: int = ALPHA_SAFETY_BOUND) -> WeightedComponent:
    """Breadth-first closure of v under the chosen edge system.

    Alpha closures must stay finite on their own; growing past `safety`
    vertices is reported as a structural failure, not truncated silently.
    Beta closures are truncated at entry bound M.
    """
    if kind == "alpha":
        neighbors = lambda u: alpha_neighbors(u, k)
    elif kind == "beta":
        if M is None:
            raise DomainError("beta closure needs a truncation bound M")
        neighbors = lambda u: beta_neighbors(u, k, M)
    else:
        raise DomainError(f"unknown edge system {kind!r}")
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for w in neighbors(u):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
        if kind == "alpha" and len(seen) > safety:
            raise StructuralFailure(
                f"alpha closure of {v} exceeded {safety} vertices",
                artifact=sorted(seen, key=_vertex_key))
    verts = tuple(sorted(seen, key=_vertex_key))
    total = sum((weight(u, k) for u in verts), ZERO)
    return WeightedComponent(kind=kind, k=k, vertices=verts,
                             weight_sum=total, bound=M)


def iter_vertices(k: int, bound: int) -> Iterator[Vertex]:
    """Every vertex at level k with all integer entries <= bound."""
    universe = range(1, bound + 1)
    for j in range(0, k):
        for mu in itertools.combinations(universe, j):
            for n in universe:
                yield V1(mu, n)
    for j in range(0, k - 1):
        for mu in itertools.combinations(universe, j):
            for l1 in universe:
                for l2 in range(l1 + 1, bound + 1):
                    yield V2(mu, l1, l2, 1)
                    yield V2(mu, l1, l2, 2)


def alpha_components_up_to(k: int, bound: int) -> list[WeightedComponent]:
    """All distinct alpha components touching vertices with entries <= bound,
    singletons excluded, deduplicated by canonical key."""
    seen: set[Vertex] = set()
    out: list[WeightedComponent] = []
    for v in iter_vertices(k, bound):
        if v in seen:
            continue
        comp = component(v, "alpha", k)
        for u in comp.vertices:
            seen.add(u)
        if comp.size() > 1:
            out.append(comp)
    return out


def residual_classification_consistent(k: int, bound: int) -> bool:
    """Exhaustively confirm: no alpha edges <=> classified alpha-residual,
    and no beta edges <=> classified beta-residual, for entries <= bound."""
    for v in iter_vertices(k, bound):
        if (len(alpha_neighbors(v, k)) == 0) != is_alpha_residual(v, k):
            return False
        if (len(beta_neighbors(v, k, bound)) == 0) != is_beta_residual(v, k):
            return False
    return True


# ---------------------------------------------------------------------------
# Residual identities
# ---------------------------------------------------------------------------

def alpha_residual_identity(k: int, N: int) -> tuple[Fraction, Fraction]:
    """lhs = (-1)^k sum of weights over alpha-residual vertices with entries
    <= N; rhs = (2k+1)(2k) zeta_N({2}^k). Returns both; they must be equal."""
    if k < 2:
        raise DomainError("needs k >= 2")
    if N > 60:
        raise DomainError("residual enumeration capped at N = 60")
    sign = 1 if k % 2 == 0 else -1
    lhs = ZERO
    universe = range(1, N + 1)
    for mu in itertools.combinations(universe, k - 1):
        muset = set(mu)
        for n in universe:
            if n in muset:
                continue
            lhs += weight(V1(mu, n), k)
    for mu in itertools.combinations(universe, k - 2):
        muset = set(mu)
        for l1 in universe:
            if l1 in muset:
                continue
            for l2 in range(l1 + 1, N + 1):
                if l2 in muset:
                    continue
                lhs += weight(V2(mu, l1, l2, 1), k)
                lhs += weight(V2(mu, l1, l2, 2), k)
    lhs *= sign
    rhs = (2 * k + 1) * (2 * k) * mzv_truncated(N, k)
    return lhs, rhs


def beta_residual_identity(k: int, N: int) -> tuple[Fraction, Fraction]:
    """lhs = (-1)^k sum over beta-residual vertices (order k-1, every n <= N);
    rhs = 6 zeta_N({2}^{k-1}) zeta_N(2)."""
    if k < 2:
        raise DomainError("needs k >= 2")
    if N > 60:
        raise DomainError("residual enumeration capped at N = 60")
    sign = 1 if k % 2 == 0 else -1
    lhs = ZERO
    universe = range(1, N + 1)
    for mu in itertools.combinations(universe, k - 1):
        for n in universe:
            lhs += weight(V1(mu, n), k)
    lhs *= sign
    rhs = 6 * mzv_truncated(N, k - 1) * zeta_even_truncated(N, 1)
    return lhs, rhs


def multiplicity_identity(k: int) -> bool:
    """6k + 8 C(k,2) = (2k+1)(2k), the count matching residual patterns to
    the factorization coefficient."""
    return 6 * k + 8 * math.comb(k, 2) == (2 * k + 1) * (2 * k)


# ---------------------------------------------------------------------------
# Absolute-convergence bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbsWeightReport:
    k: int
    j: int
    M: int
    v1_abs_sum: Fraction
    v1_bound: Fraction
    v2_abs_sum: Fraction
    v2_bound: Fraction

    @property
    def passed(self) -> bool:
        return self.v1_abs_sum <= self.v1_bound and self.v2_abs_sum <= self.v2_bound


def abs_weight_sum_bound(k: int, j: int, M: int) -> AbsWeightReport:
    """Sum |t_k| over order-j vertices with entries <= M and compare with the
    displayed absolute-convergence bounds instantiated at the truncation:
    6 zeta_M({2}^j) zeta_M(2(k-j)) for V1 and
    16 zeta_M({2}^j) zeta_M(2) zeta_M(2(k-j-1)) for V2."""
    if not 2 <= k <= 6 or not 0 <= j <= k - 1 or M > 200:
        raise DomainError("abs_weight_sum_bound: k in 2..6, j in 0..k-1, M <= 200")
    universe = range(1, M + 1)
    zmj = mzv_truncated(M, j) if j else Fraction(1)
    v1 = ZERO
    for mu in itertools.combinations(universe, j):
        for n in universe:
            v1 += abs(weight(V1(mu, n), k))
    v1_bound = 6 * zmj * zeta_even_truncated(M, k - j)
    v2 = ZERO
    v2_bound = ZERO
    if j <= k - 2:
        for mu in itertools.combinations(universe, j):
            for l1 in universe:
                for l2 in range(l1 + 1, M + 1):
                    v2 += abs(weight(V2(mu, l1, l2, 1), k))
                    v2 += abs(weight(V2(mu, l1, l2, 2), k))
        v2_bound = (16 * zmj * zeta_even_truncated(M, 1)
                    * zeta_even_truncated(M, k - j - 1))
    return AbsWeightReport(k=k, j=j, M=M, v1_abs_sum=v1, v1_bound=v1_bound,
                           v2_abs_sum=v2, v2_bound=v2_bound)


# ---------------------------------------------------------------------------
# Certified factorization at the limit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactorizationReport:
    k: int
    lhs: ApproxReal                 # (2k+1)(2k) zeta({2}^k)
    rhs: ApproxReal                 # zeta({2}^{k-1}) * 6 zeta(2)
    closed_form: ApproxReal         # pi^(2k) / (2k+1)! from the oracle
    mzv: ApproxReal

    @property
    def recursion_gap(self) -> Fraction:
        return abs(self.lhs.value - self.rhs.value)

    @property
    def recursion_budget(self) -> Fraction:
        return self.lhs.err + self.rhs.err

    @property
    def closed_form_contained(self) -> bool:
        return abs(self.mzv.value - self.closed_form.value) <= self.mzv.err + self.closed_form.err


def factorization_check(k: int, precision_bits: int) -> FactorizationReport:
    """Both sides of the factorization with certified tails, plus the chained
    closed form pi^(2k)/(2k+1)! from the independent oracle."""
    if k < 1:
        raise DomainError("needs k >= 1")
    zk = mzv_limit(k, precision_bits)
    zk1 = mzv_limit(k - 1, precision_bits)
    z1 = mzv_limit(1, precision_bits)
    lhs = zk * ((2 * k + 1) * (2 * k))
    rhs = zk1 * z1 * 6
    pi = pi_oracle(precision_bits)
    closed = pi.power(2 * k) * Fraction(1, math.factorial(2 * k + 1))
    return FactorizationReport(k=k, lhs=lhs, rhs=rhs, closed_form=closed, mzv=zk)


# ---------------------------------------------------------------------------
# Component dump format
# ---------------------------------------------------------------------------

def format_vertex(v: Vertex) -> str:
    mu = "[" + ",".join(str(m) for m in v.mu) + "]"
    if isinstance(v, V1):
        return f"V1 mu={mu} n={v.n}"
    return f"V2 mu={mu} l1={v.l1} l2={v.l2} eps={v.eps}"


def format_component(c: WeightedComponent) -> str:
    lines = [format_vertex(v) for v in c.vertices]
    lines.append(f"sum={c.weight_sum.numerator}/{c.weight_sum.denominator}")
    return "\n".join(lines) + "\n"
