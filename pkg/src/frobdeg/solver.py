"""Frobenius degree computation and representability witnesses.

A target ``F`` is *representable* by generators ``A_1..A_n`` when
``F = x_1 A_1 + ... + x_n A_n`` with every ``x_i`` zero or monic.  The Frobenius
degree ``g`` is the largest degree of a monic non-representable target
(``NEG_INF`` when there is none).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    CharacteristicMismatch,
    CharacteristicTooSmall,
    ConstantInput,
    DegreeTooSmall,
    FieldMismatch,
    FieldTooSmall,
    InvalidInput,
    NotCoprime,
    NotMonic,
    NotPairwiseCoprime,
    VerificationFailed,
)
from .poly import NEG_INF, Poly, bezout, gcd, gcd_all, to_vector
from .typespace import TypeTuple, build_piece, count_types, enumerate_types, pieces

RANK_CRITERION = "rank_criterion"
ORACLE_FALLBACK = "oracle_fallback"
CLOSED_FORM_DIM2 = "closed_form_dim2"
UNIT_GENERATOR = "unit_generator"
POSITIVE_CHARACTERISTIC = "positive_characteristic"


@dataclass
class SolverConfig:
    permute_cap: int = 5040
    capacity: int = 2**24


@dataclass
class FrobeniusReport:
    g: int | float
    upper_bound: int | None
    lower_bound: int | None
    method: str
    probed_degrees: list = field(default_factory=list)
    counterexample: Poly | None = None


@dataclass(frozen=True)
class SolutionWitness:
    x: tuple
    type: TypeTuple | None = None

    def combination(self, A: Sequence[Poly]) -> Poly:
        total = Poly.zero(A[0].field)
        for xi, Ai in zip(self.x, A):
            total = total + xi * Ai
        return total

    def is_valid(self, F: Poly, A: Sequence[Poly]) -> bool:
        return (
            len(self.x) == len(A)
            and all(xi.in_nonneg_cone() for xi in self.x)
            and self.combination(A) == F
        )


# -- input checks ----------------------------------------------------------------

def _generators(A: Sequence[Poly], min_count: int = 2) -> list:
    A = list(A)
    if len(A) < min_count:
        raise InvalidInput(f"need at least {min_count} generators, got {len(A)}")
    F = A[0].field
    for p in A:
        if p.field != F:
            raise FieldMismatch("generators over different fields")
        if not p.is_monic():
            raise NotMonic(f"generator {p} is not monic")
    return A


def _require_coprime(A: Sequence[Poly]):
    if gcd_all(A).degree != 0:
        raise NotCoprime("generators are not coprime")


def _require_nonconstant(A: Sequence[Poly]):
    if any(p.degree < 1 for p in A):
        raise ConstantInput("a generator is constant")


def _require_char(field, n: int):
    p = field.characteristic
    if 0 < p <= n:
        raise CharacteristicTooSmall(f"characteristic {p} does not exceed n = {n}")


def _require_monic_target(F: Poly):
    if not F.is_monic():
        raise NotMonic(f"target {F} is not monic")


def _verified(w: SolutionWitness, F: Poly, A: Sequence[Poly]) -> SolutionWitness:
    if not w.is_valid(F, A):
        raise VerificationFailed(f"witness {[str(x) for x in w.x]} does not represent {F}")
    return w


# -- bounds ------------------------------------------------------------------------

def _ordered_bound(seq: list) -> int:
    """The recursive bound for one ordering of the generators."""
    if len(seq) == 2:
        return seq[0].degree + seq[1].degree
    head, last = seq[:-1], seq[-1]
    D = gcd_all(head)
    if D.degree == 0:
        return _ordered_bound(head)
    return max(last.degree, _ordered_bound([h // D for h in head])) + D.degree


def upper_bound(A: Sequence[Poly], permute_cap: int = 5040) -> int:
    """Recursive upper bound, minimised over the choice of the last generator.

    The remaining n-1 generators are also tried in every order while
    ``(n-1)! <= permute_cap``; otherwise only their input order is used.
    """
    A = _generators(A)
    _require_nonconstant(A)
    _require_coprime(A)
    n = len(A)
    if n == 2:
        return A[0].degree + A[1].degree
    best = None
    for last in range(n):
        rest = A[:last] + A[last + 1:]
        orders = itertools.permutations(rest) if math.factorial(n - 1) <= permute_cap else [rest]
        for order in orders:
            u = _ordered_bound(list(order) + [A[last]])
            if best is None or u < best:
                best = u
    return best


def lower_bound(degrees: Sequence[int]) -> int:
    """Largest d >= 0 with sum(max(d - a_i, 0)) <= d."""
    degrees = [int(a) for a in degrees]
    if len(degrees) < 2 or any(a < 1 for a in degrees):
        raise InvalidInput("need n >= 2 positive degrees")
    best = 0
    for d in range(sum(degrees) + 2):
        if sum(max(d - a, 0) for a in degrees) <= d:
            best = d
    return best


# -- degree scan --------------------------------------------------------------------

def is_full(d: int, A: Sequence[Poly]) -> bool:
    """True when every monic target of degree ``d`` is representable (rank criterion)."""
    A = _generators(A)
    _require_nonconstant(A)
    field_ = A[0].field
    _require_char(field_, len(A))
    degrees = [p.degree for p in A]
    if d < min(degrees):
        return False
    count = count_types(d, degrees)
    if count >= field_.cardinality:
        raise FieldTooSmall(d, count, field_.cardinality)
    for T in enumerate_types(d, degrees):
        # rank(A_T) <= ind(T), so such types can never reach rank d
        if T.ind < d:
            continue
        if build_piece(T, A, d).rank == d:
            return True
    return False


def frobenius_degree(A: Sequence[Poly], config: SolverConfig | None = None) -> FrobeniusReport:
    config = config or SolverConfig()
    A = _generators(A)
    field_ = A[0].field
    n = len(A)
    if any(p.degree == 0 for p in A):
        return FrobeniusReport(NEG_INF, None, None, UNIT_GENERATOR)
    _require_coprime(A)
    if 0 < field_.characteristic <= n:
        return FrobeniusReport(NEG_INF, None, None, POSITIVE_CHARACTERISTIC)

    hi = upper_bound(A, config.permute_cap)
    lo = lower_bound([p.degree for p in A])
    probed = []
    for d in range(hi, lo - 1, -1):
        probed.append(d)
        try:
            full = is_full(d, A)
        except FieldTooSmall:
            from .oracle import brute_g

            report = brute_g(A, hi, capacity=config.capacity)
            report.upper_bound, report.lower_bound = hi, lo
            report.method = ORACLE_FALLBACK
            return report
        if not full:
            return FrobeniusReport(d, hi, lo, RANK_CRITERION, probed)
    raise VerificationFailed(f"degree {lo} reported full although it is a proven lower bound")


# -- dimension two ---------------------------------------------------------------------

def frobenius_dim2(A: Poly, B: Poly) -> FrobeniusReport:
    A, B = _generators([A, B])
    _require_nonconstant([A, B])
    _require_coprime([A, B])
    if A.field.characteristic == 2:
        raise CharacteristicTooSmall("the closed form needs characteristic 0 or odd")
    g = A.degree + B.degree
    return FrobeniusReport(g, g, g, CLOSED_FORM_DIM2, [], A * B - A - B)


def dim2_solution(A: Poly, B: Poly, F: Poly) -> SolutionWitness:
    """Cone solution ``x*A + y*B = F`` with ``deg x = deg B`` (needs deg F > deg A + deg B)."""
    A, B = _generators([A, B])
    _require_nonconstant([A, B])
    _require_coprime([A, B])
    _require_monic_target(F)
    if F.degree <= A.degree + B.degree:
        raise DegreeTooSmall(f"deg F = {F.degree} <= {A.degree + B.degree}")
    _, (u, v) = bezout([A, B])
    q, x0 = divmod(u * F, B)
    y0 = v * F + q * A
    return _verified(SolutionWitness((x0 + B, y0 - A)), F, [A, B])


# -- representability ---------------------------------------------------------------

def _witness_from_piece(T: TypeTuple, xi: Sequence, A: Sequence[Poly]) -> SolutionWitness:
    F = A[0].field
    xs = []
    pos = 0
    for i, e in enumerate(T.entries):
        if e == NEG_INF:
            xs.append(Poly.zero(F))
        elif e == 0:
            xs.append(Poly.constant(F, 1))
        else:
            # block columns are A_i t^(e-1), ..., A_i t^0
            lower = list(xi[pos:pos + e])
            pos += e
            xs.append(Poly._from_raw(F, lower[::-1] + [F.one]))
    return SolutionWitness(tuple(xs), T)


def _consistent_pieces(F: Poly, A: list):
    d = F.degree
    vec = to_vector(F, d)
    for piece in pieces(d, A):
        xi = piece.solve(vec)
        if xi is not None:
            yield piece, xi


def solve_for(F: Poly, A: Sequence[Poly]) -> SolutionWitness | None:
    """A cone witness for ``F``, or ``None`` when ``F`` is not representable."""
    A = _generators(A)
    _require_monic_target(F)
    if F.field != A[0].field:
        raise FieldMismatch("target and generators over different fields")
    _require_char(F.field, len(A))
    for i, p in enumerate(A):
        if p.degree == 0:
            xs = [Poly.zero(F.field)] * len(A)
            xs[i] = F
            return _verified(SolutionWitness(tuple(xs)), F, A)
    for piece, xi in _consistent_pieces(F, A):
        return _verified(_witness_from_piece(piece.type, xi, A), F, A)
    return None


# -- positive characteristic ------------------------------------------------------------

def charp_unbounded(A: Sequence[Poly], F: Poly, m: int) -> SolutionWitness:
    """Witness with every ``deg x_i >= m`` when ``0 < char <= n``.

    Blocks of ``p`` generators multiplied by their product cofactors sum to zero,
    so high-degree multiples of those cofactors can be added to any Bezout
    solution without changing the total.
    """
    A = _generators(A)
    field_ = A[0].field
    n, p = len(A), field_.characteristic
    if p == 0 or p > n:
        raise CharacteristicMismatch(f"needs 0 < char <= n, got char {p} with n = {n}")
    _require_coprime(A)
    _require_monic_target(F)
    if m < 1:
        raise InvalidInput("m must be positive")

    blocks, rem = divmod(n, p)
    R = list(range(blocks * p))
    S = list(range(n - p, n)) if rem else []
    prod_R = _product([A[i] for i in R])
    cof_R = {i: prod_R // A[i] for i in R}
    _, G = bezout(A)
    G = [g * F for g in G]
    max_g = max((g.degree for g in G if not g.is_zero()), default=-1)

    if not S:
        low = max(m, max_g - min(c.degree for c in cof_R.values()) + 1)
        xs = [Poly.monomial(field_, low) * cof_R[i] + G[i] for i in range(n)]
    else:
        prod_S = _product([A[i] for i in S])
        cof_S = {i: prod_S // A[i] for i in S}
        low = max(m, max_g - min(c.degree for c in cof_S.values()) + 1)
        high = max(
            [m, max_g - min(c.degree for c in cof_R.values()) + 1]
            + [low + cof_S[i].degree - cof_R[i].degree + 1 for i in R if i in cof_S]
        )
        xs = []
        for i in range(n):
            x = G[i]
            if i in cof_R:
                x = x + Poly.monomial(field_, high) * cof_R[i]
            if i in cof_S:
                x = x + Poly.monomial(field_, low) * cof_S[i]
            xs.append(x)
    w = _verified(SolutionWitness(tuple(xs)), F, A)
    if min(x.degree for x in w.x) < m:
        raise VerificationFailed("witness degrees fell below the requested minimum")
    return w


def _product(polys: Sequence[Poly]) -> Poly:
    out = Poly.constant(polys[0].field, 1)
    for p in polys:
        out = out * p
    return out


# -- type-denumerant ---------------------------------------------------------------------

@dataclass(frozen=True)
class Dim2Extras:
    C: int
    chi_AB: int
    chi_BA: int


@dataclass(frozen=True)
class Denumerant:
    types: tuple
    count: int
    dim2: Dim2Extras | None = None


def type_denumerant(F: Poly, A: Sequence[Poly]) -> Denumerant:
    """Distinct degree types among all cone solutions of ``F``."""
    A = _generators(A)
    _require_nonconstant(A)
    _require_monic_target(F)
    _require_char(F.field, len(A))
    types = tuple(piece.type for piece, _ in _consistent_pieces(F, A))
    extras = None
    if len(A) == 2:
        f, a, b = F.degree, A[0].degree, A[1].degree
        if f > a + b:
            extras = Dim2Extras(
                C=len(types) - 2 * (f - a - b),
                chi_AB=sum(1 for T in types if T.j == 0 and T.entries[1] < a),
                chi_BA=sum(1 for T in types if T.j == 1 and T.entries[0] < b),
            )
    return Denumerant(types, len(types), extras)


# -- explicit families -------------------------------------------------------------------

def product_family(A: Sequence[Poly]) -> tuple:
    """``(A~, g, F)`` with ``A~_i = P / A_i``, ``g = sum deg A_i`` and ``F = P - sum A~_i``."""
    A = _generators(A)
    _require_nonconstant(A)
    _require_char(A[0].field, len(A))
    for i, j in itertools.combinations(range(len(A)), 2):
        if gcd(A[i], A[j]).degree != 0:
            raise NotPairwiseCoprime(f"generators {i} and {j} share a factor")
    P = _product(A)
    tilde = [P // a for a in A]
    F = P - sum(tilde[1:], tilde[0])
    return tilde, sum(a.degree for a in A), F


def stacked_family(head: Sequence[Poly], last: Poly, G: Poly) -> Poly:
    """Counter-example ``D*G + (D - 1)*last`` where ``D = gcd(head)``."""
    head = _generators(head)
    _require_nonconstant(head)
    (last,) = _generators([last], min_count=1)
    D = gcd_all(head)
    if D.degree < 1:
        raise InvalidInput("gcd of the leading generators must have positive degree")
    if any(h == D for h in head):
        raise InvalidInput("the gcd must differ from every leading generator")
    if gcd(D, last).degree != 0:
        raise NotCoprime("gcd of the leading generators shares a factor with the last one")
    _require_monic_target(G)
    if last.degree <= G.degree:
        raise DegreeTooSmall("the last generator must have degree above deg G")
    _require_char(D.field, len(head) + 1)
    if solve_for(G, [h // D for h in head]) is not None:
        raise InvalidInput(f"{G} is representable by the reduced generators")
    return D * G + (D - 1) * last
