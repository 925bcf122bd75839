"""Explicit counter-examples at the Frobenius degree.

When no affine piece at degree ``d`` has full rank, each piece lies in a
hyperplane of the monic slice ``{w : w[0] = 1}``.  A line through a point that
avoids every hyperplane but one, and a point off that one, meets the union in at
most ``|T_d|`` points; any other point of the line is a non-representable target.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import FieldTooSmall, RankTooHigh, VerificationFailed
from .field import Field, random_raw
from .linalg import augmented_rank, dot, nullspace, transpose
from .poly import NEG_INF, Poly, from_vector
from .solver import (
    FrobeniusReport,
    SolverConfig,
    _generators,
    _require_char,
    _require_nonconstant,
    frobenius_degree,
    solve_for,
)
from .typespace import AffinePiece, TypeTuple, count_types, pieces

MAX_SAMPLING_ROUNDS = 10_000


@dataclass(frozen=True)
class PlaneCert:
    """Hyperplane ``normal . w = rhs`` of the monic slice containing one piece."""

    type: TypeTuple
    field: Field
    normal: tuple
    B: tuple
    rhs: object

    def value(self, w: Sequence):
        return dot(self.field, self.normal, w)


def _unit_vector(field: Field, length: int) -> tuple:
    return (field.one,) + (field.zero,) * (length - 1)


def normal_vector(piece: AffinePiece) -> PlaneCert:
    """Normal orthogonal to the piece's columns, with first coordinate 0 and leading 1."""
    F = piece.A.field
    d = piece.d
    if piece.rank >= d:
        raise RankTooHigh(f"piece {piece.type} has rank {piece.rank} = d")
    for v in nullspace(transpose(piece.A)):
        # the first row of A_T is zero, so e = (1, 0, ..., 0) is always a normal
        n = (F.zero,) + v[1:]
        lead = next((c for c in n if not F.is_zero(c)), None)
        if lead is None:
            continue
        inv = F.inv(lead)
        n = tuple(F.mul(inv, c) for c in n)
        return PlaneCert(piece.type, F, n, piece.B, dot(F, n, piece.B))
    raise RankTooHigh(f"no normal independent of e for {piece.type}")


def dedup_planes(certs: Sequence[PlaneCert], U: PlaneCert) -> list:
    """Keep the planes whose 3-row system with ``e`` and ``U`` has augmented rank 3."""
    F = U.field
    e = (_unit_vector(F, len(U.normal)), F.one)
    base = [e, (U.normal, U.rhs)]
    return [c for c in certs if augmented_rank(F, base + [(c.normal, c.rhs)]) == 3]


def counter_example(A: Sequence[Poly], d: int, rng) -> Poly:
    """Monic degree-``d`` target with no cone representation (``d`` must be ``g``)."""
    A = _generators(A)
    _require_nonconstant(A)
    F = A[0].field
    _require_char(F, len(A))
    degrees = [p.degree for p in A]
    count = count_types(d, degrees)
    if count == 0:
        G = Poly.monomial(F, d)
        return _checked(G, A)
    if count >= F.cardinality:
        raise FieldTooSmall(d, count, F.cardinality)

    certs = [normal_vector(piece) for piece in pieces(d, A)]
    U = certs[0]
    kept = dedup_planes(certs, U)

    pivot = next(i for i, c in enumerate(U.normal) if not F.is_zero(c))
    free = [i for i in range(1, d + 1) if i != pivot]

    bound = 1
    for _ in range(MAX_SAMPLING_ROUNDS):
        u = [F.zero] * (d + 1)
        u[0] = F.one
        for i in free:
            u[i] = random_raw(F, rng, bound)
        # normal[pivot] == 1
        u[pivot] = F.sub(U.rhs, dot(F, U.normal, u))
        if all(not F.is_zero(F.sub(c.value(u), c.rhs)) for c in kept):
            break
        bound *= 2
    else:
        raise VerificationFailed("could not sample a point avoiding every other plane")

    v = [F.zero] * (d + 1)
    v[0] = F.one
    v[pivot] = F.add(U.rhs, F.one)

    # the line u + alpha*(v - u) meets plane T at alpha = n_T.(B_T - u) / n_T.(v - u)
    diff = [F.sub(b, a) for a, b in zip(u, v)]
    gamma = {F.zero}
    for c in kept:
        slope = c.value(diff)
        if not F.is_zero(slope):
            gamma.add(F.div(F.sub(c.rhs, c.value(u)), slope))

    bound = 1
    for _ in range(MAX_SAMPLING_ROUNDS):
        beta = random_raw(F, rng, bound)
        if beta not in gamma:
            break
        bound *= 2
    else:
        raise VerificationFailed("could not sample a line parameter outside the hit set")

    one_minus = F.sub(F.one, beta)
    w = [F.add(F.mul(one_minus, a), F.mul(beta, b)) for a, b in zip(u, v)]
    if F.is_zero(F.sub(U.value(w), U.rhs)):
        raise VerificationFailed("sampled point lies on the reference plane")
    for c in kept:
        if F.is_zero(F.sub(c.value(w), c.rhs)):
            raise VerificationFailed(f"sampled point lies on the plane of {c.type}")
    return _checked(from_vector(w, F), A)


def _checked(G: Poly, A: list) -> Poly:
    if solve_for(G, A) is not None:
        raise VerificationFailed(f"{G} is representable; not a counter-example")
    return G


def certified_degree(A: Sequence[Poly], rng, config: SolverConfig | None = None) -> FrobeniusReport:
    """:func:`frobenius_degree` plus a counter-example of degree ``g`` when ``g`` is finite."""
    report = frobenius_degree(A, config)
    if report.g != NEG_INF and report.counterexample is None:
        report.counterexample = counter_example(A, report.g, rng)
    return report
