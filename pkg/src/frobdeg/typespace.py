"""Degree types of cone solutions and the affine pieces they span.

For a target degree ``d`` and generator degrees ``a_1..a_n`` a *type* is a tuple
``(e_1, ..., e_n)`` of candidate degrees for ``x_1, ..., x_n``: exactly one index
``j`` has ``e_j = d - a_j``; every other entry is ``NEG_INF`` (``x_i = 0``) or an
integer in ``[0, d - a_i)``.  The targets reachable with type ``T`` form the affine
set ``colspace(A_T) + B_T`` in coordinate-vector form (see :func:`poly.to_vector`).

Indices are 0-based throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Iterator, Sequence

from . import linalg
from .errors import DegreeOverflow, InvalidInput, TypeMismatch
from .linalg import Matrix
from .poly import NEG_INF, Poly, to_vector


@dataclass(frozen=True)
class TypeTuple:
    entries: tuple
    d: int
    j: int
    degrees: tuple

    def __post_init__(self):
        e, a = self.entries, self.degrees
        if len(e) != len(a):
            raise TypeMismatch("entries and degrees differ in length")
        if e[self.j] != self.d - a[self.j] or e[self.j] < 0:
            raise TypeMismatch(f"entry {self.j} must equal d - a_j >= 0")
        for i, (ei, ai) in enumerate(zip(e, a)):
            if i != self.j and ei != NEG_INF and not 0 <= ei < self.d - ai:
                raise TypeMismatch(f"entry {i} = {ei} out of range for degree {ai}")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def R(self) -> tuple:
        """Indices whose x_i has positive degree (free lower coefficients)."""
        return tuple(i for i, e in enumerate(self.entries) if e != NEG_INF and e > 0)

    @property
    def S(self) -> tuple:
        """Indices with x_i = 1."""
        return tuple(i for i, e in enumerate(self.entries) if e == 0)

    @property
    def ind(self) -> int:
        return sum(max(e, 0) for e in self.entries)

    def sort_key(self):
        return (self.j, self.entries)

    def __str__(self):
        body = ", ".join("-inf" if e == NEG_INF else str(e) for e in self.entries)
        return f"({body})"


def _validate_degrees(degrees: Sequence[int]) -> tuple:
    degrees = tuple(int(a) for a in degrees)
    if len(degrees) < 2:
        raise InvalidInput("at least two generators are required")
    if any(a < 1 for a in degrees):
        raise InvalidInput("generator degrees must be positive")
    return degrees


def enumerate_types(d: int, degrees: Sequence[int]) -> Iterator[TypeTuple]:
    """Lazily yield every type of degree ``d``, ordered by ``(j, entries)``."""
    degrees = _validate_degrees(degrees)
    for j, aj in enumerate(degrees):
        if aj > d:
            continue
        choices = [
            (d - aj,) if i == j else (NEG_INF,) + tuple(range(max(d - ai, 0)))
            for i, ai in enumerate(degrees)
        ]
        for entries in itertools.product(*choices):
            yield TypeTuple(entries, d, j, degrees)


def count_types(d: int, degrees: Sequence[int]) -> int:
    degrees = _validate_degrees(degrees)
    return sum(
        prod(max(d - ai, 0) + 1 for i, ai in enumerate(degrees) if i != j)
        for j, aj in enumerate(degrees)
        if aj <= d
    )


def build_mi(A: Poly, e: int, d: int) -> Matrix:
    """Columns are the vectors of ``A*t^e, A*t^(e-1), ..., A``."""
    if e < 0:
        raise InvalidInput("shift degree must be non-negative")
    if e + A.degree > d:
        raise DegreeOverflow(f"deg A + e = {A.degree + e} exceeds {d}")
    cols = [to_vector(A.shift(e - c), d) for c in range(e + 1)]
    return Matrix.from_columns(A.field, cols, d + 1)


@dataclass(frozen=True)
class AffinePiece:
    type: TypeTuple
    A: Matrix
    B: tuple

    @cached_property
    def rank(self) -> int:
        return linalg.rank(self.A)

    @property
    def d(self) -> int:
        return self.type.d

    def solve(self, vec: Sequence):
        """Coefficients ``xi`` with ``A xi + B = vec``, or ``None``."""
        F = self.A.field
        rhs = tuple(F.sub(v, b) for v, b in zip(vec, self.B))
        return linalg.solve(self.A, rhs)

    def contains(self, vec: Sequence) -> bool:
        return self.solve(vec) is not None

    def point(self, xi: Sequence) -> tuple:
        F = self.A.field
        return tuple(F.add(a, b) for a, b in zip(self.A.apply(xi), self.B))


def build_piece(T: TypeTuple, A: Sequence[Poly], d: int) -> AffinePiece:
    A = list(A)
    degrees = tuple(p.degree for p in A)
    if T.d != d or T.degrees != degrees:
        raise TypeMismatch(f"type {T} does not belong to degree {d} and degrees {degrees}")
    F = A[0].field
    R, S = T.R, T.S
    B = [F.zero] * (d + 1)
    blocks = []
    for i in R:
        Mi = build_mi(A[i], T.entries[i], d)
        first = Mi.column(0)
        B = [F.add(x, y) for x, y in zip(B, first)]
        blocks.append(Matrix.from_columns(F, Mi.columns[1:], d + 1))
    for i in S:
        B = [F.add(x, y) for x, y in zip(B, to_vector(A[i], d))]
    if blocks:
        AT = linalg.hstack(*blocks)
    else:
        AT = Matrix.zeros(F, d + 1, 1)
    return AffinePiece(T, AT, tuple(B))


def pieces(d: int, A: Sequence[Poly]) -> Iterator[AffinePiece]:
    A = list(A)
    for T in enumerate_types(d, [p.degree for p in A]):
        yield build_piece(T, A, d)
