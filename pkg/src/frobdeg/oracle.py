"""Brute-force ground truth over finite fields.

Two independent routes decide representability at degree ``d``:

* :func:`enumerate_reachable` sweeps every point of every affine piece and
  compares the count with ``q^d``;
* :func:`brute_solve` tries every cone tuple ``(x_1, ..., x_n)`` directly and
  never touches the type machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterator, Sequence

import numpy as np

from .errors import CapacityExceeded, InvalidInput
from .field import Field, PrimeField
from .poly import NEG_INF, Poly, from_vector
from .solver import (
    ORACLE_FALLBACK,
    UNIT_GENERATOR,
    FrobeniusReport,
    SolutionWitness,
    _generators,
    _require_char,
    _require_coprime,
    _require_monic_target,
    _require_nonconstant,
    _verified,
)
from .typespace import enumerate_types, pieces

DEFAULT_CAPACITY = 2**24
_CHUNK = 1 << 16


def _require_finite(field: Field):
    if not field.is_finite:
        raise InvalidInput(f"brute force needs a finite field, got {field}")


class ReachableSet:
    """Monic coordinate vectors of one degree, stored as a bitmap over the ``q^d`` slots.

    Slot order is lexicographic in ``(c_{d-1}, ..., c_0)`` with field elements in
    index order, so scanning slots upward is the lexicographic scan.
    """

    def __init__(self, field: Field, d: int):
        self.field = field
        self.d = d
        self.q = field.cardinality
        self.bits = np.zeros(self.q**d, dtype=bool)
        self._weights = np.array([self.q**k for k in range(d - 1, -1, -1)], dtype=np.int64)

    def slot(self, vec: Sequence) -> int:
        F = self.field
        s = 0
        for c in vec[1:]:
            s = s * self.q + F.index(c)
        return s

    def vector(self, slot: int) -> tuple:
        F = self.field
        digits = []
        for _ in range(self.d):
            slot, r = divmod(slot, self.q)
            digits.append(F.from_index(r))
        return (F.one,) + tuple(reversed(digits))

    def add(self, vec: Sequence):
        if vec[0] != self.field.one:
            raise AssertionError("reachable vectors must be monic")
        self.bits[self.slot(vec)] = True

    def add_slots(self, slots: np.ndarray):
        self.bits[slots] = True

    def __contains__(self, vec) -> bool:
        return len(vec) == self.d + 1 and vec[0] == self.field.one and bool(self.bits[self.slot(vec)])

    def __len__(self):
        return int(self.bits.sum())

    def __iter__(self) -> Iterator[tuple]:
        for s in np.flatnonzero(self.bits):
            yield self.vector(int(s))

    def first_missing(self) -> int | None:
        missing = np.flatnonzero(~self.bits)
        return int(missing[0]) if missing.size else None


@dataclass
class DegreeCensus:
    d: int
    reachable: ReachableSet
    total: int
    missing_example: Poly | None

    @property
    def is_full(self) -> bool:
        return self.missing_example is None


def _sweep_prime(piece, p: int, out: ReachableSet):
    """Vectorised sweep of one piece over F_p."""
    A = np.array(piece.A.rows, dtype=np.int64)  # (d+1, k)
    B = np.array(piece.B, dtype=np.int64)
    k = A.shape[1] if piece.type.R else 0
    if k == 0:
        out.add(piece.B)
        return
    total = p**k
    powers = np.array([p**i for i in range(k - 1, -1, -1)], dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        xi = (idx[:, None] // powers[None, :]) % p  # (m, k)
        vecs = (xi @ A.T + B[None, :]) % p  # (m, d+1)
        out.add_slots(vecs[:, 1:] @ out._weights)


def _sweep_generic(piece, out: ReachableSet):
    F = piece.A.field
    k = piece.A.ncols if piece.type.R else 0
    if k == 0:
        out.add(piece.B)
        return
    for xi in itertools.product(list(F.elements()), repeat=k):
        out.add(piece.point(xi))


def enumerate_reachable(d: int, A: Sequence[Poly], capacity: int = DEFAULT_CAPACITY) -> DegreeCensus:
    """All representable monic targets of degree ``d`` (union of the affine pieces)."""
    A = _generators(A)
    _require_nonconstant(A)
    F = A[0].field
    _require_finite(F)
    _require_char(F, len(A))
    q = F.cardinality
    total = q**d
    degrees = [p.degree for p in A]
    work = sum(q ** (T.ind if T.R else 0) for T in enumerate_types(d, degrees))
    if total > capacity or work > capacity:
        raise CapacityExceeded(f"degree {d} over {F} needs {max(total, work)} > {capacity} steps")
    reach = ReachableSet(F, d)
    for piece in pieces(d, A):
        if isinstance(F, PrimeField):
            _sweep_prime(piece, F.p, reach)
        else:
            _sweep_generic(piece, reach)
    slot = reach.first_missing()
    missing = None if slot is None else from_vector(reach.vector(slot), F)
    return DegreeCensus(d, reach, total, missing)


def _cone_candidates(F: Field, max_deg: int) -> list:
    """Zero, then monic polynomials by degree, lower coefficients lexicographic."""
    out = [Poly.zero(F)]
    elems = list(F.elements())
    for e in range(0, max_deg + 1):
        for lower in itertools.product(elems, repeat=e):
            out.append(Poly._from_raw(F, list(reversed(lower)) + [F.one]))
    return out


def brute_solve(F: Poly, A: Sequence[Poly], capacity: int = DEFAULT_CAPACITY) -> SolutionWitness | None:
    """First cone witness in lexicographic order over all bounded-degree tuples."""
    A = _generators(A)
    field_ = A[0].field
    _require_finite(field_)
    _require_char(field_, len(A))
    _require_monic_target(F)
    f = F.degree
    q = field_.cardinality
    sizes = [1 + sum(q**e for e in range(f - a.degree + 1)) for a in A[:-1]]
    if prod(sizes) > capacity:
        raise CapacityExceeded(f"{prod(sizes)} candidate tuples exceed {capacity}")
    cands = [_cone_candidates(field_, f - a.degree) for a in A[:-1]]
    products = [[x * a for x in cs] for cs, a in zip(cands, A[:-1])]
    last = A[-1]
    for choice in itertools.product(*(range(len(c)) for c in cands)):
        rest = F
        for i, k in enumerate(choice):
            rest = rest - products[i][k]
        xn, r = divmod(rest, last)
        if r.is_zero() and xn.in_nonneg_cone():
            xs = tuple(cands[i][k] for i, k in enumerate(choice)) + (xn,)
            return _verified(SolutionWitness(xs), F, A)
    return None


def brute_g(A: Sequence[Poly], d_max: int, capacity: int = DEFAULT_CAPACITY) -> FrobeniusReport:
    """Largest ``d <= d_max`` whose census misses a monic target."""
    A = _generators(A)
    F = A[0].field
    _require_finite(F)
    if any(p.degree == 0 for p in A):
        return FrobeniusReport(NEG_INF, None, None, UNIT_GENERATOR)
    _require_coprime(A)
    probed = []
    for d in range(d_max, -1, -1):
        probed.append(d)
        census = enumerate_reachable(d, A, capacity)
        if census.missing_example is not None:
            return FrobeniusReport(d, None, None, ORACLE_FALLBACK, probed, census.missing_example)
    return FrobeniusReport(NEG_INF, None, None, ORACLE_FALLBACK, probed)
