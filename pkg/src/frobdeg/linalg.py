"""Exact dense linear algebra over any field from :mod:`frobdeg.field`.

Entries and vectors are raw field values; every matrix carries its field.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ShapeError
from .field import Field


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Sequence[Sequence], ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ShapeError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        if any(len(c) != nrows for c in columns):
            raise ShapeError("column length differs from nrows")
        rows = [tuple(c[i] for c in columns) for i in range(nrows)]
        return cls(field, rows, len(columns))

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [(field.zero,) * ncols] * nrows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    @property
    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    def apply(self, x: Sequence) -> tuple:
        """Matrix-vector product."""
        if len(x) != self.ncols:
            raise ShapeError(f"vector of length {len(x)} for {self.ncols} columns")
        F = self.field
        out = []
        for r in self.rows:
            acc = F.zero
            for a, b in zip(r, x):
                if not F.is_zero(a) and not F.is_zero(b):
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return tuple(out)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.ncols))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.rows)
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}, [{body}])"


def _eliminate(F: Field, rows, npivot_cols: int, full: bool):
    """Gauss-Jordan (``full``) or forward elimination with first-nonzero pivoting.

    Only the first ``npivot_cols`` columns are used as pivots; any further columns
    (right-hand sides) are carried along.  Returns ``(rows, pivot_columns)``.
    """
    rows = [list(r) for r in rows]
    width = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(npivot_cols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if not F.is_zero(rows[i][c]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        prow = [F.mul(inv, x) for x in rows[r]]
        rows[r] = prow
        for i in range(0 if full else r + 1, nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if F.is_zero(f):
                continue
            for k in range(c, width):
                if not F.is_zero(prow[k]):
                    row[k] = F.sub(row[k], F.mul(f, prow[k]))
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(M: Matrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return len(_eliminate(M.field, M.rows, M.ncols, full=False)[1])


def transpose(M: Matrix) -> Matrix:
    return Matrix(M.field, [M.column(j) for j in range(M.ncols)], M.nrows)


def hstack(*mats: Matrix) -> Matrix:
    if not mats:
        raise ShapeError("hstack of nothing")
    F, n = mats[0].field, mats[0].nrows
    if any(m.nrows != n or m.field != F for m in mats):
        raise ShapeError("hstack needs equal row counts over one field")
    rows = [sum((m.rows[i] for m in mats), ()) for i in range(n)]
    return Matrix(F, rows, sum(m.ncols for m in mats))


def solve(M: Matrix, b: Sequence):
    """A particular solution of ``M x = b`` (free variables zero), or ``None``."""
    if len(b) != M.nrows:
        raise ShapeError(f"right-hand side of length {len(b)} for {M.nrows} rows")
    F = M.field
    if M.nrows == 0:
        return (F.zero,) * M.ncols
    aug = [r + (bi,) for r, bi in zip(M.rows, b)]
    rows, pivots = _eliminate(F, aug, M.ncols, full=True)
    for row in rows[len(pivots):]:
        if not F.is_zero(row[-1]):
            return None
    x = [F.zero] * M.ncols
    for row, c in zip(rows, pivots):
        x[c] = row[-1]
    return tuple(x)


def nullspace(M: Matrix) -> list:
    """Basis of ``{x : M x = 0}``; one vector per free column."""
    F = M.field
    if M.nrows == 0:
        rows, pivots = [], []
    else:
        rows, pivots = _eliminate(F, M.rows, M.ncols, full=True)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.ncols):
        if f in pivot_set:
            continue
        x = [F.zero] * M.ncols
        x[f] = F.one
        for row, c in zip(rows, pivots):
            x[c] = F.neg(row[f])
        basis.append(tuple(x))
    return basis


def dot(F: Field, u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ShapeError("dot product of vectors with different lengths")
    acc = F.zero
    for a, b in zip(u, v):
        acc = F.add(acc, F.mul(a, b))
    return acc


def augmented_rank(field: Field, constraints: Sequence[tuple]) -> int:
    """Rank of the stacked ``[normal | rhs]`` rows of affine constraints ``normal . w = rhs``."""
    if not constraints:
        return 0
    width = len(constraints[0][0])
    if any(len(n) != width for n, _ in constraints):
        raise ShapeError("constraints of different widths")
    return rank(Matrix(field, [tuple(n) + (rhs,) for n, rhs in constraints], width + 1))


def coefficient_rank(field: Field, constraints: Sequence[tuple]) -> int:
    if not constraints:
        return 0
    return rank(Matrix(field, [tuple(n) for n, _ in constraints]))
