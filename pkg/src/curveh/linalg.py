"""Exact dense linear algebra over QQ or GF(p).

Matrices are backed by python-flint (``fmpq_mat`` for the rationals,
``nmod_mat`` for prime fields).  Vectors handed around inside the package
are plain lists of flint scalars; :class:`SubspaceBasis` converts to
``Fraction``/``int`` at the edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import flint

from .algebra import QQ, Field

__all__ = [
    "ExactMatrix",
    "SubspaceBasis",
    "in_span",
    "kernel_basis",
    "rank",
    "row_space",
    "span_dim",
]


def scalar(value, field: Field):
    """Convert an int/Fraction/flint scalar into the backend scalar type."""
    if field.modulus is None:
        if isinstance(value, Fraction):
            return flint.fmpq(value.numerator, value.denominator)
        if isinstance(value, flint.fmpq):
            return value
        return flint.fmpq(int(value))
    return flint.nmod(int(field.convert(_to_python(value, QQ))), field.modulus)


def _to_python(value, field: Field):
    if isinstance(value, flint.fmpq):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, flint.nmod):
        return int(value)
    if field.modulus is None:
        return Fraction(value)
    return int(value)


def zero(field: Field):
    return flint.fmpq(0) if field.modulus is None else flint.nmod(0, field.modulus)


def build(rows: Sequence[Sequence], ncols: int, field: Field):
    """Flint matrix from rows of backend scalars (or ints)."""
    nrows = len(rows)
    flat = [e for row in rows for e in row]
    if field.modulus is None:
        return flint.fmpq_mat(nrows, ncols, flat)
    return flint.nmod_mat(nrows, ncols, [int(e) for e in flat], field.modulus)


def _rref(mat, field: Field) -> tuple[list[list], tuple[int, ...]]:
    """Nonzero rows of the reduced row echelon form and their pivot columns."""
    if mat.nrows() == 0 or mat.ncols() == 0:
        return [], ()
    red, r = mat.rref()
    if r == 0:
        return [], ()
    n = mat.ncols()
    entries = red.entries()
    rows = [entries[i * n:(i + 1) * n] for i in range(r)]
    pivots = []
    for row in rows:
        for j, e in enumerate(row):
            if e != 0:
                pivots.append(j)
                break
    return rows, tuple(pivots)


class ExactMatrix:
    """Dense matrix with entries from a single exact field."""

    __slots__ = ("nrows", "ncols", "field", "_mat")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None, field: Field = QQ):
        rows = [[scalar(e, field) for e in row] for row in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix rows")
        self.nrows = len(rows)
        self.ncols = ncols
        self.field = field
        self._mat = build(rows, ncols, field)

    @classmethod
    def _wrap(cls, mat, field: Field) -> "ExactMatrix":
        obj = cls.__new__(cls)
        obj.nrows, obj.ncols, obj.field, obj._mat = mat.nrows(), mat.ncols(), field, mat
        return obj

    @classmethod
    def from_backend_rows(cls, rows: Sequence[Sequence], ncols: int, field: Field) -> "ExactMatrix":
        return cls._wrap(build(rows, ncols, field), field)

    def tolist(self) -> list[list]:
        n = self.ncols
        flat = self._mat.entries()
        return [[_to_python(e, self.field) for e in flat[i * n:(i + 1) * n]] for i in range(self.nrows)]

    def __matmul__(self, vec: Sequence) -> list:
        if len(vec) != self.ncols:
            raise ValueError("dimension mismatch")
        col = build([[scalar(v, self.field)] for v in vec], 1, self.field)
        return [_to_python(e, self.field) for e in (self._mat * col).entries()]


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """A subspace of F^n stored as its canonical reduced row echelon basis."""

    ambient_dim: int
    field: Field
    rows: tuple[tuple, ...]
    pivots: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ambient_dim: int, field: Field) -> "SubspaceBasis":
        """Canonical basis of the span of ``rows`` (backend scalars or ints)."""
        if not rows:
            return cls(ambient_dim, field, (), ())
        conv = [[scalar(e, field) for e in r] for r in rows]
        red, piv = _rref(build(conv, ambient_dim, field), field)
        return cls(ambient_dim, field, tuple(tuple(r) for r in red), piv)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def vectors(self) -> list[list]:
        return [[_to_python(e, self.field) for e in r] for r in self.rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.field == other.field
            and self.pivots == other.pivots
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.pivots, self.rows))

    def reduce(self, vec: Sequence) -> list:
        """Remainder of ``vec`` after eliminating the pivot coordinates."""
        v = [scalar(e, self.field) for e in vec]
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c != 0:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def contains(self, vec: Sequence) -> bool:
        if len(vec) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        return all(e == 0 for e in self.reduce(vec))

    def quotient_map(self) -> list[list]:
        """Rows of a matrix whose kernel is exactly this subspace.

        One row per non-pivot coordinate j: reading off coordinate j of the
        reduction modulo the basis.
        """
        n = self.ambient_dim
        piv = set(self.pivots)
        zero_ = zero(self.field)
        one = zero_ + 1
        out = []
        for j in range(n):
            if j in piv:
                continue
            row = [zero_] * n
            row[j] = one
            for brow, p in zip(self.rows, self.pivots):
                c = brow[j]
                if c != 0:
                    row[p] = -c
            out.append(row)
        return out


def rank(M: ExactMatrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return M._mat.rank()


def kernel_free_basis(mat, ncols: int, field: Field) -> tuple[list[list], list[int]]:
    """Right kernel of a backend matrix in free-variable form.

    Returns ``(rows, free)``: one row per free column ``f`` with a 1 at
    ``f`` and zeros at the other free columns.  The form is determined by
    the kernel alone, so it is canonical, though not row-echelon.
    """
    rows, pivots = _rref(mat, field) if mat.nrows() else ([], ())
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    if not free:
        return [], []
    z = zero(field)
    one = z + 1
    basis = []
    for f in free:
        v = [z] * ncols
        v[f] = one
        for row, p in zip(rows, pivots):
            c = row[f]
            if c != 0:
                v[p] = -c
        basis.append(v)
    return basis, free


def kernel_rows(mat, ncols: int, field: Field) -> tuple[list[list], tuple[int, ...]]:
    """Canonical RREF basis of the right kernel of a backend matrix."""
    basis, free = kernel_free_basis(mat, ncols, field)
    if not basis:
        return [], ()
    return _rref(build(basis, ncols, field), field)


def kernel_basis(M: ExactMatrix) -> SubspaceBasis:
    """Canonical echelon basis of {v : M v = 0}."""
    rows, piv = kernel_rows(M._mat, M.ncols, M.field)
    return SubspaceBasis(M.ncols, M.field, tuple(tuple(r) for r in rows), piv)


def row_space(M: ExactMatrix) -> SubspaceBasis:
    rows, piv = _rref(M._mat, M.field)
    return SubspaceBasis(M.ncols, M.field, tuple(tuple(r) for r in rows), piv)


def span_dim(vectors: Sequence[Sequence], ambient_dim: int, field: Field = QQ) -> int:
    if any(len(v) != ambient_dim for v in vectors):
        raise ValueError("dimension mismatch")
    if not vectors:
        return 0
    return rank(ExactMatrix(vectors, ambient_dim, field))


def in_span(vec: Sequence, basis: SubspaceBasis) -> bool:
    return basis.contains(vec)
