"""Exact dense matrices and canonical subspaces of F^n.

Matrices act on column vectors: the image of basis vector ``e_c`` is column
``c``. An ``n x n`` matrix is flattened row-major into a vector of length
``n**2`` whenever a set of matrices is treated as a subspace.

Subspaces are stored by their reduced row echelon basis, so two
:class:`Subspace` values describe the same subspace iff they compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .field import FieldMismatchError, FieldSpec, Scalar

__all__ = [
    "DimensionError",
    "Matrix",
    "Subspace",
    "rref",
    "kernel",
    "column_space",
    "subspace_sum",
    "subspace_intersect",
    "subspace_contains",
    "preimage",
    "quotient_map",
    "flatten",
    "unflatten",
]

Vector = tuple


class DimensionError(ValueError):
    """Shapes or ambient dimensions do not line up."""


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    nrows: int
    ncols: int
    data: tuple = dc_field(repr=False)

    def __post_init__(self):
        if len(self.data) != self.nrows or any(len(r) != self.ncols for r in self.data):
            raise DimensionError(f"data does not have shape {self.nrows}x{self.ncols}")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, field: FieldSpec, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        cols = [tuple(c) for c in cols]
        rows = [tuple(c[r] for c in cols) for r in range(nrows)]
        return cls.from_rows(field, rows, len(cols))

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def entries(self) -> tuple:
        """Row-major flat tuple of entries."""
        return tuple(x for row in self.data for x in row)

    def __getitem__(self, idx):
        r, c = idx
        return self.data[r][c]

    def row(self, r: int) -> Vector:
        return self.data[r]

    def column(self, c: int) -> Vector:
        return tuple(row[c] for row in self.data)

    def columns(self) -> list[Vector]:
        return [self.column(c) for c in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows, tuple(zip(*self.data)) if self.nrows else
                      tuple(() for _ in range(self.ncols)))

    def apply(self, x: Sequence) -> Vector:
        if len(x) != self.ncols:
            raise DimensionError(f"vector of length {len(x)} for a map with {self.ncols} columns")
        z = self.field.zero
        return tuple(sum((a * b for a, b in zip(row, x) if a and b), z) for row in self.data)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        z = self.field.zero
        data = tuple(
            tuple(sum((a * b for a, b in zip(row, col) if a and b), z) for col in cols)
            for row in self.data
        )
        return Matrix(self.field, self.nrows, other.ncols, data)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(self.field, self.nrows, self.ncols,
                      tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(self.field, self.nrows, self.ncols,
                      tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.nrows, self.ncols, tuple(tuple(-a for a in r) for r in self.data))

    def scale(self, s: Scalar) -> "Matrix":
        return Matrix(self.field, self.nrows, self.ncols, tuple(tuple(s * a for a in r) for r in self.data))

    def _check_same(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if self.shape != other.shape:
            raise DimensionError(f"{self.shape} vs {other.shape}")

    def is_zero(self) -> bool:
        return not any(x for row in self.data for x in row)

    def rank(self) -> int:
        return rref(self)[2]

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise DimensionError("only square matrices are invertible")
        aug = Matrix(self.field, n, 2 * n,
                     tuple(r + Matrix.identity(self.field, n).data[i] for i, r in enumerate(self.data)))
        red, pivots, rank = rref(aug)
        if pivots[:n] != list(range(n)) or rank < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix(self.field, n, n, tuple(r[n:] for r in red.data))

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise DimensionError("column counts differ")
        return Matrix(self.field, self.nrows + other.nrows, self.ncols, self.data + other.data)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise DimensionError("row counts differ")
        return Matrix(self.field, self.nrows, self.ncols + other.ncols,
                      tuple(a + b for a, b in zip(self.data, other.data)))

    def __str__(self):
        from .field import scalar_format

        return "\n".join(" ".join(scalar_format(x) for x in r) for r in self.data)


def _rref_rows(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """In-place Gauss-Jordan elimination on a list of mutable rows."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r]
        inv = 1 / piv[c]
        if piv[c] != 1:
            piv = rows[r] = [x * inv for x in piv]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], piv)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row echelon form, keeping the zero rows at the bottom."""
    rows = [list(r) for r in m.data]
    nonzero, pivots = _rref_rows(rows, m.ncols)
    z = m.field.zero
    data = tuple(tuple(r) for r in nonzero) + tuple((z,) * m.ncols for _ in range(m.nrows - len(nonzero)))
    return Matrix(m.field, m.nrows, m.ncols, data), pivots, len(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^ambient held as its canonical RREF basis."""

    field: FieldSpec
    ambient: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, field: FieldSpec, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = []
        for v in vectors:
            if len(v) != ambient:
                raise DimensionError(f"vector of length {len(v)} in F^{ambient}")
            rows.append([field(x) for x in v])
        red, pivots = _rref_rows(rows, ambient)
        return cls(field, ambient, tuple(tuple(r) for r in red), tuple(pivots))

    @classmethod
    def zero(cls, field: FieldSpec, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field: FieldSpec, ambient: int) -> "Subspace":
        return cls(field, ambient, Matrix.identity(field, ambient).data, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient - len(self.basis)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.dim, self.ambient, self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient

    def reduce(self, x: Sequence) -> list:
        """Residual of ``x`` after elimination against the basis."""
        if len(x) != self.ambient:
            raise DimensionError(f"vector of length {len(x)} in F^{self.ambient}")
        x = [self.field(v) for v in x]
        for row, p in zip(self.basis, self.pivots):
            f = x[p]
            if f:
                x = [a - f * b for a, b in zip(x, row)]
        return x

    def coordinates(self, x: Sequence) -> tuple:
        """Coefficients of ``x`` in the RREF basis; raises if ``x`` is outside."""
        if any(self.reduce(x)):
            raise ValueError("vector is not in the subspace")
        return tuple(self.field(x[p]) for p in self.pivots)

    def __contains__(self, x) -> bool:
        return not any(self.reduce(x))

    def issubset(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return all(b in other for b in self.basis)

    __le__ = issubset

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def image(self, m: Matrix) -> "Subspace":
        """``m`` applied to this subspace."""
        if m.ncols != self.ambient:
            raise DimensionError("map domain does not match ambient")
        return Subspace.span(self.field, m.nrows, (m.apply(b) for b in self.basis))

    def is_invariant(self, m: Matrix) -> bool:
        return all(m.apply(b) in self for b in self.basis)


def _check_compatible(u: Subspace, v: Subspace):
    if u.field != v.field:
        raise FieldMismatchError(f"{u.field} vs {v.field}")
    if u.ambient != v.ambient:
        raise DimensionError(f"ambient {u.ambient} vs {v.ambient}")


def kernel(m: Matrix) -> Subspace:
    """``{x : m x = 0}`` as a subspace of F^ncols."""
    red, pivots, rank = rref(m)
    f = m.field
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    vectors = []
    for fc in free:
        x = [f.zero] * m.ncols
        x[fc] = f.one
        for r, pc in enumerate(pivots):
            x[pc] = -red.data[r][fc]
        vectors.append(x)
    return Subspace.span(f, m.ncols, vectors)


def column_space(m: Matrix) -> Subspace:
    return Subspace.span(m.field, m.nrows, m.columns())


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_compatible(u, v)
    return Subspace.span(u.field, u.ambient, u.basis + v.basis)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Zassenhaus: reduce ``[[u, u], [v, 0]]``; rows with vanishing left half span u ∩ v."""
    _check_compatible(u, v)
    n = u.ambient
    z = (u.field.zero,) * n
    rows = [list(b + b) for b in u.basis] + [list(b + z) for b in v.basis]
    red, pivots = _rref_rows(rows, 2 * n)
    return Subspace.span(u.field, n, (r[n:] for r, p in zip(red, pivots) if p >= n))


def subspace_contains(u: Subspace, x: Sequence) -> bool:
    return x in u


def quotient_map(z: Subspace) -> tuple[Matrix, Matrix, int]:
    """Projection onto F^n / z and a section, in the non-pivot coordinates of z.

    ``proj`` is ``qdim x n`` with kernel exactly ``z``; ``section`` is
    ``n x qdim`` with ``proj @ section`` the identity.
    """
    n, f = z.ambient, z.field
    pivset = set(z.pivots)
    free = [c for c in range(n) if c not in pivset]
    proj_rows = []
    for c in free:
        row = [f.zero] * n
        row[c] = f.one
        for b, p in zip(z.basis, z.pivots):
            if b[c]:
                row[p] = -b[c]
        proj_rows.append(tuple(row))
    proj = Matrix(f, len(free), n, tuple(proj_rows))
    sec_cols = []
    for c in free:
        col = [f.zero] * n
        col[c] = f.one
        sec_cols.append(col)
    section = Matrix.from_columns(f, sec_cols, n)
    return proj, section, len(free)


def preimage(m: Matrix, w: Subspace) -> Subspace:
    """``{x : m x in w}``, computed as the kernel of (projection mod w) after m."""
    if w.ambient != m.nrows:
        raise DimensionError(f"subspace of F^{w.ambient} vs map into F^{m.nrows}")
    if w.field != m.field:
        raise FieldMismatchError(f"{w.field} vs {m.field}")
    proj, _, qdim = quotient_map(w)
    if qdim == 0:
        return Subspace.full(m.field, m.ncols)
    return kernel(proj @ m)


def flatten(m: Matrix) -> tuple:
    return m.entries


def unflatten(field: FieldSpec, v: Sequence, n: int) -> Matrix:
    if len(v) != n * n:
        raise DimensionError(f"vector of length {len(v)} is not an {n}x{n} matrix")
    return Matrix(field, n, n, tuple(tuple(v[r * n:(r + 1) * n]) for r in range(n)))
