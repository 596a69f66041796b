"""Left Leibniz algebras given by structure constants.

``c[i][j][k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]`` (0-based). The
left Leibniz identity is ``[[x,y],z] = [x,[y,z]] - [y,[x,z]]``.
"""

from __future__ import annotations

from functools import cached_property
from typing import Sequence

from .field import FieldMismatchError, FieldSpec
from .linalg import DimensionError, Matrix, Subspace, kernel, quotient_map

__all__ = [
    "LeibnizIdentityError",
    "NotAnIdealError",
    "LeibnizAlgebra",
    "validate_leibniz",
    "is_lie",
    "centers",
    "derived_subalgebra",
    "is_ideal",
    "quotient_algebra",
    "catalog_make",
    "CATALOG",
    "direct_sum",
    "change_basis",
    "bracket_eval",
]


class LeibnizIdentityError(ValueError):
    """Structure constants violate the left Leibniz identity."""

    def __init__(self, violations):
        self.violations = violations
        i, j, k = violations[0][0]
        more = f" (and {len(violations) - 1} more)" if len(violations) > 1 else ""
        super().__init__(f"Leibniz identity fails at basis triple ({i + 1},{j + 1},{k + 1}){more}")


class NotAnIdealError(ValueError):
    pass


def _bracket_raw(c, f: FieldSpec, x: Sequence, y: Sequence) -> list:
    n = len(x)
    out = [f.zero] * n
    for i in range(n):
        xi = x[i]
        if not xi:
            continue
        for j in range(n):
            yj = y[j]
            if not yj:
                continue
            s = xi * yj
            row = c[i][j]
            for k in range(n):
                if row[k]:
                    out[k] = out[k] + s * row[k]
    return out


def _leibniz_violations(c, f: FieldSpec, first_only: bool = False) -> list:
    """Triples (i, j, k) where [[e_i,e_j],e_k] != [e_i,[e_j,e_k]] - [e_j,[e_i,e_k]]."""
    n = len(c)
    idx = range(n)
    # nonzero supports keep the triple loop cheap on sparse tables
    supp = [[[s for s in idx if c[i][j][s]] for j in idx] for i in idx]
    bad = []
    for i in idx:
        for j in idx:
            for k in idx:
                lhs = [f.zero] * n
                for s in supp[i][j]:
                    for r in supp[s][k]:
                        lhs[r] = lhs[r] + c[i][j][s] * c[s][k][r]
                rhs = [f.zero] * n
                for s in supp[j][k]:
                    for r in supp[i][s]:
                        rhs[r] = rhs[r] + c[j][k][s] * c[i][s][r]
                for s in supp[i][k]:
                    for r in supp[j][s]:
                        rhs[r] = rhs[r] - c[i][k][s] * c[j][s][r]
                if lhs != rhs:
                    bad.append(((i, j, k), tuple(lhs), tuple(rhs)))
                    if first_only:
                        return bad
    return bad


class LeibnizAlgebra:
    """A finite-dimensional left Leibniz algebra.

    The identity is checked on construction; an invalid table raises
    :class:`LeibnizIdentityError` listing every violating basis triple.
    Pass ``validate=False`` only from code that already knows the table is valid.
    """

    def __init__(self, field: FieldSpec, constants, *, validate: bool = True):
        n = len(constants)
        for i, plane in enumerate(constants):
            if len(plane) != n or any(len(row) != n for row in plane):
                raise DimensionError(f"structure constants must be {n}x{n}x{n}")
        self.field = field
        self.n = n
        self.c = tuple(tuple(tuple(field(x) for x in row) for row in plane) for plane in constants)
        if validate:
            bad = _leibniz_violations(self.c, field)
            if bad:
                raise LeibnizIdentityError(bad)
        self.validated = True

    @classmethod
    def from_brackets(cls, field: FieldSpec, n: int, brackets: dict, **kw) -> "LeibnizAlgebra":
        """Build from ``{(i, j): {k: coeff}}`` with 0-based indices."""
        c = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for (i, j), terms in brackets.items():
            for k, v in terms.items():
                c[i][j][k] = field(v)
        return cls(field, c, **kw)

    @classmethod
    def abelian(cls, field: FieldSpec, n: int) -> "LeibnizAlgebra":
        return cls.from_brackets(field, n, {}, validate=False)

    def __eq__(self, other):
        return isinstance(other, LeibnizAlgebra) and self.field == other.field and self.c == other.c

    def __hash__(self):
        return hash((self.field, self.c))

    def __repr__(self):
        return f"LeibnizAlgebra(dim={self.n}, field={self.field})"

    def basis_vector(self, i: int) -> tuple:
        f = self.field
        return tuple(f.one if k == i else f.zero for k in range(self.n))

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        if len(x) != self.n or len(y) != self.n:
            raise DimensionError(f"expected vectors of length {self.n}")
        x = [self.field(v) for v in x]
        y = [self.field(v) for v in y]
        return tuple(_bracket_raw(self.c, self.field, x, y))

    def structure_bracket(self, i: int, j: int) -> tuple:
        return self.c[i][j]

    @cached_property
    def left_mult(self) -> tuple[Matrix, ...]:
        """``l_{e_i}``: x -> [e_i, x]; entry (r, c) is c[i][c][r]."""
        n = self.n
        return tuple(
            Matrix(self.field, n, n, tuple(tuple(self.c[i][col][r] for col in range(n)) for r in range(n)))
            for i in range(n)
        )

    @cached_property
    def right_mult(self) -> tuple[Matrix, ...]:
        """``r_{e_j}``: x -> [x, e_j]; entry (r, c) is c[c][j][r]."""
        n = self.n
        return tuple(
            Matrix(self.field, n, n, tuple(tuple(self.c[col][j][r] for col in range(n)) for r in range(n)))
            for j in range(n)
        )

    def left_mult_by(self, a: Sequence) -> Matrix:
        """The matrix of ``l_a`` for an arbitrary element ``a``."""
        n, f = self.n, self.field
        m = Matrix.zeros(f, n, n)
        for i, ai in enumerate(a):
            if ai:
                m = m + self.left_mult[i].scale(f(ai))
        return m

    @cached_property
    def is_lie(self) -> bool:
        return is_lie(self)

    @cached_property
    def centers(self) -> tuple[Subspace, Subspace, Subspace]:
        return centers(self)

    @cached_property
    def derived(self) -> Subspace:
        return derived_subalgebra(self)

    def is_abelian(self) -> bool:
        return not any(x for plane in self.c for row in plane for x in row)


def bracket_eval(a: LeibnizAlgebra, x: Sequence, y: Sequence) -> tuple:
    return a.bracket(x, y)


def validate_leibniz(a: LeibnizAlgebra) -> tuple[bool, list]:
    """Recheck the identity; returns ``(ok, [((i, j, k), lhs, rhs), ...])``."""
    bad = _leibniz_violations(a.c, a.field)
    return not bad, bad


def is_lie(a: LeibnizAlgebra) -> bool:
    """Diagonal brackets vanish and the constants are antisymmetric.

    This is the polarized form of [x,x] = 0 and is correct in characteristic 2.
    """
    n, c = a.n, a.c
    for i in range(n):
        if any(c[i][i]):
            return False
        for j in range(i + 1, n):
            if any(u + v for u, v in zip(c[i][j], c[j][i])):
                return False
    return True


def _stack(mats: Sequence[Matrix], field: FieldSpec, ncols: int) -> Matrix:
    data = tuple(row for m in mats for row in m.data)
    return Matrix(field, len(data), ncols, data)


def centers(a: LeibnizAlgebra) -> tuple[Subspace, Subspace, Subspace]:
    """Left, right and two-sided centers."""
    left = kernel(_stack(a.right_mult, a.field, a.n))
    right = kernel(_stack(a.left_mult, a.field, a.n))
    return left, right, left & right


def derived_subalgebra(a: LeibnizAlgebra) -> Subspace:
    n = a.n
    return Subspace.span(a.field, n, (a.c[i][j] for i in range(n) for j in range(n)))


def is_ideal(a: LeibnizAlgebra, u: Subspace) -> bool:
    if u.ambient != a.n:
        raise DimensionError(f"subspace of F^{u.ambient} in an algebra of dimension {a.n}")
    return all(u.is_invariant(m) for m in a.left_mult) and all(u.is_invariant(m) for m in a.right_mult)


def quotient_algebra(a: LeibnizAlgebra, z: Subspace) -> tuple[LeibnizAlgebra, Matrix]:
    """``a / z`` in the non-pivot coordinates of z, with the projection matrix."""
    if not is_ideal(a, z):
        raise NotAnIdealError("quotient by a subspace that is not a two-sided ideal")
    proj, section, q = quotient_map(z)
    lifts = section.columns()
    c = [[list(proj.apply(a.bracket(lifts[i], lifts[j]))) for j in range(q)] for i in range(q)]
    return LeibnizAlgebra(a.field, c), proj


def _cyclic(f: FieldSpec, n: int) -> LeibnizAlgebra:
    return LeibnizAlgebra.from_brackets(f, n, {(0, i): {i + 1: 1} for i in range(n - 1)})


def _heisenberg(f: FieldSpec, n: int) -> LeibnizAlgebra:
    return LeibnizAlgebra.from_brackets(f, 3, {(0, 1): {2: 1}, (1, 0): {2: -1}})


def _nonabelian2(f: FieldSpec, n: int) -> LeibnizAlgebra:
    return LeibnizAlgebra.from_brackets(f, 2, {(0, 1): {1: 1}, (1, 0): {1: -1}})


CATALOG = {
    "abelian": (lambda n: n >= 0, LeibnizAlgebra.abelian),
    "cyclic_leibniz": (lambda n: n >= 2, _cyclic),
    "heisenberg": (lambda n: n == 3, _heisenberg),
    "nonabelian2": (lambda n: n == 2, _nonabelian2),
}


def catalog_make(name: str, dim: int, field: FieldSpec) -> LeibnizAlgebra:
    """A named family member.

    ``cyclic_leibniz`` of dimension n has [e1, e_i] = e_{i+1}; ``heisenberg``
    is 3-dimensional and ``nonabelian2`` is the 2-dimensional Lie algebra
    [e1, e2] = e2.
    """
    try:
        ok, make = CATALOG[name]
    except KeyError:
        raise ValueError(f"unknown catalog family {name!r}; choose from {sorted(CATALOG)}") from None
    if not ok(dim):
        raise ValueError(f"family {name} has no member of dimension {dim}")
    return make(field, dim)


def direct_sum(a: LeibnizAlgebra, b: LeibnizAlgebra) -> LeibnizAlgebra:
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    f, n, m = a.field, a.n, b.n
    N = n + m
    c = [[[f.zero] * N for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c[i][j][k] = a.c[i][j][k]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                c[n + i][n + j][n + k] = b.c[i][j][k]
    return LeibnizAlgebra(f, c, validate=False)


def change_basis(a: LeibnizAlgebra, p: Matrix) -> LeibnizAlgebra:
    """Constants in the basis ``f_j = sum_i p[i][j] e_i`` (the columns of p)."""
    if p.field != a.field:
        raise FieldMismatchError(f"{p.field} vs {a.field}")
    if p.shape != (a.n, a.n):
        raise DimensionError(f"basis change must be {a.n}x{a.n}")
    pinv = p.inverse()
    cols = p.columns()
    n = a.n
    c = [[list(pinv.apply(a.bracket(cols[i], cols[j]))) for j in range(n)] for i in range(n)]
    # isomorphic to a valid algebra, so the identity holds; recheck is cheap at this scale
    return LeibnizAlgebra(a.field, c)
