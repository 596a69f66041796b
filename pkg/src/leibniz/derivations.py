"""Derivation algebras and their subalgebras D containing Ad^l(L).

A derivation set is a subspace of the n^2-dimensional space of matrices
(row-major flattening). Every theorem-facing operation requires that the set
contains all left multiplications and is closed under the commutator.
"""

from __future__ import annotations

from functools import cached_property
from typing import Sequence

from .algebra import LeibnizAlgebra, centers, is_ideal, quotient_algebra
from .linalg import DimensionError, Matrix, Subspace, kernel, quotient_map, unflatten

__all__ = [
    "DerivationError",
    "NotInvariantError",
    "DerivationSet",
    "InducedSet",
    "is_derivation",
    "derivation_violations",
    "derivation_algebra",
    "ad_left",
    "ad_set",
    "lie_closure",
    "annihilator",
    "d_center",
    "d_derived",
    "induced_derivations",
    "commutator",
]


class DerivationError(ValueError):
    """A matrix fails the derivation condition, or a set fails its invariants."""

    def __init__(self, message, violations=()):
        self.violations = list(violations)
        super().__init__(message)


class NotInvariantError(ValueError):
    """An ideal is not mapped into itself by every derivation of the set."""


def commutator(x: Matrix, y: Matrix) -> Matrix:
    return x @ y - y @ x


def derivation_violations(a: LeibnizAlgebra, m: Matrix) -> list[tuple[int, int]]:
    """Basis pairs (i, j), 0-based, where m[e_i,e_j] != [m e_i, e_j] + [e_i, m e_j]."""
    if m.shape != (a.n, a.n):
        raise DimensionError(f"expected a {a.n}x{a.n} matrix, got {m.shape}")
    if m.field != a.field:
        raise DimensionError(f"matrix over {m.field} for an algebra over {a.field}")
    n, c, d = a.n, a.c, m.data
    bad = []
    for i in range(n):
        for j in range(n):
            cij = c[i][j]
            for r in range(n):
                v = sum((cij[k] * d[r][k] for k in range(n) if cij[k]), a.field.zero)
                v -= sum((d[s][i] * c[s][j][r] for s in range(n) if d[s][i]), a.field.zero)
                v -= sum((d[s][j] * c[i][s][r] for s in range(n) if d[s][j]), a.field.zero)
                if v:
                    bad.append((i, j))
                    break
    return bad


def is_derivation(a: LeibnizAlgebra, m: Matrix) -> bool:
    return not derivation_violations(a, m)


def _derivation_system(a: LeibnizAlgebra) -> Matrix:
    """The n^3 x n^2 system whose kernel is Der(L); unknown r*n + c is m[r][c]."""
    n, c, f = a.n, a.c, a.field
    rows = []
    for i in range(n):
        for j in range(n):
            for r in range(n):
                row = [f.zero] * (n * n)
                # m([e_i, e_j])_r
                for k in range(n):
                    if c[i][j][k]:
                        row[r * n + k] = row[r * n + k] + c[i][j][k]
                # - [m e_i, e_j]_r - [e_i, m e_j]_r
                for s in range(n):
                    if c[s][j][r]:
                        row[s * n + i] = row[s * n + i] - c[s][j][r]
                    if c[i][s][r]:
                        row[s * n + j] = row[s * n + j] - c[i][s][r]
                rows.append(tuple(row))
    return Matrix(f, len(rows), n * n, tuple(rows))


class DerivationSet:
    """A subspace D of Der(L), stored as flattened matrices.

    ``contains_adl`` and ``closed`` are computed on construction, never trusted.
    """

    def __init__(self, algebra: LeibnizAlgebra, space: Subspace, *, check: bool = True):
        n = algebra.n
        if space.ambient != n * n:
            raise DimensionError(f"derivation space must live in F^{n * n}")
        self.algebra = algebra
        self.space = space
        if check:
            for m in self.matrices:
                bad = derivation_violations(algebra, m)
                if bad:
                    raise DerivationError(f"basis element is not a derivation at pairs {_one_based(bad)}", bad)
        self.contains_adl = self.adl.issubset(space)
        self.closed = all(
            _flat(commutator(x, y)) in space
            for idx, x in enumerate(self.matrices)
            for y in self.matrices[idx + 1:]
        )

    @cached_property
    def matrices(self) -> list[Matrix]:
        n, f = self.algebra.n, self.algebra.field
        return [unflatten(f, b, n) for b in self.space.basis]

    @cached_property
    def adl(self) -> Subspace:
        return ad_left(self.algebra)[1]

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def k(self) -> int:
        """dim(D / Ad^l(L))."""
        self.require_adl()
        return self.space.dim - self.adl.dim

    def require_adl(self):
        if not self.contains_adl:
            raise DerivationError("derivation set does not contain Ad^l(L)")

    def __contains__(self, m: Matrix) -> bool:
        return _flat(m) in self.space

    def __eq__(self, other):
        return isinstance(other, DerivationSet) and self.algebra == other.algebra and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, algebra_dim={self.algebra.n})"


class InducedSet(DerivationSet):
    """Image of a derivation set on a quotient algebra L/Z."""

    def __init__(self, algebra, space, *, parent: DerivationSet, ideal: Subspace, proj: Matrix, section: Matrix):
        super().__init__(algebra, space)
        self.parent = parent
        self.ideal = ideal
        self.proj = proj
        self.section = section

    def induce(self, m: Matrix) -> Matrix:
        return self.proj @ m @ self.section


def _flat(m: Matrix) -> tuple:
    return m.entries


def _one_based(pairs):
    return [(i + 1, j + 1) for i, j in pairs]


def derivation_algebra(a: LeibnizAlgebra) -> DerivationSet:
    """Der(L): the full solution space of the derivation condition."""
    d = a.__dict__.get("_der")
    if d is None:
        d = DerivationSet(a, kernel(_derivation_system(a)), check=False)
        if not (d.closed and d.contains_adl):
            raise AssertionError("Der(L) failed closure or Ad^l containment")
        a.__dict__["_der"] = d
    return d


def ad_left(a: LeibnizAlgebra) -> tuple[Matrix, Subspace]:
    """Left multiplications ``l_{e_i}`` (as a stacked tuple) and their span Ad^l(L)."""
    mats = a.left_mult
    space = Subspace.span(a.field, a.n * a.n, (m.entries for m in mats))
    return mats, space


def ad_set(a: LeibnizAlgebra) -> DerivationSet:
    """Ad^l(L) as a derivation set."""
    return DerivationSet(a, ad_left(a)[1], check=False)


def lie_closure(a: LeibnizAlgebra, generators: Sequence[Matrix] = ()) -> DerivationSet:
    """Smallest commutator-closed subspace containing the generators and Ad^l(L)."""
    for g in generators:
        bad = derivation_violations(a, g)
        if bad:
            raise DerivationError(f"generator is not a derivation at pairs {_one_based(bad)}", bad)
    n, f = a.n, a.field
    space = Subspace.span(f, n * n, [g.entries for g in generators] + [m.entries for m in a.left_mult])
    while True:
        mats = [unflatten(f, b, n) for b in space.basis]
        comms = [commutator(x, y).entries for i, x in enumerate(mats) for y in mats[i + 1:]]
        grown = Subspace.span(f, n * n, space.basis + tuple(comms))
        if grown == space:
            break
        space = grown
    return DerivationSet(a, space, check=False)


def annihilator(d: DerivationSet) -> Subspace:
    """Common kernel of the derivations in d; all of L for the zero set."""
    a = d.algebra
    data = tuple(row for m in d.matrices for row in m.data)
    return kernel(Matrix(a.field, len(data), a.n, data))


def d_center(d: DerivationSet) -> Subspace:
    """A_L(D) = Ann_L(D) ∩ left center."""
    d.require_adl()
    left, _, center = centers(d.algebra)
    out = annihilator(d) & left
    if not out.issubset(center):
        raise AssertionError("D-center escaped the center")
    return out


def d_derived(d: DerivationSet) -> Subspace:
    """[L, D]: the sum of the images of the derivations in d."""
    a = d.algebra
    return Subspace.span(a.field, a.n, (col for m in d.matrices for col in m.columns()))


def induced_derivations(d: DerivationSet, z: Subspace) -> InducedSet:
    """The maps x + Z -> alpha(x) + Z on L/Z for each alpha in d."""
    a = d.algebra
    if not is_ideal(a, z):
        raise NotInvariantError("cannot induce derivations modulo a non-ideal")
    for m in d.matrices:
        if not z.is_invariant(m):
            raise NotInvariantError("ideal is not invariant under the derivation set")
    q, proj = quotient_algebra(a, z)
    _, section, qdim = quotient_map(z)
    induced = [proj @ m @ section for m in d.matrices]
    space = Subspace.span(a.field, qdim * qdim, (m.entries for m in induced))
    out = InducedSet(q, space, parent=d, ideal=z, proj=proj, section=section)
    if d.contains_adl:
        image_adl = Subspace.span(a.field, qdim * qdim, ((proj @ m @ section).entries for m in a.left_mult))
        if image_adl != out.adl:
            raise AssertionError("induced image of Ad^l(L) differs from Ad^l of the quotient")
    if not out.closed:
        raise AssertionError("induced derivation set is not closed")
    return out
