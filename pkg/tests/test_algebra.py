import random

import pytest

from leibniz.algebra import (
    LeibnizAlgebra,
    LeibnizIdentityError,
    NotAnIdealError,
    catalog_make,
    centers,
    change_basis,
    derived_subalgebra,
    direct_sum,
    is_ideal,
    is_lie,
    quotient_algebra,
    validate_leibniz,
)
from leibniz.derivations import derivation_algebra
from leibniz.field import GF, QQ
from leibniz.fuzz import FuzzConfig, fuzz_generate, random_invertible
from leibniz.linalg import Matrix, Subspace
from leibniz.series import lower_central_series, upper_central_series


def e(i, n):
    return tuple(1 if k == i else 0 for k in range(n))


def span(vecs, n, field=QQ):
    return Subspace.span(field, n, vecs)


def sample_algebras():
    out = []
    for strategy in ("catalog_conjugate", "graded_reject"):
        for f in (QQ, GF(2), GF(3)):
            for dim in (2, 3, 4):
                out += list(fuzz_generate(FuzzConfig(dim, f, 2, seed=11, strategy=strategy)))
    return out


SAMPLE = sample_algebras()


def test_bracket_examples(a1):
    ab = LeibnizAlgebra.abelian(QQ, 3)
    assert ab.bracket((1, 2, 3), (4, 5, 6)) == (0, 0, 0)
    assert a1.bracket(e(0, 2), e(0, 2)) == (0, 1)
    assert a1.bracket((1, 1), (1, 0)) == (0, 1)


def test_validate_examples(a1):
    assert validate_leibniz(LeibnizAlgebra.abelian(QQ, 4)) == (True, [])
    assert validate_leibniz(a1)[0]
    with pytest.raises(LeibnizIdentityError) as info:
        LeibnizAlgebra.from_brackets(QQ, 2, {(0, 0): {0: 1}})
    (triple, lhs, rhs) = info.value.violations[0]
    assert triple == (0, 0, 0)
    assert lhs == (1, 0) and rhs == (0, 0)


def test_is_lie(a1, a2):
    assert is_lie(a2)
    assert not is_lie(a1)
    assert is_lie(LeibnizAlgebra.abelian(QQ, 3))


def test_is_lie_char2_needs_alternating():
    # [e1, e1] = e2 is antisymmetric mod 2 but not alternating
    a = LeibnizAlgebra.from_brackets(GF(2), 2, {(0, 0): {1: 1}})
    assert not is_lie(a)
    assert is_lie(catalog_make("heisenberg", 3, GF(2)))


def test_centers(a1, a2):
    for left, right, center in [centers(LeibnizAlgebra.abelian(QQ, 3))]:
        assert left.is_full() and right.is_full() and center.is_full()
    e2 = span([e(1, 2)], 2)
    assert centers(a1) == (e2, e2, e2)
    e3 = span([e(2, 3)], 3)
    assert centers(a2) == (e3, e3, e3)


def test_derived(a1, a2):
    assert derived_subalgebra(LeibnizAlgebra.abelian(QQ, 3)).is_zero()
    assert derived_subalgebra(a1) == span([e(1, 2)], 2)
    assert derived_subalgebra(a2) == span([e(2, 3)], 3)


def test_is_ideal(a2):
    assert is_ideal(a2, Subspace.zero(QQ, 3))
    assert is_ideal(a2, Subspace.full(QQ, 3))
    assert not is_ideal(a2, span([e(0, 3)], 3))


def test_quotients(a1, a2):
    q, proj = quotient_algebra(a2, Subspace.zero(QQ, 3))
    assert q == a2 and proj == Matrix.identity(QQ, 3)
    q, _ = quotient_algebra(a2, Subspace.full(QQ, 3))
    assert q.n == 0
    q, _ = quotient_algebra(a1, span([e(1, 2)], 2))
    assert q.n == 1 and q.is_abelian()
    with pytest.raises(NotAnIdealError):
        quotient_algebra(a2, span([e(0, 3)], 3))


def test_catalog(a1):
    assert a1 == LeibnizAlgebra.from_brackets(QQ, 2, {(0, 0): {1: 1}})
    assert validate_leibniz(a1)[0] and not is_lie(a1)
    h = catalog_make("heisenberg", 3, QQ)
    assert is_lie(h) and centers(h)[2].dim == 1
    assert centers(catalog_make("abelian", 3, QQ))[2].is_full()
    c4 = catalog_make("cyclic_leibniz", 4, GF(3))
    assert c4.bracket(e(0, 4), e(2, 4)) == e(3, 4)
    for name, dim in [("heisenberg", 4), ("nonabelian2", 3), ("cyclic_leibniz", 1), ("nope", 2)]:
        with pytest.raises(ValueError):
            catalog_make(name, dim, QQ)


def test_direct_sum(a1):
    ab1 = LeibnizAlgebra.abelian(QQ, 1)
    assert direct_sum(ab1, ab1) == LeibnizAlgebra.abelian(QQ, 2)
    s = direct_sum(a1, ab1)
    assert s.n == 3 and centers(s)[2].dim == 2
    assert direct_sum(a1, LeibnizAlgebra.abelian(QQ, 0)) == a1
    with pytest.raises(ValueError):
        direct_sum(a1, LeibnizAlgebra.abelian(GF(2), 1))


def test_direct_sum_centers_are_sums(a1, a2):
    s = direct_sum(a1, a2)
    for part_a, part_b, whole in zip(centers(a1), centers(a2), centers(s)):
        assert whole.dim == part_a.dim + part_b.dim


def test_change_basis(a1):
    assert change_basis(a1, Matrix.identity(QQ, 2)) == a1
    swap = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    b = change_basis(a1, swap)
    assert b == LeibnizAlgebra.from_brackets(QQ, 2, {(1, 1): {0: 1}})
    assert centers(b)[2].dim == 1
    with pytest.raises(ZeroDivisionError):
        change_basis(a1, Matrix.from_rows(QQ, [[1, 1], [1, 1]]))


@pytest.mark.parametrize("a", SAMPLE, ids=lambda a: f"{a.field}-{a.n}")
def test_structural_properties(a):
    left, right, center = centers(a)
    assert is_ideal(a, left)
    assert is_ideal(a, a.derived)
    assert left & right == center
    if is_lie(a):
        assert left == right == center
    q, _ = quotient_algebra(a, a.derived)
    assert q.is_abelian()
    assert validate_leibniz(q)[0]


def _dims(a):
    left, right, center = centers(a)
    return (left.dim, right.dim, center.dim, a.derived.dim, derivation_algebra(a).dim,
            upper_central_series(a).dims, lower_central_series(a).dims)


@pytest.mark.parametrize("a", SAMPLE[::3], ids=lambda a: f"{a.field}-{a.n}")
def test_isomorphism_invariance(a):
    rng = random.Random(5)
    ref = _dims(a)
    for _ in range(2):
        assert _dims(change_basis(a, random_invertible(a.field, a.n, rng))) == ref
