from fractions import Fraction

import pytest

from leibniz.algebra import LeibnizAlgebra, LeibnizIdentityError, catalog_make
from leibniz.bounds import BoundReport, verify_corollaries
from leibniz.derivations import DerivationError, ad_set, derivation_algebra
from leibniz.field import GF, QQ
from leibniz.formats import (
    FormatError,
    parse_algebra_file,
    parse_derivation_file,
    parse_derivation_matrices,
    render_algebra_file,
    render_derivation_file,
)
from leibniz.fuzz import FuzzConfig, fuzz_generate
from leibniz.report import kv_value, render_report


def test_parse_examples(a1):
    assert parse_algebra_file("field rational\ndim 2\nbracket 1 1 : 1*e2\n") == a1
    assert parse_algebra_file("field prime 5\ndim 1\n") == LeibnizAlgebra.abelian(GF(5), 1)


def test_parse_leibniz_violation():
    with pytest.raises(LeibnizIdentityError) as info:
        parse_algebra_file("field rational\ndim 2\nbracket 1 1 : 1*e1\n")
    assert info.value.violations[0][0] == (0, 0, 0)
    assert "(1,1,1)" in str(info.value)


def test_parse_comments_and_fractions():
    text = "# heisenberg\nfield rational  # Q\n\ndim 3\nbracket 1 2 : 1/2*e3\nbracket 2 1 : -1/2*e3\n"
    a = parse_algebra_file(text)
    assert a.c[0][1][2] == Fraction(1, 2) and a.c[1][0][2] == Fraction(-1, 2)


@pytest.mark.parametrize(
    "text, line",
    [
        ("", None),
        ("dim 2\n", 1),
        ("field real\ndim 2\n", 1),
        ("field prime 4\ndim 2\n", 1),
        ("field rational\n", None),
        ("field rational\ndimension 2\n", 2),
        ("field rational\ndim 2\nbracket 1 1 1*e2\n", 3),
        ("field rational\ndim 2\nbracket 1 1 : 1*e2\nbracket 1 1 : 2*e2\n", 4),
        ("field rational\ndim 2\nbracket 1 3 : 1*e2\n", 3),
        ("field rational\ndim 2\nbracket 1 1 : 1*e3\n", 3),
        ("field rational\ndim 2\nbracket 1 1 : 1*e2 +\n", 3),
        ("field rational\ndim 2\nbracket 1 1 : 1*e2 - 1*e1\n", 3),
        ("field rational\ndim 2\nbracket 1 1 : 1*e2 + 1*e2\n", 3),
        ("field rational\ndim 2\nbracket 1 1 : x*e2\n", 3),
        ("field prime 5\ndim 2\nbracket 1 1 : 1/2*e2\n", 3),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(FormatError) as info:
        parse_algebra_file(text)
    assert info.value.line == line


FIXTURES = [catalog_make(name, dim, f) for name, dim in
            [("cyclic_leibniz", 2), ("cyclic_leibniz", 4), ("heisenberg", 3), ("nonabelian2", 2), ("abelian", 3)]
            for f in (QQ, GF(2), GF(7))]


@pytest.mark.parametrize("a", FIXTURES + list(fuzz_generate(FuzzConfig(3, QQ, 10, seed=4))),
                         ids=lambda a: f"{a.field}-{a.n}")
def test_algebra_roundtrip(a):
    text = render_algebra_file(a)
    b = parse_algebra_file(text)
    assert b.c == a.c and b.field == a.field
    assert render_algebra_file(b) == text


def test_derivation_file_examples(a1):
    assert parse_derivation_file("derivations 0\n", a1) == ad_set(a1)
    d = parse_derivation_file("derivations 1\nmatrix\n1 0\n0 2\n", a1)
    assert d == derivation_algebra(a1) and d.k == 1
    with pytest.raises(DerivationError) as info:
        parse_derivation_file("derivations 1\nmatrix\n0 1\n0 0\n", a1)
    assert (0, 0) in info.value.violations


@pytest.mark.parametrize("text", [
    "", "derivations\n", "derivations 1\n", "derivations 1\nmatrix\n1 0\n",
    "derivations 1\nmatrix\n1 0 0\n0 1\n", "derivations 0\nmatrix\n",
    "derivations 1\nmatrix\n1/2 0\n0 1\n",
])
def test_derivation_file_errors(text):
    with pytest.raises(FormatError):
        parse_derivation_matrices(text, GF(3), 2)


def test_derivation_roundtrip(a2):
    mats = derivation_algebra(a2).matrices
    text = render_derivation_file(mats)
    assert parse_derivation_matrices(text, QQ, 3) == list(mats)


def test_render_report_examples(a1):
    schur = [r for r in verify_corollaries(a1) if r.claim == "schur_leibniz"]
    kv = render_report(schur, "kv")
    assert "schur_leibniz.holds = true\n" in kv and "schur_leibniz.t = 1\n" in kv
    na = BoundReport("theorem_b", {"m": 0}, applicable=False)
    kv = render_report([na], "kv")
    assert "theorem_b.applicable = false\n" in kv and "holds" not in kv
    assert render_report([], "kv") == "" and render_report([], "text") == ""
    assert "not applicable" in render_report([na], "text")
    assert "1 <= 1 holds" in render_report(schur, "text")
    with pytest.raises(ValueError):
        render_report(schur, "json")


def test_kv_values():
    assert kv_value(Fraction(3, 4)) == "3/4"
    assert kv_value(Fraction(4, 2)) == "2"
    assert kv_value(True) == "true"
    assert kv_value([0, 1, 3]) == "0,1,3"
