"""Text formats for algebras and derivation lists.

Algebra file::

    # comment
    field rational            (or: field prime 5)
    dim 3
    bracket 1 2 : 1*e3
    bracket 2 1 : -1*e3

Indices are 1-based; brackets not listed are zero.

Derivation file (entry at row r, column c is the e_r coefficient of the
image of e_c)::

    derivations 1
    matrix
    1 0
    0 2
"""

from __future__ import annotations

import re

from .algebra import LeibnizAlgebra
from .derivations import DerivationSet, lie_closure
from .field import FieldError, FieldSpec, GF, QQ, scalar_format, scalar_parse
from .linalg import Matrix

__all__ = [
    "FormatError",
    "parse_algebra_file",
    "render_algebra_file",
    "parse_derivation_matrices",
    "parse_derivation_file",
    "render_derivation_file",
]


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


_TERM = re.compile(r"(.+)\*e(\d+)")


def _parse_field(tokens, no) -> FieldSpec:
    if tokens[0] != "field":
        raise FormatError("expected 'field rational' or 'field prime <p>'", no)
    if tokens[1:] == ["rational"]:
        return QQ
    if len(tokens) == 3 and tokens[1] == "prime" and tokens[2].isdigit():
        try:
            return GF(int(tokens[2]))
        except FieldError as e:
            raise FormatError(str(e), no) from None
    raise FormatError("expected 'field rational' or 'field prime <p>'", no)


def _parse_index(tok: str, n: int, no: int) -> int:
    if not tok.isdigit():
        raise FormatError(f"bad index {tok!r}", no)
    i = int(tok)
    if not 1 <= i <= n:
        raise FormatError(f"index {i} out of range 1..{n}", no)
    return i - 1


def parse_algebra_file(text: str) -> LeibnizAlgebra:
    """Parse and validate; a Leibniz violation raises LeibnizIdentityError."""
    lines = _content_lines(text)
    try:
        no, tokens = next(lines)
    except StopIteration:
        raise FormatError("empty algebra file") from None
    field = _parse_field(tokens, no)
    try:
        no, tokens = next(lines)
    except StopIteration:
        raise FormatError("missing 'dim <n>' line") from None
    if len(tokens) != 2 or tokens[0] != "dim" or not tokens[1].isdigit():
        raise FormatError("expected 'dim <n>'", no)
    n = int(tokens[1])

    brackets: dict = {}
    for no, tokens in lines:
        if tokens[0] != "bracket" or len(tokens) < 5 or tokens[3] != ":":
            raise FormatError("expected 'bracket <i> <j> : <scalar>*e<k> [+ ...]'", no)
        i, j = _parse_index(tokens[1], n, no), _parse_index(tokens[2], n, no)
        if (i, j) in brackets:
            raise FormatError(f"duplicate bracket {i + 1} {j + 1}", no)
        terms = tokens[4:]
        if len(terms) % 2 == 0:
            raise FormatError("dangling '+' in bracket", no)
        coeffs = {}
        for pos, tok in enumerate(terms):
            if pos % 2 == 1:
                if tok != "+":
                    raise FormatError(f"expected '+', got {tok!r}", no)
                continue
            m = _TERM.fullmatch(tok)
            if not m:
                raise FormatError(f"malformed term {tok!r}", no)
            k = _parse_index(m.group(2), n, no)
            if k in coeffs:
                raise FormatError(f"e{k + 1} appears twice in one bracket", no)
            try:
                coeffs[k] = scalar_parse(m.group(1), field)
            except FieldError as e:
                raise FormatError(str(e), no) from None
        brackets[(i, j)] = coeffs
    return LeibnizAlgebra.from_brackets(field, n, brackets)


def render_algebra_file(a: LeibnizAlgebra) -> str:
    out = [f"field {a.field}", f"dim {a.n}"]
    for i in range(a.n):
        for j in range(a.n):
            terms = [f"{scalar_format(v)}*e{k + 1}" for k, v in enumerate(a.c[i][j]) if v]
            if terms:
                out.append(f"bracket {i + 1} {j + 1} : " + " + ".join(terms))
    return "\n".join(out) + "\n"


def parse_derivation_matrices(text: str, field: FieldSpec, n: int) -> list[Matrix]:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty derivation file")
    no, tokens = lines[0]
    if len(tokens) != 2 or tokens[0] != "derivations" or not tokens[1].isdigit():
        raise FormatError("expected 'derivations <count>'", no)
    count = int(tokens[1])
    pos = 1
    mats = []
    for _ in range(count):
        if pos >= len(lines) or lines[pos][1] != ["matrix"]:
            raise FormatError("expected 'matrix'", lines[pos][0] if pos < len(lines) else None)
        pos += 1
        rows = []
        for _ in range(n):
            if pos >= len(lines):
                raise FormatError(f"matrix needs {n} rows")
            no, tokens = lines[pos]
            if len(tokens) != n:
                raise FormatError(f"expected {n} entries, got {len(tokens)}", no)
            try:
                rows.append(tuple(scalar_parse(t, field) for t in tokens))
            except FieldError as e:
                raise FormatError(str(e), no) from None
            pos += 1
        mats.append(Matrix(field, n, n, tuple(rows)))
    if pos != len(lines):
        raise FormatError("trailing content after the last matrix", lines[pos][0])
    return mats


def parse_derivation_file(text: str, a: LeibnizAlgebra) -> DerivationSet:
    """Parse matrices and return the Lie closure of them together with Ad^l(L)."""
    return lie_closure(a, parse_derivation_matrices(text, a.field, a.n))


def render_derivation_file(mats) -> str:
    mats = list(mats)
    out = [f"derivations {len(mats)}"]
    for m in mats:
        out.append("matrix")
        out.extend(" ".join(scalar_format(x) for x in row) for row in m.data)
    return "\n".join(out) + "\n"
