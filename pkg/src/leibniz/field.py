"""Exact scalars: the rationals and prime fields F_p.

Rational scalars are plain :class:`fractions.Fraction` values, which are
already canonical (coprime, positive denominator). Prime-field scalars are
:class:`Residue` values kept in ``[0, p)``. Both support the usual arithmetic
operators, so the linear algebra layer is written once against operators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterator, Union

__all__ = [
    "FieldError",
    "FieldMismatchError",
    "FieldSpec",
    "QQ",
    "GF",
    "Residue",
    "Scalar",
    "field_of",
    "scalar_parse",
    "scalar_format",
    "scalar_arith",
    "MAX_PRIME",
]

#: Prime fields are restricted to p below this cap; fuzzing only needs tiny fields.
MAX_PRIME = 2**31


class FieldError(ValueError):
    """Malformed scalar text or an invalid field description."""


class FieldMismatchError(FieldError):
    """Operands live in different fields."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Residue:
    """An element of F_p, stored as its canonical residue in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> int:
        if type(other) is Residue:
            if other.p != self.p:
                raise FieldMismatchError(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        raise FieldMismatchError(f"cannot combine F_{self.p} with {type(other).__name__}")

    def __add__(self, other):
        if type(other) is Residue and other.p == self.p:
            return Residue(self.value + other.value, self.p)
        return Residue(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is Residue and other.p == self.p:
            return Residue(self.value - other.value, self.p)
        return Residue(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        if type(other) is Residue and other.p == self.p:
            return Residue(self.value * other.value, self.p)
        return Residue(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def inverse(self) -> "Residue":
        if self.value == 0:
            raise ZeroDivisionError(f"zero has no inverse in F_{self.p}")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * Residue(self._coerce(other), self.p).inverse()

    def __rtruediv__(self, other):
        return Residue(self._coerce(other), self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, Residue]


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``kind="rational"``) or F_p (``kind="prime"``)."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise FieldError("the rational field takes no modulus")
        elif self.kind == "prime":
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise FieldError(f"{self.p!r} is not a prime")
            if self.p >= MAX_PRIME:
                raise FieldError(f"p must be below 2^31, got {self.p}")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "prime" else 0

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction, Residue or scalar text into this field."""
        t = type(value)
        if t is Fraction and self.kind == "rational":
            return value
        if t is Residue and value.p == self.p:
            return value
        if isinstance(value, str):
            return scalar_parse(value, self)
        if self.kind == "rational":
            if isinstance(value, Residue):
                raise FieldMismatchError("F_p element used over Q")
            return Fraction(value)
        if isinstance(value, Residue):
            if value.p != self.p:
                raise FieldMismatchError(f"F_{value.p} element used over F_{self.p}")
            return value
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return Residue(value.numerator, self.p)
            return Residue(value.numerator, self.p) / Residue(value.denominator, self.p)
        return Residue(int(value), self.p)

    @cached_property
    def zero(self) -> Scalar:
        return self(0)

    @cached_property
    def one(self) -> Scalar:
        return self(1)

    def contains(self, x) -> bool:
        return field_of(x) == self

    def elements(self) -> Iterator[Scalar]:
        """All elements of a prime field, in residue order."""
        if self.kind != "prime":
            raise FieldError("only finite fields can be enumerated")
        return (Residue(v, self.p) for v in range(self.p))

    def random(self, rng, bound: int = 2) -> Scalar:
        """A random scalar; over Q an integer in ``[-bound, bound]``."""
        if self.kind == "prime":
            return Residue(rng.randrange(self.p), self.p)
        return Fraction(rng.randint(-bound, bound))

    def parse(self, text: str) -> Scalar:
        return scalar_parse(text, self)

    def format(self, x: Scalar) -> str:
        return scalar_format(x)

    def __str__(self):
        return "rational" if self.kind == "rational" else f"prime {self.p}"

    @classmethod
    def from_string(cls, text: str) -> "FieldSpec":
        """Parse ``rational``, ``prime 5``, ``prime:5``, ``Q`` or ``F5``."""
        t = text.strip()
        if t.lower() in ("rational", "rationals", "q"):
            return QQ
        m = re.fullmatch(r"(?:prime[\s:=]+|F_?|GF)(\d+)", t)
        if m:
            return GF(int(m.group(1)))
        raise FieldError(f"cannot parse field {text!r}")


QQ = FieldSpec("rational")


def GF(p: int) -> FieldSpec:
    return FieldSpec("prime", p)


def field_of(x) -> FieldSpec | None:
    if isinstance(x, Residue):
        return GF(x.p)
    if isinstance(x, Fraction):
        return QQ
    return None


_RATIONAL_RE = re.compile(r"(-?)(\d+)(?:/(\d+))?")
_PRIME_RE = re.compile(r"(-?)(\d+)")


def scalar_parse(text: str, field: FieldSpec) -> Scalar:
    """Parse ``[-]digits[/digits]`` over Q, or ``[-]digits`` over F_p."""
    t = text.strip()
    if field.kind == "rational":
        m = _RATIONAL_RE.fullmatch(t)
        if not m:
            raise FieldError(f"malformed rational {text!r}")
        sign, num, den = m.groups()
        d = int(den) if den is not None else 1
        if d == 0:
            raise FieldError(f"zero denominator in {text!r}")
        value = Fraction(int(num), d)
        return -value if sign else value
    if "/" in t:
        raise FieldError(f"denominator not allowed over F_{field.p}: {text!r}")
    m = _PRIME_RE.fullmatch(t)
    if not m:
        raise FieldError(f"malformed residue {text!r}")
    sign, num = m.groups()
    v = int(num)
    return Residue(-v if sign else v, field.p)


def scalar_format(x: Scalar) -> str:
    if isinstance(x, Residue):
        return str(x.value)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def scalar_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Apply ``add``, ``sub``, ``mul``, ``div``, ``neg`` or ``inv``."""
    fa = field_of(a)
    if fa is None:
        raise FieldError(f"{a!r} is not a field scalar")
    if op in ("neg", "inv"):
        if b is not None:
            raise FieldError(f"{op} is unary")
        if op == "neg":
            return -a
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return a.inverse() if isinstance(a, Residue) else 1 / a
    if b is None:
        raise FieldError(f"{op} needs two operands")
    if field_of(b) != fa:
        raise FieldMismatchError(f"{fa} vs {field_of(b)}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise FieldError(f"unknown operation {op!r}")
