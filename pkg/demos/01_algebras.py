"""Building Leibniz algebras and reading off their basic structure.

Run with ``python3 demos/01_algebras.py``.
"""

from leibniz import GF, QQ, LeibnizAlgebra, LeibnizIdentityError, catalog_make, centers, is_lie
from leibniz.field import scalar_format


def vec(v):
    return "(" + ", ".join(scalar_format(x) for x in v) + ")"


def basis(u):
    return [vec(b) for b in u.basis]


# The smallest non-Lie example: [e1, e1] = e2 and every other bracket zero.
# Indices in code are 0-based; files and printed output use 1-based names.
a1 = LeibnizAlgebra.from_brackets(QQ, 2, {(0, 0): {1: 1}})
print("A1 is a Lie algebra?", is_lie(a1))
print("[e1, e1] =", vec(a1.bracket((1, 0), (1, 0))))

left, right, center = centers(a1)
print("left center :", basis(left))
print("right center:", basis(right))
print("center      :", basis(center))
print("[L, L]      :", basis(a1.derived))

# The catalog has a few named families. Heisenberg is Lie; its center and
# derived algebra coincide.
h = catalog_make("heisenberg", 3, GF(5))
print("\nHeisenberg over F_5 is Lie?", is_lie(h))
print("center == [L, L]?", centers(h)[2] == h.derived)

# Tables that break the left Leibniz identity are refused at construction,
# with the first failing basis triple reported.
try:
    LeibnizAlgebra.from_brackets(QQ, 2, {(0, 0): {0: 1}})
except LeibnizIdentityError as err:
    print("\nrejected:", err)

# In characteristic 2, antisymmetry alone does not make an algebra Lie.
c2 = LeibnizAlgebra.from_brackets(GF(2), 2, {(0, 0): {1: 1}})
print("[e1, e1] = e2 over F_2 is Lie?", is_lie(c2))
