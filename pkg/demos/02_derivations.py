"""Derivation sets, D-centers and D-derived subalgebras.

A derivation set D is any Lie subalgebra of Der(L) that contains the inner
left multiplications Ad^l(L). The two extremes are Ad^l(L) itself and Der(L).
"""

from leibniz import (
    QQ,
    Matrix,
    ad_set,
    catalog_make,
    d_center,
    d_derived,
    derivation_algebra,
    is_derivation,
    lie_closure,
)
from leibniz.field import scalar_format


def basis(u):
    return ["(" + ", ".join(scalar_format(x) for x in b) + ")" for b in u.basis]


a1 = catalog_make("cyclic_leibniz", 2, QQ)

# Matrices act on coordinate columns: column c is the image of e_c.
alpha = Matrix.from_rows(QQ, [[1, 0], [0, 2]])
print("e1 -> e1, e2 -> 2 e2 is a derivation?", is_derivation(a1, alpha))
print("e2 -> e1 is a derivation?", is_derivation(a1, Matrix.from_rows(QQ, [[0, 1], [0, 0]])))

ad = ad_set(a1)
der = derivation_algebra(a1)
print(f"\ndim Ad^l = {ad.dim}, dim Der = {der.dim}, so k = dim Der - dim Ad^l = {der.k}")

# Closing {alpha} together with Ad^l already gives all of Der(A1).
d = lie_closure(a1, [alpha])
print("closure of {alpha} equals Der?", d == der)

for name, ds in [("Ad^l", ad), ("Der", der)]:
    z = d_center(ds)
    print(f"\nD = {name}")
    print("  A_L(D) basis :", basis(z), f"(t = codim = {a1.n - z.dim})")
    print("  [L, D] basis :", basis(d_derived(ds)))
