"""Upper and lower D-central series.

With D = Ad^l these are the classical upper and lower central series. Upper
terms are stored pulled back into L, so each term visibly contains the last.
"""

from leibniz import (
    QQ,
    Matrix,
    catalog_make,
    derivation_algebra,
    lie_closure,
    lower_central_series,
    lower_d_central_series,
    upper_central_series,
    upper_d_central_series,
)


def show(label, series):
    print(label)
    first = 0 if series.flavor == "upper" else 1
    for i, term in enumerate(series.terms, first):
        sym = "zeta" if series.flavor == "upper" else "gamma"
        print(f"  {sym}_{i}: dim {term.dim}  basis {[' '.join(map(str, b)) for b in term.basis]}")


h = catalog_make("heisenberg", 3, QQ)
up = upper_central_series(h)
show("Heisenberg, upper central series", up)
print(f"  zl = {up.zl}, hypercenter is all of L: {up.hypercenter.is_full()}")
show("Heisenberg, lower central series", lower_central_series(h))

# nonabelian2 has trivial center, so its upper series never starts.
n2 = catalog_make("nonabelian2", 2, QQ)
print("\nnonabelian2: zl =", upper_central_series(n2).zl)
show("nonabelian2, lower central series (stalls at e2)", lower_central_series(n2))

# Enlarging D shrinks the D-center. For cyclic_leibniz(4) all of Der has
# zero D-center, while adding only the nilpotent shift e1 -> e3, e2 -> e4
# to Ad^l keeps a full-length series.
c4 = catalog_make("cyclic_leibniz", 4, QQ)
der = derivation_algebra(c4)
print(f"\ncyclic_leibniz(4), D = Der (k = {der.k}): zl = {upper_d_central_series(c4, der).zl}")
shift = Matrix.from_rows(QQ, [[0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]])
d = lie_closure(c4, [shift])
print(f"cyclic_leibniz(4), D = Ad^l + shift (k = {d.k}):")
show("upper", upper_d_central_series(c4, d))
show("lower", lower_d_central_series(c4, d))
