"""Reading and writing algebra and derivation files."""

from leibniz import QQ, catalog_make
from leibniz.formats import (
    parse_algebra_file,
    parse_derivation_file,
    render_algebra_file,
    render_derivation_file,
)

text = """\
# the Heisenberg algebra with a rescaled bracket
field rational
dim 3
bracket 1 2 : 1/2*e3
bracket 2 1 : -1/2*e3
"""
h = parse_algebra_file(text)
print(render_algebra_file(h))

# Derivation files list matrices; the loader closes them up together with Ad^l.
a1 = catalog_make("cyclic_leibniz", 2, QQ)
d = parse_derivation_file("derivations 1\nmatrix\n1 0\n0 2\n", a1)
print(f"loaded D has dim {d.dim} and k = {d.k}")
print(render_derivation_file(d.matrices))

# Rendering then parsing returns the same structure constants.
print("round trip ok:", parse_algebra_file(render_algebra_file(h)).c == h.c)
