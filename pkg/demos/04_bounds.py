"""Checking the dimension bounds on concrete algebras.

Every verifier returns a BoundReport holding the measured quantities, the two
sides of the inequality and whether it applies at all.
"""

from leibniz import (
    QQ,
    ad_set,
    beta,
    catalog_make,
    derivation_algebra,
    direct_sum,
    verify_corollaries,
    verify_theorem_a,
    verify_theorem_b,
)
from leibniz.report import render_report

a1 = catalog_make("cyclic_leibniz", 2, QQ)
print("Theorem A on A1 with D = Ad^l (the bound is attained):")
print(render_report([verify_theorem_a(a1, ad_set(a1))], "text"))
print("Theorem A on A1 with D = Der:")
print(render_report([verify_theorem_a(a1, derivation_algebra(a1))], "text"))

# The beta recursion grows fast; results are exact Python integers.
print("beta(2,2,3) =", beta(2, 2, 3), " beta(3,5,9) has", len(str(beta(3, 5, 9))), "digits\n")

# A mixed example: a non-Lie cyclic algebra glued to a Heisenberg algebra.
mixed = direct_sum(catalog_make("cyclic_leibniz", 3, QQ), catalog_make("heisenberg", 3, QQ))
print("cyclic_leibniz(3) + heisenberg, Theorem B for D = Der:")
print(render_report([verify_theorem_b(mixed, derivation_algebra(mixed))], "text"))

print("Corollaries with series index 2 (Lie variants do not apply here):")
print(render_report(verify_corollaries(mixed, 2), "text"))

print("The same reports as stable key = value lines:")
print(render_report(verify_corollaries(catalog_make("heisenberg", 3, QQ)), "kv"), end="")
