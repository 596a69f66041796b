"""Structural invariants that every valid (algebra, derivation set) pair satisfies.

Each checker returns a list of human-readable failure strings; an empty list
means the instance passed.
"""

from __future__ import annotations

import random

from .algebra import LeibnizAlgebra, change_basis, is_ideal
from .bounds import abelianized_excess
from .derivations import (
    DerivationSet,
    ad_set,
    annihilator,
    commutator,
    d_center,
    derivation_algebra,
)
from .fuzz import random_invertible
from .linalg import Matrix, Subspace
from .series import lower_d_central_series, upper_d_central_series

__all__ = ["structural_failures", "fingerprint", "transport", "invariance_failures"]


def structural_failures(a: LeibnizAlgebra, d: DerivationSet) -> list[str]:
    out = []
    left, right, center = a.centers
    if not is_ideal(a, left):
        out.append("left center is not an ideal")
    if not is_ideal(a, a.derived):
        out.append("[L,L] is not an ideal")
    if left & right != center:
        out.append("center differs from left ∩ right")
    if annihilator(ad_set(a)) != right:
        out.append("Ann_L(Ad^l) differs from the right center")
    dc = d_center(d)
    if not dc.issubset(center):
        out.append("A_L(D) is not inside the center")
    if not all(dc.is_invariant(m) for m in d.matrices):
        out.append("A_L(D) is not D-invariant")
    for m in d.matrices:
        for i in range(a.n):
            lhs = commutator(m, a.left_mult[i])
            if lhs != a.left_mult_by(m.column(i)):
                out.append(f"[m, l_e{i + 1}] != l_(m e{i + 1})")
    t = a.n - dc.dim
    if abelianized_excess(d) > t * d.k:
        out.append("dim(([L,D]+[L,L])/[L,L]) exceeds t*k")

    upper = upper_d_central_series(a, d)
    if upper.terms[0] != Subspace.zero(a.field, a.n) or upper.zeta(1) != dc:
        out.append("upper series does not start 0, A_L(D)")
    for lo, hi in zip(upper.terms, upper.terms[1:]):
        if not lo.issubset(hi) or lo == hi:
            out.append("upper series is not strictly ascending")
        for m in d.matrices:
            if not all(m.apply(x) in lo for x in hi.basis):
                out.append("[zeta_(v+1), D] is not inside zeta_v")
                break
    lower = lower_d_central_series(a, d)
    for hi, lo in zip(lower.terms, lower.terms[1:]):
        if not lo.issubset(hi) or lo == hi:
            out.append("lower series is not strictly descending")
    for g in lower.terms:
        if not all(g.is_invariant(m) for m in d.matrices):
            out.append("lower series term is not D-invariant")
    if upper.hypercenter.is_full() and not lower.gamma(upper.zl + 1).is_zero():
        out.append("hypercenter is L but gamma_(zl+1) is nonzero")
    if upper.stabilized_at > a.n + 1 or lower.stabilized_at > a.n + 1:
        out.append("series took more than n+1 terms")
    return out


def fingerprint(a: LeibnizAlgebra, d: DerivationSet) -> dict:
    """Basis-independent dimensions of an (algebra, derivation set) pair."""
    left, right, center = a.centers
    upper = upper_d_central_series(a, d)
    lower = lower_d_central_series(a, d)
    return {
        "left": left.dim,
        "right": right.dim,
        "center": center.dim,
        "derived": a.derived.dim,
        "der": derivation_algebra(a).dim,
        "adl": ad_set(a).dim,
        "d": d.dim,
        "d_center": d_center(d).dim,
        "upper": upper.dims,
        "lower": lower.dims,
    }


def transport(d: DerivationSet, b: LeibnizAlgebra, p: Matrix) -> DerivationSet:
    """Carry d to the algebra ``b = change_basis(d.algebra, p)``: alpha -> p^-1 alpha p."""
    pinv = p.inverse()
    n = b.n
    space = Subspace.span(b.field, n * n, ((pinv @ m @ p).entries for m in d.matrices))
    return DerivationSet(b, space)


def invariance_failures(a: LeibnizAlgebra, d: DerivationSet, rng: random.Random, changes: int = 3) -> list[str]:
    out = []
    ref = fingerprint(a, d)
    for _ in range(changes):
        p = random_invertible(a.field, a.n, rng)
        b = change_basis(a, p)
        got = fingerprint(b, transport(d, b, p))
        if got != ref:
            out.append(f"dimensions changed under a basis change: {ref} -> {got}")
    return out
