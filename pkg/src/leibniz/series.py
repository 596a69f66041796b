"""Upper and lower D-central series.

Both series live in the coordinates of L itself: each upper term is pulled
back from the quotient in which it was computed, so containments between
terms are ordinary subspace containments.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LeibnizAlgebra
from .derivations import DerivationSet, ad_set, d_center, induced_derivations
from .linalg import Subspace, preimage

__all__ = ["SeriesResult", "upper_d_central_series", "lower_d_central_series",
           "upper_central_series", "lower_central_series"]


@dataclass(frozen=True)
class SeriesResult:
    """Terms of one series.

    Upper: ``terms[i]`` is zeta_i, starting from zeta_0 = 0, and
    ``stabilized_at`` is zl(L, D). Lower: ``terms[i]`` is gamma_{i+1}, starting
    from gamma_1 = L, and ``stabilized_at`` is the least index v with
    gamma_v = gamma_{v+1}. Terms past the end repeat the last one.
    """

    flavor: str
    terms: tuple
    stabilized_at: int
    hypercenter: Subspace | None = None
    zl: int | None = None

    def zeta(self, i: int) -> Subspace:
        if self.flavor != "upper":
            raise ValueError("zeta terms belong to the upper series")
        return self.terms[min(i, len(self.terms) - 1)]

    def gamma(self, i: int) -> Subspace:
        if self.flavor != "lower":
            raise ValueError("gamma terms belong to the lower series")
        if i < 1:
            raise ValueError("lower series is indexed from 1")
        return self.terms[min(i - 1, len(self.terms) - 1)]

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]


def upper_d_central_series(a: LeibnizAlgebra, d: DerivationSet) -> SeriesResult:
    d.require_adl()
    zeta = Subspace.zero(a.field, a.n)
    terms = [zeta]
    while True:
        induced = induced_derivations(d, zeta)
        nxt = preimage(induced.proj, d_center(induced))
        if nxt == zeta:
            break
        terms.append(nxt)
        zeta = nxt
    zl = len(terms) - 1
    return SeriesResult("upper", tuple(terms), zl, hypercenter=terms[-1], zl=zl)


def lower_d_central_series(a: LeibnizAlgebra, d: DerivationSet) -> SeriesResult:
    d.require_adl()
    gamma = Subspace.full(a.field, a.n)
    terms = [gamma]
    while True:
        nxt = Subspace.span(a.field, a.n, (m.apply(x) for m in d.matrices for x in gamma.basis))
        if nxt == gamma:
            break
        terms.append(nxt)
        gamma = nxt
    return SeriesResult("lower", tuple(terms), len(terms))


def upper_central_series(a: LeibnizAlgebra) -> SeriesResult:
    return upper_d_central_series(a, ad_set(a))


def lower_central_series(a: LeibnizAlgebra) -> SeriesResult:
    return lower_d_central_series(a, ad_set(a))
