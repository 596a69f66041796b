"""Dimension bounds as checkable inequalities on a concrete algebra.

Throughout, ``k`` is dim(D / Ad^l(L)). The series index appearing in the
Baer-type statements is called ``series_index`` to keep the two apart.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import LeibnizAlgebra, is_lie
from .derivations import DerivationSet, ad_set, d_center, d_derived, derivation_algebra
from .series import lower_d_central_series, upper_d_central_series

__all__ = [
    "CLAIMS",
    "BoundReport",
    "beta",
    "verify_theorem_a",
    "verify_theorem_b",
    "verify_corollaries",
    "abelianized_excess",
]

CLAIMS = (
    "theorem_a",
    "theorem_b",
    "schur_leibniz",
    "schur_lie",
    "hegarty_leibniz",
    "hegarty_lie",
    "baer_leibniz",
    "baer_lie",
)


@dataclass(frozen=True)
class BoundReport:
    claim: str
    quantities: dict = field(default_factory=dict)
    lhs: int | None = None
    rhs: int | None = None
    applicable: bool = True

    def __post_init__(self):
        if self.claim not in CLAIMS:
            raise ValueError(f"unknown claim {self.claim!r}")

    @property
    def holds(self) -> bool | None:
        if not self.applicable:
            return None
        return self.lhs <= self.rhs

    @property
    def ok(self) -> bool:
        """True unless the claim applies and fails."""
        return not self.applicable or self.lhs <= self.rhs


def beta(k: int, m: int, t: int) -> int:
    """beta(k,1,t) = t(k+t); beta(k,m+1,t) = beta(k,m,t) * (k + beta(k,m,t))."""
    if m < 1:
        raise ValueError(f"beta needs m >= 1, got {m}")
    if k < 0 or t < 0:
        raise ValueError("beta needs k, t >= 0")
    b = t * (k + t)
    for _ in range(m - 1):
        b = b * (k + b)
    return b


def abelianized_excess(d: DerivationSet) -> int:
    """dim(([L,D] + [L,L]) / [L,L])."""
    K = d.algebra.derived
    return (d_derived(d) + K).dim - K.dim


def verify_theorem_a(a: LeibnizAlgebra, d: DerivationSet) -> BoundReport:
    t = a.n - d_center(d).dim
    k = d.k
    lhs = d_derived(d).dim
    q = {"n": a.n, "t": t, "k": k, "dim_d": d.dim,
         "dim_derived": a.derived.dim, "abelianized_excess": abelianized_excess(d)}
    return BoundReport("theorem_a", q, lhs, t * (k + t))


def verify_theorem_b(a: LeibnizAlgebra, d: DerivationSet) -> BoundReport:
    upper = upper_d_central_series(a, d)
    m = upper.zl
    t = a.n - upper.hypercenter.dim
    k = d.k
    q = {"n": a.n, "t": t, "k": k, "m": m, "dim_hypercenter": upper.hypercenter.dim}
    if m < 1:
        return BoundReport("theorem_b", q, applicable=False)
    lower = lower_d_central_series(a, d)
    return BoundReport("theorem_b", q, lower.gamma(m + 1).dim, beta(k, m, t))


def verify_corollaries(a: LeibnizAlgebra, series_index: int = 1) -> list[BoundReport]:
    """Schur, Hegarty and Baer type bounds; the Lie variants apply only to Lie algebras."""
    if series_index < 1:
        raise ValueError("series_index must be at least 1")
    n = a.n
    lie = is_lie(a)
    s = series_index

    _, _, center = a.centers
    t = n - center.dim
    dl = a.derived.dim
    reports = [
        BoundReport("schur_leibniz", {"t": t}, dl, t * t),
        BoundReport("schur_lie", {"t": t}, dl, t * (t + 1) // 2, applicable=lie),
    ]

    der = derivation_algebra(a)
    t = n - d_center(der).dim
    ld = d_derived(der).dim
    q = {"t": t, "k": der.k}
    reports += [
        BoundReport("hegarty_leibniz", q, ld, t * (t + 1)),
        BoundReport("hegarty_lie", dict(q), ld, t * (t + 1) // 2, applicable=lie),
    ]

    ad = ad_set(a)
    upper = upper_d_central_series(a, ad)
    lower = lower_d_central_series(a, ad)
    t = n - upper.zeta(s).dim
    lg = lower.gamma(s + 1).dim
    q = {"t": t, "series_index": s}
    reports += [
        BoundReport("baer_leibniz", q, lg, 2 ** (s - 1) * t ** (s + 1)),
        BoundReport("baer_lie", dict(q), lg, t ** s * (t + 1) // 2, applicable=lie),
    ]
    return reports
