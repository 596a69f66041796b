"""Random Leibniz algebras and derivation sets for property checks.

Two strategies:

``catalog_conjugate``
    a catalog family (or a direct sum of two) written in a random basis;
    always valid.
``graded_reject``
    sparse random constants supported on ``c[i][j][k]`` with ``k > max(i, j)``
    (each slot drawn with probability 1/2, else zero), kept only when the
    Leibniz identity holds.

Streams are deterministic functions of the config.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .algebra import CATALOG, LeibnizAlgebra, _leibniz_violations, catalog_make, change_basis, direct_sum
from .derivations import DerivationSet, ad_set, derivation_algebra, lie_closure
from .field import FieldSpec
from .linalg import Matrix, unflatten

__all__ = [
    "STRATEGIES",
    "FuzzConfig",
    "fuzz_generate",
    "catalog_shapes",
    "graded_positions",
    "random_invertible",
    "derivation_sets",
]

STRATEGIES = ("catalog_conjugate", "graded_reject")

#: graded_reject gives up after this many consecutive rejections.
MAX_ATTEMPTS = 100_000


@dataclass(frozen=True)
class FuzzConfig:
    dim: int
    field: FieldSpec
    count: int
    seed: int = 0
    strategy: str = "catalog_conjugate"

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be at least 1")
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}; choose from {STRATEGIES}")


def _families(dim: int) -> list[str]:
    return [name for name, (ok, _) in sorted(CATALOG.items()) if ok(dim)]


def catalog_shapes(dim: int) -> list[tuple]:
    """Every (family, dim) or pair of them that adds up to ``dim``."""
    shapes = [((name, dim),) for name in _families(dim)]
    for d1 in range(1, dim):
        d2 = dim - d1
        if d1 > d2:
            break
        for f1 in _families(d1):
            for f2 in _families(d2):
                if d1 == d2 and f2 < f1:
                    continue
                shapes.append(((f1, d1), (f2, d2)))
    return shapes


def random_invertible(field: FieldSpec, n: int, rng: random.Random) -> Matrix:
    while True:
        m = Matrix(field, n, n, tuple(tuple(field.random(rng) for _ in range(n)) for _ in range(n)))
        if m.is_invertible():
            return m


def graded_positions(dim: int) -> list[tuple[int, int, int]]:
    return [(i, j, k) for i in range(dim) for j in range(dim) for k in range(dim) if k > max(i, j)]


def _catalog_conjugate(cfg: FuzzConfig, rng: random.Random) -> LeibnizAlgebra:
    shape = rng.choice(catalog_shapes(cfg.dim))
    parts = [catalog_make(name, d, cfg.field) for name, d in shape]
    a = parts[0] if len(parts) == 1 else direct_sum(*parts)
    return change_basis(a, random_invertible(cfg.field, cfg.dim, rng))


def _graded_draw(cfg: FuzzConfig, rng: random.Random):
    n, f = cfg.dim, cfg.field
    c = [[[f.zero] * n for _ in range(n)] for _ in range(n)]
    for i, j, k in graded_positions(n):
        if rng.random() < 0.5:
            c[i][j][k] = f.random(rng)
    return c


def fuzz_generate(cfg: FuzzConfig, stats: dict | None = None) -> Iterator[LeibnizAlgebra]:
    """Yield ``cfg.count`` valid algebras; ``stats`` collects attempt counts."""
    rng = random.Random(cfg.seed)
    if stats is not None:
        stats.update(attempts=0, accepted=0)
    for _ in range(cfg.count):
        if cfg.strategy == "catalog_conjugate":
            a = _catalog_conjugate(cfg, rng)
            tries = 1
        else:
            for tries in range(1, MAX_ATTEMPTS + 1):
                c = _graded_draw(cfg, rng)
                if not _leibniz_violations(c, cfg.field, first_only=True):
                    break
            else:
                raise RuntimeError(f"no valid graded table after {MAX_ATTEMPTS} draws")
            a = LeibnizAlgebra(cfg.field, c, validate=False)
        if stats is not None:
            stats["attempts"] += tries
            stats["accepted"] += 1
        yield a


def derivation_sets(a: LeibnizAlgebra, rng: random.Random) -> list[tuple[str, DerivationSet]]:
    """Ad^l(L), Der(L) and, when Der exceeds Ad^l by two or more, a random closure between."""
    ad = ad_set(a)
    der = derivation_algebra(a)
    out = [("adl", ad), ("der", der)]
    if der.dim - ad.dim >= 2:
        f, n = a.field, a.n
        mid = None
        for _ in range(8):
            coeffs = [f.random(rng) for _ in der.space.basis]
            v = [sum((c * b[p] for c, b in zip(coeffs, der.space.basis)), f.zero) for p in range(n * n)]
            mid = lie_closure(a, [unflatten(f, v, n)])
            if ad.dim < mid.dim < der.dim:
                break
        out.append(("mid", mid))
    return out
