"""Independent brute-force and symbolic oracles.

Nothing here calls the row-reduction code under test: finite-field oracles
enumerate sets, rational oracles go through sympy.
"""

from __future__ import annotations

import itertools

import sympy


def vectors(p: int, n: int):
    return list(itertools.product(range(p), repeat=n))


def span_set(p: int, n: int, gens) -> frozenset:
    """All F_p-linear combinations of ``gens`` (integer tuples)."""
    gens = [tuple(int(x) % p for x in g) for g in gens]
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(gens)):
        v = [0] * n
        for c, g in zip(coeffs, gens):
            for i in range(n):
                v[i] = (v[i] + c * g[i]) % p
        out.add(tuple(v))
    if not gens:
        out.add((0,) * n)
    return frozenset(out)


def mat_vec(m, x, p):
    return tuple(sum(a * b for a, b in zip(row, x)) % p for row in m)


def bracket_int(c, x, y, p=None):
    n = len(x)
    out = [0] * n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                out[k] += x[i] * y[j] * c[i][j][k]
    return tuple(v % p for v in out) if p else tuple(out)


def is_leibniz_by_vectors(c, p: int) -> bool:
    """Check the identity on every triple of vectors of F_p^n, not just basis triples."""
    n = len(c)
    vs = vectors(p, n)
    for x in vs:
        for y in vs:
            xy = bracket_int(c, x, y, p)
            for z in vs:
                lhs = bracket_int(c, xy, z, p)
                a = bracket_int(c, x, bracket_int(c, y, z, p), p)
                b = bracket_int(c, y, bracket_int(c, x, z, p), p)
                if lhs != tuple((u - v) % p for u, v in zip(a, b)):
                    return False
    return True


def derivations_by_enumeration(c, p: int) -> frozenset:
    """Every n x n matrix over F_p (row-major tuple) satisfying the derivation law on all vector pairs."""
    n = len(c)
    vs = vectors(p, n)
    out = set()
    for flat in itertools.product(range(p), repeat=n * n):
        m = [flat[r * n:(r + 1) * n] for r in range(n)]
        ok = True
        for x in vs:
            mx = mat_vec(m, x, p)
            for y in vs:
                lhs = mat_vec(m, bracket_int(c, x, y, p), p)
                rhs = tuple((u + v) % p for u, v in
                            zip(bracket_int(c, mx, y, p), bracket_int(c, x, mat_vec(m, y, p), p)))
                if lhs != rhs:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(tuple(flat))
    return frozenset(out)


def derivation_dim_sympy(c) -> int:
    """dim Der(L) over Q from symbolic derivation equations."""
    n = len(c)
    syms = sympy.symbols(f"m0:{n * n}")
    M = sympy.Matrix(n, n, syms)
    C = [[sympy.Matrix([c[i][j][k] for k in range(n)]) for j in range(n)] for i in range(n)]

    def br(x, y):
        out = sympy.zeros(n, 1)
        for i in range(n):
            for j in range(n):
                out += x[i] * y[j] * C[i][j]
        return out

    e = [sympy.eye(n)[:, i] for i in range(n)]
    eqs = []
    for i in range(n):
        for j in range(n):
            diff = M * br(e[i], e[j]) - br(M * e[i], e[j]) - br(e[i], M * e[j])
            eqs.extend(sympy.expand(v) for v in diff)
    A, _ = sympy.linear_eq_to_matrix(eqs, syms)
    return n * n - A.rank()


def sympy_rank(rows) -> int:
    return sympy.Matrix(rows).rank() if rows else 0


def beta_straight(k: int, m: int, t: int) -> int:
    """Unrolled recursion: a list of all levels, each from the previous."""
    levels = {1: t * (k + t)}
    for level in range(2, m + 1):
        prev = levels[level - 1]
        levels[level] = prev * (k + prev)
    return levels[m]


def sympy_fixture_dims(c) -> dict:
    """Centers, [L,L], Ad^l and Der dimensions over Q by direct symbolic solves."""
    n = len(c)
    # row block j of ``right`` maps x to [x, e_j]; block i of ``left`` maps x to [e_i, x]
    right = sympy.Matrix([[c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)])
    left = sympy.Matrix([[c[i][j][k] for j in range(n)] for i in range(n) for k in range(n)])
    left_center = right.nullspace()
    right_center = left.nullspace()
    both = sympy.Matrix.vstack(right, left)
    brackets = [[c[i][j][k] for k in range(n)] for i in range(n) for j in range(n)]
    ad = [[c[i][col][row] for row in range(n) for col in range(n)] for i in range(n)]
    return {
        "left": len(left_center),
        "right": len(right_center),
        "center": len(both.nullspace()),
        "derived": sympy_rank(brackets),
        "adl": sympy_rank(ad),
        "der": derivation_dim_sympy(c),
    }
