"""Brute-force reference computations used as test oracles.

Nothing here calls into the library beyond reading a group's Cayley table,
so these serve as independent checks of the optimized code paths.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from itertools import product


def closure(table, gens) -> frozenset:
    S = {0, *gens}
    frontier = list(S)
    while frontier:
        new = []
        for a in frontier:
            for b in list(S):
                for c in (table[a][b], table[b][a]):
                    if c not in S:
                        S.add(c)
                        new.append(c)
        frontier = new
    return frozenset(S)


def all_subgroups(table) -> list[frozenset]:
    """Every subgroup, found by repeatedly adjoining one element."""
    n = len(table)
    found = {frozenset([0])}
    todo = [frozenset([0])]
    while todo:
        S = todo.pop()
        for g in range(n):
            if g in S:
                continue
            T = closure(table, set(S) | {g})
            if T not in found:
                found.add(T)
                todo.append(T)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def mobius(subgroups: list[frozenset], K: frozenset, H: frozenset) -> int:
    """mu(K, H) from the defining recursion."""
    if not K <= H:
        return 0
    if K == H:
        return 1
    between = [L for L in subgroups if K <= L < H]
    return -sum(mobius(subgroups, K, L) for L in between)


def product_set(table, A, B) -> frozenset:
    return frozenset(table[a][b] for a in A for b in B)


def bouc_m(table, N: frozenset) -> Fraction:
    """Classical m_{G,N} = (1/|G|) sum_{K: KN = G} |K| mu(K, G)."""
    n = len(table)
    subs = all_subgroups(table)
    G = frozenset(range(n))
    total = sum(len(K) * mobius(subs, K, G) for K in subs if product_set(table, K, N) == G)
    return Fraction(total, n)


def inverse(table, g) -> int:
    return next(h for h in range(len(table)) if table[g][h] == 0)


def homs_to_cyclic(table, U: frozenset, n: int) -> list[dict]:
    """All homomorphisms U -> Z/n as dicts: every choice of images for a
    generating set, propagated through the table and kept when consistent."""
    elems = sorted(U)
    gens = []
    span = frozenset([0])
    for g in elems:
        if g not in span:
            gens.append(g)
            span = closure(table, set(span) | {g})
    out = []
    for imgs in product(range(n), repeat=len(gens)):
        f = {0: 0}
        for g, v in zip(gens, imgs):
            f[g] = v
        changed = True
        ok = True
        while changed and ok:
            changed = False
            for a in list(f):
                for b in list(f):
                    c = table[a][b]
                    v = (f[a] + f[b]) % n
                    if c in f:
                        if f[c] != v:
                            ok = False
                            break
                    else:
                        f[c] = v
                        changed = True
                if not ok:
                    break
        if ok and len(f) == len(U):
            out.append(f)
    return out


def brute_species_complex(table, n: int, U, phi: dict, H, Phi_of) -> complex:
    """s_{(H,Phi)}([U, phi]) for A = Z/n with every g in G, divided by |U|.

    Phi_of maps a dict (a homomorphism H -> Z/n) to a fraction mod 1.
    """
    G = range(len(table))
    total = 0j
    for g in G:
        gi = inverse(table, g)
        gU = {table[table[g][u]][gi] for u in U}
        if not set(H) <= gU:
            continue
        # (g.phi)(x) = phi(g^-1 x g)
        res = {x: phi[table[table[gi][x]][g]] for x in H}
        total += cmath.exp(2j * math.pi * float(Phi_of(res)))
    return total / len(U)


def solve_complex(M: list[list[complex]], rhs: list[complex]) -> list[complex]:
    """Solve x M = rhs (row vector times square matrix) by Gauss-Jordan."""
    n = len(M)
    # transpose so that the system reads M^T x^T = rhs^T
    a = [[M[j][i] for j in range(n)] + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(a[r][col]))
        if abs(a[piv][col]) < 1e-12:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]
