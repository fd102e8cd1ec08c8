"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line. Run with
``pytest tests/test_acceptance.py -v`` or directly as a script.
"""

from __future__ import annotations

import sys
from fractions import Fraction

import pytest

from fiberburnside.bisets import (
    BisetElement,
    act,
    act_on_idempotent,
    biset_ring,
    canonical_decomposition,
    defl,
    ind,
    inf,
    iso,
    res,
    tw,
)
from fiberburnside.fbring import burnside_ring, idempotent_of, species
from fiberburnside.fiber import dual_group
from fiberburnside.groups import automorphisms, bits, build_group, catalog, find_isomorphism, order_cap, popcount
from fiberburnside.lattice import build_poset, chain_report, closed_sets, composition_factor
from fiberburnside.pairs import (
    aut_orbit,
    beta,
    deflate_idempotent,
    double_product,
    evaluate_E,
    find_pair_isomorphism,
    is_bpair,
    m_constant,
    m_via_sigma,
    pair_leq,
    quotient_pair,
)

from oracles import bouc_m

SUITE = [
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8",
    "C2xC2", "C2xC4", "C2xC2xC2", "S3", "D8", "Q8", "A4", "D10", "C3xC3",
]
FIBERS = ["1", "C2", "C3", "C4", "C6", "mu"]


@pytest.fixture
def report(capsys):
    def emit(n: int, ok: bool, detail: str = ""):
        with capsys.disabled():
            line = f"criterion {n}: {'PASS' if ok else 'FAIL'}"
            print(("\n" + line + (f"  ({detail})" if detail else "")), flush=True)
        assert ok, detail

    return emit


def chars(G, A):
    return dual_group(G, A).kchars()


# ---------------------------------------------------------------------------


def criterion_1() -> tuple[bool, str]:
    count = 0
    for name in SUITE:
        G = build_group(name)
        for A in FIBERS:
            R = burnside_ring(G, A)
            xps = R.xpairs()
            es = [idempotent_of(R, p) for p in xps]
            total = R.zero()
            for e in es:
                total = total + e
            if total != R.one():
                return False, f"sum of idempotents on {name}, A={A}"
            for i, e in enumerate(es):
                for j in range(i, len(es)):
                    if e * es[j] != (e if i == j else R.zero()):
                        return False, f"product e{i} e{j} on {name}, A={A}"
                for j, p in enumerate(xps):
                    if species(e, p) != (1 if i == j else 0):
                        return False, f"species of e{i} at {j} on {name}, A={A}"
            count += len(es)
    return True, f"{count} idempotents over {len(SUITE)} groups x {len(FIBERS)} fibers"


def criterion_2() -> tuple[bool, str]:
    n = 0
    for name in SUITE:
        G = build_group(name)
        for A in FIBERS:
            for Phi in chars(G, A):
                for N in G.normal_subgroups():
                    s, _ = deflate_idempotent(G, Phi, N)
                    if s != m_constant(G, Phi, N):
                        return False, f"{name}, A={A}, Phi #{Phi.id}, |N|={popcount(N)}"
                    n += 1
    return True, f"{n} (G, Phi, N) triples"


def criterion_3() -> tuple[bool, str]:
    chains = 0
    for name in SUITE:
        G = build_group(name)
        normals = G.normal_subgroups()
        for A in FIBERS:
            for Phi in chars(G, A):
                for N in normals:
                    Q, PhiN = quotient_pair(G, Phi, N)
                    proj = G.quotient(N).projection
                    mN = m_constant(G, Phi, N)
                    for M in normals:
                        if M & N != N:
                            continue
                        if m_constant(G, Phi, M) != mN * m_constant(Q, PhiN, proj.image_mask(M)):
                            return False, f"transitivity on {name}, A={A}"
                        chains += 1
    iso_cases = 0
    for name in ["C2xC2", "C3xC3"]:
        G = build_group(name)
        p = 2 if name == "C2xC2" else 3
        kernels = [N for N in G.normal_subgroups() if popcount(N) == p]
        for A in FIBERS:
            for Phi in chars(G, A):
                for M in kernels:
                    for N in kernels:
                        if M == N:
                            continue
                        if find_pair_isomorphism(quotient_pair(G, Phi, M), quotient_pair(G, Phi, N)) is None:
                            continue
                        if m_constant(G, Phi, M) != m_constant(G, Phi, N):
                            return False, f"isomorphic quotients on {name}, A={A}"
                        iso_cases += 1
    if iso_cases == 0:
        return False, "no isomorphic quotient pairs were exercised"
    sigma_cases = 0
    for G in catalog(8):
        normals = G.normal_subgroups()
        for A in FIBERS:
            for Phi in chars(G, A):
                for M in normals:
                    m = m_constant(G, Phi, M)
                    for N in normals:
                        if m_via_sigma(G, Phi, M, N) != m:
                            return False, f"Sigma formula on {G.name}, A={A}"
                        sigma_cases += 1
    return True, f"{chains} chains, {iso_cases} isomorphic quotients, {sigma_cases} Sigma cases"


def _ops(G, A):
    ops = []
    for H in G.class_reps():
        ops += [res(G, H, A), ind(G, H, A)]
    for N in G.normal_subgroups():
        ops += [inf(G, N, A), defl(G, N, A)]
    for lam in dual_group(G, A).elements:
        ops.append(tw(G, lam, A))
    for f in automorphisms(G):
        ops.append(iso(f, A))
    for N in G.normal_subgroups():
        # an isomorphism onto a different group object: G -> G/1
        if N == 1:
            q = G.quotient(N)
            ops.append(iso(q.projection, A))
    return ops


def criterion_4() -> tuple[bool, str]:
    idem_checks = 0
    for name in SUITE:
        G = build_group(name)
        for A in ["1", "C2", "C4", "mu"]:
            R = burnside_ring(G, A)
            reps = G.class_reps()
            lams = dual_group(G, A).elements
            auts = automorphisms(G)
            for p in R.xpairs():
                e = idempotent_of(R, p)
                for H in reps:
                    if act_on_idempotent("res", G, A, p, H) != act(res(G, H, A), e):
                        return False, f"res on {name}, A={A}"
                for lam in lams:
                    if act_on_idempotent("tw", G, A, p, lam) != act(tw(G, lam, A), e):
                        return False, f"tw on {name}, A={A}"
                for f in auts:
                    if act_on_idempotent("iso", G, A, p, f) != act(iso(f, A), e):
                        return False, f"iso on {name}, A={A}"
                # res to a proper subgroup kills e_(G, Phi)
                if p.mask == G.full and any(
                    not act(res(G, H, A), e).is_zero() for H in reps if H != G.full
                ):
                    return False, f"res of a top idempotent on {name}"
                idem_checks += 1
            for N in G.normal_subgroups():
                RQ = burnside_ring(G.quotient(N).group, A)
                for p in RQ.xpairs():
                    if act_on_idempotent("inf", G, A, p, N) != act(inf(G, N, A), idempotent_of(RQ, p)):
                        return False, f"inf on {name}, A={A}"
                    idem_checks += 1
            for H in reps:
                RH = burnside_ring(G.subgroup_group(H)[0], A)
                for p in RH.xpairs():
                    if act_on_idempotent("ind", G, A, p, H) != act(ind(G, H, A), idempotent_of(RH, p)):
                        return False, f"ind on {name}, A={A}"
                    idem_checks += 1
    actions = 0
    with order_cap(64):
        for G in catalog(8):
            for A in ["C2", "C4"]:
                for x in _ops(G, A):
                    R = burnside_ring(x.right, A)
                    for b in R.basis:
                        v = R.basis_element(b)
                        if act(x, v, "closed") != act(x, v, "compose"):
                            return False, f"{x.kind} on {G.name}, A={A}"
                        actions += 1
    return True, f"{idem_checks} idempotent identities, {actions} closed-vs-compose actions"


def criterion_5() -> tuple[bool, str]:
    groups = catalog(6)
    cases = nonzero = 0
    for A in ["1", "C2", "C3"]:
        for G in groups:
            RG = burnside_ring(G, A)
            for H in groups:
                ring = biset_ring(G, H, A)
                for b in ring.basis:
                    for Phi in chars(G, A):
                        eG = idempotent_of(RG, RG.xpair_rep(G.full, Phi))
                        for Psi in chars(H, A):
                            lhs, s = double_product(G, H, b, Phi, Psi)
                            if lhs != eG.scale(s):
                                return False, f"{G.name} x {H.name}, A={A}, {b}"
                            cases += 1
                            nonzero += s != 0
    if not nonzero:
        return False, "no nonzero instance was exercised"
    return True, f"{cases} cases, {nonzero} with a nonzero scalar"


def criterion_6() -> tuple[bool, str]:
    groups = catalog(8)
    n = 0
    with order_cap(64):
        for G in groups:
            for H in groups:
                ring = biset_ring(G, H, "C2")
                for b in ring.basis:
                    dec = canonical_decomposition(G, H, "C2", b)
                    if dec.compose() != BisetElement(G, H, ring.basis_element(b)):
                        return False, f"{G.name} x {H.name}: {b}"
                    n += 1
    return True, f"{n} basis elements over {len(groups) ** 2} group pairs"


def criterion_7() -> tuple[bool, str]:
    for name in ["C2xC2", "C3xC3"]:
        G = build_group(name)
        (triv,) = chars(G, "1")
        if not is_bpair(G, triv):
            return False, f"{name} should be a B-group"
        for N in G.normal_subgroups():
            if N != 1 and bouc_m(G.table, frozenset(bits(N))) != 0:
                return False, f"oracle disagrees on {name}"
    for p in [2, 3, 5, 7]:
        G = build_group(f"C{p}")
        (triv,) = chars(G, "1")
        m = m_constant(G, triv, G.full)
        if is_bpair(G, triv) or m != Fraction(p - 1, p) or m != bouc_m(G.table, frozenset(range(p))):
            return False, f"C{p}"
    for name, n in [("C4", 2), ("C9", 3)]:
        G = build_group(name)
        (triv,) = chars(G, "1")
        (N,) = G.minimal_normal_subgroups()
        m = m_constant(G, triv, N)
        if is_bpair(G, triv) or popcount(N) != n or m != 1 or m != bouc_m(G.table, frozenset(bits(N))):
            return False, name
    return True, "C2xC2, C3xC3 are B-groups; C2, C3, C5, C7, C4, C9 are not"


def criterion_8() -> tuple[bool, str]:
    C2 = build_group("C2")
    Phi0 = next(Phi for Phi in chars(C2, "C2") if not any(Phi.values))
    (triv,) = chars(C2, "1")
    ok = (
        m_constant(C2, Phi0, C2.full) == 0
        and is_bpair(C2, Phi0)
        and m_constant(C2, triv, C2.full) == Fraction(1, 2)
        and not is_bpair(C2, triv)
    )
    return ok, "A=C2: m=0, B^A-pair; A=1: m=1/2, not a B-group"


def criterion_9() -> tuple[bool, str]:
    P = build_poset(2, "C2")
    if len(P) != 2:
        return False, f"{len(P)} classes"
    bottom, top = P.nodes
    if (bottom.group.order, top.group.order) != (1, 2) or any(top.phi.values):
        return False, "unexpected classes"
    if not (P.leq[0][1] and not P.leq[1][0]):
        return False, "not a chain"
    sets = closed_sets(P)
    if len(sets) != 3:
        return False, f"{len(sets)} closed sets"
    empty, upper, full = sets
    f1, f2 = chain_report(full, upper), chain_report(upper, empty)
    if f1.group.order != 1 or f2 != top:
        return False, "chain_report"
    for pc in P.nodes:
        d = composition_factor(pc, check_E=True)
        if (d.out_orbit_size, d.stabilizer_index, d.E_orbit_size) != (1, 1, 1):
            return False, "composition factors"
    return True, "[1,1] < [C2,Phi0], closed sets {}, {top}, {both}"


def _E_sweep(A, groups):
    pairs = [(G, Phi) for G in groups for Phi in chars(G, A)]
    table = {}
    for i, P in enumerate(pairs):
        for T in groups:
            table[(i, T.name)] = evaluate_E(P, T)
    return pairs, table


def criterion_10() -> tuple[bool, str]:
    groups = catalog(6)
    mono = conv = minimal = 0
    for A in ["1", "C2", "C3"]:
        pairs, E = _E_sweep(A, groups)
        leq = {(i, j): pair_leq(pairs[i], pairs[j]) is not None for i in range(len(pairs)) for j in range(len(pairs))}
        bp = [is_bpair(*P) for P in pairs]
        for i, (H, Psi) in enumerate(pairs):
            for j, (G, Phi) in enumerate(pairs):
                # (H, Psi) <= (G, Phi) implies E_(G,Phi) inside E_(H,Psi)
                if leq[(i, j)]:
                    for T in groups:
                        if not E[(j, T.name)] <= E[(i, T.name)]:
                            return False, f"monotonicity {H.name} <= {G.name} at {T.name}, A={A}"
                    mono += 1
                # converse for B^A-pairs, via e_(G,Phi) lying in E_(H,Psi)(G)
                if bp[i] and (G.full, Phi.id) in E[(i, G.name)]:
                    if not leq[(i, j)]:
                        return False, f"converse {H.name} vs {G.name}, A={A}"
                    conv += 1
        for j, (G, Phi) in enumerate(pairs):
            b, _ = beta(G, Phi)
            k = b.group.order
            for T in groups:
                keys = E[(j, T.name)]
                if T.order < k and keys:
                    return False, f"E of {G.name} nonzero below the order of beta, A={A}"
                if T.order == k:
                    for K, cid in keys:
                        if K != T.full:
                            return False, f"proper subgroup at minimal order for {G.name}, A={A}"
                        chi = dual_group(T, A).kchars()[cid]
                        if find_pair_isomorphism((T, chi), (b.group, b.phi)) is None:
                            return False, f"two minimal pairs for {G.name}, A={A}"
            # the minimal order is attained: E at a catalog copy of beta is nonzero,
            # and there it is spanned by the Out-orbit of the minimal pair
            T = next(T for T in groups if T.order == k and find_isomorphism(T, b.group) is not None)
            keys = E[(j, T.name)]
            if not keys:
                return False, f"E of {G.name} vanishes at the order of beta, A={A}"
            if bp[j]:
                orbit = {c.id for c in aut_orbit(G, Phi)}
                if {cid for _, cid in E[(j, G.name)]} != orbit or any(K != G.full for K, _ in E[(j, G.name)]):
                    return False, f"E({G.name}) is not the Out-orbit, A={A}"
            minimal += 1
    return True, f"{mono} order relations, {conv} converse checks, {minimal} minimal pairs"


CRITERIA = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
]


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, report):
    ok, detail = CRITERIA[n - 1]()
    report(n, ok, detail)


if __name__ == "__main__":
    failed = 0
    for n, crit in enumerate(CRITERIA, 1):
        ok, detail = crit()
        failed += not ok
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  ({detail})", flush=True)
    sys.exit(1 if failed else 0)
