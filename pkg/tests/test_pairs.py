from fractions import Fraction

import pytest

from fiberburnside.bisets import act, defl
from fiberburnside.fbring import XPair, burnside_ring, idempotent, species
from fiberburnside.fiber import dual_group, push_through
from fiberburnside.groups import GroupError, automorphisms, bits, build_group, catalog
from fiberburnside.pairs import (
    PairClass,
    aut_orbit,
    beta,
    deflate_idempotent,
    evaluate_E,
    find_pair_isomorphism,
    is_bpair,
    m_constant,
    m_table,
    m_via_sigma,
    pair_leq,
    quotient_pair,
)

from oracles import bouc_m


def chars(G, A):
    return dual_group(G, A).kchars()


def test_m_examples():
    C2 = build_group("C2")
    Phi0, Phi1 = chars(C2, "C2")
    assert m_constant(C2, Phi0, C2.full) == 0
    assert m_constant(C2, Phi1, C2.full) == Fraction(1, 2)
    V = build_group("C2xC2")
    (triv,) = chars(V, "1")
    for N in V.normal_subgroups():
        if len(bits(N)) == 2:
            assert m_constant(V, triv, N) == 0


@pytest.mark.parametrize("gname", ["C2", "C3", "C4", "C2xC2", "S3", "D8", "Q8", "C6", "A4", "C3xC3", "D10", "C9"])
def test_trivial_fiber_reduces_to_classical_formula(gname):
    G = build_group(gname)
    (triv,) = chars(G, "1")
    for N in G.normal_subgroups():
        assert m_constant(G, triv, N) == bouc_m(G.table, frozenset(bits(N)))


@pytest.mark.parametrize("gname", ["C1", "C2", "S3", "D8", "C2xC2"])
@pytest.mark.parametrize("A", ["1", "C2", "C4", "mu"])
def test_m_of_trivial_subgroup_is_one(gname, A):
    G = build_group(gname)
    for Phi in chars(G, A):
        assert m_table(G, Phi)[1] == 1


@pytest.mark.parametrize("gname,A", [("C2", "C2"), ("C4", "C2"), ("S3", "C2"), ("C2xC2", "C2"), ("C6", "C3")])
def test_deflation_by_composition_agrees(gname, A):
    """Deflate through the general tensor product rather than the closed form."""
    G = build_group(gname)
    for Phi in chars(G, A):
        e = idempotent(G, A, G.full, Phi)
        for N in G.normal_subgroups():
            d = act(defl(G, N, A), e, "compose")
            Q, PhiN = quotient_pair(G, Phi, N)
            s = species(d, XPair(Q.full, PhiN))
            assert s == m_constant(G, Phi, N)
            assert deflate_idempotent(G, Phi, N)[0] == s


def test_deflate_examples():
    C2 = build_group("C2")
    Phi0, Phi1 = chars(C2, "C2")
    s, target = deflate_idempotent(C2, Phi1, C2.full)
    assert s == Fraction(1, 2) and target.mask == 1
    assert deflate_idempotent(C2, Phi0, C2.full)[0] == 0
    assert deflate_idempotent(C2, Phi1, 1)[0] == 1


def test_m_requires_normal_subgroup():
    S3 = build_group("S3")
    nonnormal = next(H for H in S3.subgroups() if len(bits(H)) == 2)
    with pytest.raises(GroupError):
        m_constant(S3, chars(S3, "C2")[0], nonnormal)


def test_bpair_examples():
    C1 = build_group("C1")
    assert is_bpair(C1, chars(C1, "C2")[0])
    C2 = build_group("C2")
    Phi0, Phi1 = chars(C2, "C2")
    assert is_bpair(C2, Phi0) and not is_bpair(C2, Phi1)
    C33 = build_group("C3xC3")
    (triv,) = chars(C33, "C2")
    assert is_bpair(C33, triv)
    assert all(m_constant(C33, triv, N) == 0 for N in C33.normal_subgroups() if len(bits(N)) == 3)


@pytest.mark.parametrize("G", catalog(12), ids=lambda g: g.name)
def test_minimal_normal_test_matches_strict(G):
    for A in ["1", "C2"]:
        for Phi in chars(G, A):
            assert is_bpair(G, Phi) == is_bpair(G, Phi, strict=True)


def test_pair_isomorphism_examples():
    C2 = build_group("C2")
    Phi0, Phi1 = chars(C2, "C2")
    assert find_pair_isomorphism((C2, Phi0), (C2, Phi0)) is not None
    assert find_pair_isomorphism((C2, Phi0), (C2, Phi1)) is None
    V = build_group("C2xC2")
    nontrivial = [Phi for Phi in chars(V, "C2") if any(Phi.values)]
    assert len(nontrivial) == 3
    for a in nontrivial:
        for b in nontrivial:
            f = find_pair_isomorphism((V, a), (V, b))
            assert f is not None
            assert push_through(b, f) == a


def test_pair_leq_examples():
    C1 = build_group("C1")
    (one,) = chars(C1, "C2")
    for gname in ["C2", "S3", "C2xC2"]:
        G = build_group(gname)
        for Phi in chars(G, "C2"):
            assert pair_leq((C1, one), (G, Phi)) == G.full
            assert pair_leq((G, Phi), (G, Phi)) == 1
    C2 = build_group("C2")
    Phi0 = chars(C2, "C2")[0]
    V = build_group("C2xC2")
    # a character of V* that is trivial on the perp of some order-2 subgroup K
    for Phi in chars(V, "C2"):
        N = pair_leq((C2, Phi0), (V, Phi))
        if N is not None:
            Q, PhiN = quotient_pair(V, Phi, N)
            assert not any(PhiN.values)


def test_leq_is_a_partial_order_on_classes():
    A = "C2"
    pcs = []
    for G in catalog(8):
        for Phi in chars(G, A):
            pc = PairClass(G, Phi)
            if not any(pc == old for old in pcs):
                pcs.append(pc)
    rel = {(i, j): pair_leq((a.group, a.phi), (b.group, b.phi)) is not None for i, a in enumerate(pcs) for j, b in enumerate(pcs)}
    n = len(pcs)
    for i in range(n):
        assert rel[(i, i)]
        for j in range(n):
            if i != j:
                assert not (rel[(i, j)] and rel[(j, i)])
            for k in range(n):
                if rel[(i, j)] and rel[(j, k)]:
                    assert rel[(i, k)]


def test_beta_examples():
    C2 = build_group("C2")
    Phi0, Phi1 = chars(C2, "C2")
    pc, N = beta(C2, Phi0)
    assert N == 1 and pc == PairClass(C2, Phi0)
    pc, N = beta(C2, Phi1)
    assert N == C2.full and pc.group.order == 1
    C3 = build_group("C3")
    pc, N = beta(C3, chars(C3, "C2")[0])
    assert pc.group.order == 1
    assert m_constant(C3, chars(C3, "C2")[0], C3.full) == Fraction(2, 3)


@pytest.mark.parametrize("G", catalog(8), ids=lambda g: g.name)
@pytest.mark.parametrize("A", ["1", "C2", "C4"])
def test_sigma_formula(G, A):
    for Phi in chars(G, A):
        for M in G.normal_subgroups():
            for N in G.normal_subgroups():
                assert m_via_sigma(G, Phi, M, N) == m_constant(G, Phi, M)


def test_sigma_example_c2():
    C2 = build_group("C2")
    assert m_via_sigma(C2, chars(C2, "C2")[0], C2.full, C2.full) == 0


def test_evaluate_E_examples():
    C1 = build_group("C1")
    (one,) = chars(C1, "C2")
    for gname in ["C2", "S3", "C4"]:
        H = build_group(gname)
        R = burnside_ring(H, "C2")
        everything = {R.xpair_key(p.mask, p.phi) for p in R.xpairs()}
        assert evaluate_E((C1, one), H) == everything
    C2 = build_group("C2")
    Phi0, Phi1 = chars(C2, "C2")
    E = evaluate_E((C2, Phi0), C2)
    assert (C2.full, Phi0.id) in E and (C2.full, Phi1.id) not in E
    # a B^A-pair generates nothing on smaller groups
    assert evaluate_E((C2, Phi0), C1) == frozenset()


@pytest.mark.parametrize("gname", ["C2xC2", "S3", "C4"])
def test_E_is_automorphism_invariant(gname):
    H = build_group(gname)
    R = burnside_ring(H, "C2")
    C2 = build_group("C2")
    for Phi in chars(C2, "C2"):
        E = evaluate_E((C2, Phi), H)
        for f in automorphisms(H):
            for key in E:
                K, cid = key
                chi = dual_group(H, "C2", K).kchars()[cid]
                fK = f.image_mask(K)
                assert R.xpair_key(fK, push_through(chi, f, fK)) in E


def test_aut_orbit_sizes():
    V = build_group("C2xC2")
    # GL(2, 2) fixes the trivial character and permutes the other three
    sizes = sorted(len(aut_orbit(V, Phi)) for Phi in chars(V, "C2"))
    assert sizes == [1, 3, 3, 3]
    S3 = build_group("S3")
    assert [len(aut_orbit(S3, Phi)) for Phi in chars(S3, "C2")] == [1, 1]
