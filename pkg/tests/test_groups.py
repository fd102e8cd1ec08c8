import pytest

from fiberburnside.groups import (
    GroupError,
    OrderCapExceeded,
    automorphisms,
    bits,
    build_group,
    catalog,
    direct_product,
    find_isomorphism,
    order_cap,
    outer_classes,
)

from oracles import all_subgroups, mobius

SMALL = ["C1", "C2", "C4", "C2xC2", "S3", "C6", "D8", "Q8", "C2xC4", "A4", "D10", "C3xC3", "D12"]


@pytest.mark.parametrize("name", SMALL)
def test_subgroups_match_brute_force(name):
    G = build_group(name)
    ours = {frozenset(bits(m)) for m in G.subgroups()}
    assert ours == set(all_subgroups(G.table))
    assert len(G.subgroups()) == len(ours)


@pytest.mark.parametrize("name", ["C4", "S3", "C2xC2", "D8", "Q8", "A4"])
def test_mobius_matches_recursion(name):
    G = build_group(name)
    subs = all_subgroups(G.table)
    full = frozenset(range(G.order))
    for K in G.subgroups():
        assert G.mobius(K, G.full) == mobius(subs, frozenset(bits(K)), full)


def test_mobius_known_values():
    S3 = build_group("S3")
    assert S3.mobius(1, S3.full) == 3
    V = build_group("C2xC2")
    assert V.mobius(1, V.full) == 2
    C4 = build_group("C4")
    assert C4.mobius(1, C4.full) == 0


@pytest.mark.parametrize(
    "name,aut,out", [("C2", 1, 1), ("C2xC2", 6, 6), ("S3", 6, 1), ("D8", 8, 2), ("Q8", 24, 6), ("C2^3", 168, 168)]
)
def test_automorphism_counts(name, aut, out):
    G = build_group(name)
    assert len(automorphisms(G)) == aut
    assert len(outer_classes(G)) == out


def test_normal_subgroups_and_quotients():
    D8 = build_group("D8")
    normals = D8.normal_subgroups()
    # 1, Z, two Klein fours, C4, D8
    assert sorted(len(bits(N)) for N in normals) == [1, 2, 4, 4, 4, 8]
    Z = next(N for N in normals if len(bits(N)) == 2)
    Q = D8.quotient(Z).group
    assert find_isomorphism(Q, build_group("C2xC2")) is not None


def test_catalog_sizes_by_order():
    counts = {}
    for G in catalog(15):
        counts[G.order] = counts.get(G.order, 0) + 1
    # number of groups of each order up to 15
    expected = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1}
    assert counts == expected


def test_catalog_entries_pairwise_non_isomorphic():
    gs = catalog(15)
    for i, G in enumerate(gs):
        for H in gs[i + 1:]:
            if G.order == H.order:
                assert find_isomorphism(G, H) is None


def test_direct_product_indexing():
    C2, C3 = build_group("C2"), build_group("C3")
    P = direct_product(C2, C3)
    # (g, h) -> g*|H| + h
    assert P.table[1 * 3 + 0][0 * 3 + 1] == 1 * 3 + 1
    assert find_isomorphism(P, build_group("C6")) is not None


def test_double_cosets_partition():
    S3 = build_group("S3")
    for A in S3.subgroups():
        for B in S3.subgroups():
            seen = set()
            for g in S3.double_cosets(A, B):
                dc = {S3.table[S3.table[a][g]][b] for a in bits(A) for b in bits(B)}
                assert not dc & seen
                seen |= dc
            assert seen == set(range(6))


def test_bad_inputs():
    with pytest.raises(GroupError):
        build_group("Foo7")
    with pytest.raises(GroupError):
        build_group({"table": [[0, 1], [1, 1]]})
    with pytest.raises(GroupError):
        catalog(16)


def test_order_cap():
    with order_cap(8):
        with pytest.raises(OrderCapExceeded):
            automorphisms(build_group("C3xC3xC2"))
