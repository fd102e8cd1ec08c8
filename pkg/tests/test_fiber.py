import math
from fractions import Fraction

import pytest

from fiberburnside.fiber import (
    FiberGroup,
    MU_MODULUS,
    char_push_quotient,
    dual_group,
    o_subgroup,
    parse_fiber,
    perp,
    push_through,
    zeta_iso,
)
from fiberburnside.groups import GroupError, automorphisms, bits, build_group

from oracles import homs_to_cyclic


@pytest.mark.parametrize(
    "text,factors",
    [("1", ()), ("C2", (2,)), ("C6", (6,)), ("C2xC3", (6,)), ("C2xC4", (2, 4)), ("C2^3", (2, 2, 2))],
)
def test_parse_fiber(text, factors):
    A = parse_fiber(text)
    assert A.factors == factors
    assert parse_fiber(str(A)) == A


def test_parse_fiber_rejects_garbage():
    with pytest.raises((GroupError, ValueError)):
        parse_fiber("Z7")


def test_mu_modulus_covers_element_orders():
    for n in range(1, 65):
        assert MU_MODULUS % n == 0


@pytest.mark.parametrize("gname", ["C4", "C6", "S3", "C2xC2", "D8", "Q8", "A4"])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_dual_order_matches_brute_force(gname, n):
    G = build_group(gname)
    A = parse_fiber(f"C{n}" if n > 1 else "1")
    for U in G.subgroups():
        D = dual_group(G, A, U)
        brute = homs_to_cyclic(G.table, frozenset(bits(U)), n)
        assert len(D) == len(brute)
        ours = {tuple(v[x] for x in bits(U)) for v in D.elements}
        assert ours == {tuple(f[x] for x in bits(U)) for f in brute}


def test_dual_examples():
    assert len(dual_group(build_group("S3"), "C2")) == 2
    assert len(dual_group(build_group("C3"), "C2")) == 1
    assert len(dual_group(build_group("C2xC4"), "C2xC4")) == 32


def test_dual_trivial_first_and_decomposition():
    D = dual_group(build_group("C2xC4"), "C2xC4")
    assert all(a == 0 for a in D.elements[0])
    assert math.prod(D.gen_orders) == len(D)
    assert list(D.gen_orders) == sorted(D.gen_orders)
    assert len(D.kchars()) == len(D)
    assert D.kchars()[0].is_trivial_on(range(len(D)))


def test_kchar_is_a_character():
    D = dual_group(build_group("C2xC4"), "C4")
    for chi in D.kchars():
        for i in range(len(D)):
            for j in range(len(D)):
                assert chi(D.mul(i, j)) == (chi(i) + chi(j)) % 1


def test_perp_sizes():
    G = build_group("C2xC2")
    D = dual_group(G, "C2")
    for U in G.subgroups():
        assert len(perp(D, U)) * len(bits(U)) == 4


def test_o_subgroup_and_zeta():
    G = build_group("C4")
    assert sorted(bits(o_subgroup(G, "C2"))) == [0, 2]
    z = zeta_iso(G, "C2")
    assert len(z) == 2
    S3 = build_group("S3")
    assert len(bits(o_subgroup(S3, "C2"))) == 3


def test_push_through_automorphism_is_an_action():
    G = build_group("C2xC2")
    D = dual_group(G, "C2")
    auts = automorphisms(G)
    for chi in D.kchars():
        for f in auts:
            for g in auts:
                assert push_through(push_through(chi, g), f) == push_through(chi, f.compose(g))


def test_quotient_character():
    G = build_group("C2xC2")
    D = dual_group(G, "C2")
    for chi in D.kchars():
        for N in G.normal_subgroups():
            chiN = char_push_quotient(chi, N)
            assert len(chiN.dual) == len(perp(D, N))
            # Phi_N agrees with Phi on characters trivial on N
            q = G.quotient(N)
            for i in perp(D, N):
                lam = D.elements[i]
                vals = [0] * q.group.order
                for g in range(G.order):
                    vals[q.projection.images[g]] = lam[g]
                assert chiN(chiN.dual.index[tuple(vals)]) == chi(i)


def test_fiber_arithmetic():
    A = FiberGroup((2, 4))
    for a in range(math.prod(A.factors)):
        assert A.add(a, A.neg(a)) == 0
    assert parse_fiber("mu").to_fraction(MU_MODULUS // 2) == Fraction(1, 2)
