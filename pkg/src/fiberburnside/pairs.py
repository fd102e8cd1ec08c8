"""Deflation numbers, B^A-pairs, the order relation on pairs and E_{(G,Phi)}.

A pair (G, Phi) is a finite group with a character Phi of its dual G*; here
Phi is a KChar whose dual is the full dual group of G.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bisets import (
    act,
    biset_ring,
    compose,
    defl,
    eta_condition,
    extend_char,
    stabilizer_data,
    to_biset,
    from_biset,
    BisetElement,
)
from .cyclo import root_of_unity
from .fbring import (
    Coeff,
    FBRElement,
    OrbitRep,
    XPair,
    _is_zero,
    burnside_ring,
    idempotent,
    normalize_coeff,
    species,
)
from .fiber import KChar, char_push_quotient, dual_group, perp, push_through
from .groups import FiniteGroup, GroupError, GroupHom, automorphisms, bits, isomorphisms, popcount

__all__ = [
    "PairClass",
    "m_constant",
    "m_table",
    "deflate_idempotent",
    "is_bpair",
    "find_pair_isomorphism",
    "pair_leq",
    "beta",
    "m_via_sigma",
    "sigma_set",
    "evaluate_E",
    "aut_orbit",
    "double_product",
    "quotient_pair",
]


def _check_full(G: FiniteGroup, Phi: KChar) -> None:
    D = Phi.dual
    if D.group is not G or D.mask != G.full:
        raise GroupError("Phi must be a character of the full dual group of G")


def _fingerprint(G: FiniteGroup, Phi: KChar) -> tuple:
    return (G.order, G.exponent, tuple(sorted(G.element_orders)), len(Phi.dual), Phi.fingerprint())


@dataclass(eq=False)
class PairClass:
    """The isomorphism class [G, Phi] of a pair, held through a representative."""

    group: FiniteGroup
    phi: KChar
    fingerprint: tuple = field(init=False)

    def __post_init__(self):
        _check_full(self.group, self.phi)
        self.fingerprint = _fingerprint(self.group, self.phi)

    def __eq__(self, other):
        if not isinstance(other, PairClass):
            return NotImplemented
        if self.fingerprint != other.fingerprint:
            return False
        return find_pair_isomorphism((self.group, self.phi), (other.group, other.phi)) is not None

    def __hash__(self):
        return hash(self.fingerprint)

    @property
    def label(self) -> str:
        return f"{self.group.name}|{phi_label(self.phi)}"

    def __repr__(self):
        return f"[{self.label}]"


def phi_label(phi: KChar) -> str:
    """Generator images of Phi as a compact string, e.g. "t=(0,1/2)"."""
    return "t=(" + ",".join(str(x) for x in phi.t) + ")"


def quotient_pair(G: FiniteGroup, Phi: KChar, N: int) -> tuple[FiniteGroup, KChar]:
    """(G/N, Phi_N)."""
    q = G.quotient(N)
    return q.group, char_push_quotient(Phi, N)


# ---------------------------------------------------------------------------
# deflation numbers


def _require_normal(G: FiniteGroup, N: int) -> None:
    if not G.is_subgroup(N) or not G.is_normal(N):
        raise GroupError("N must be a normal subgroup")


def m_constant(G: FiniteGroup, Phi: KChar, N: int) -> Fraction:
    """m^N_{(G,Phi)} from the Moebius closed formula.

    (|(G/N)*| / (|G| |G*|)) sum_{K: KN = G, Phi|K-perp = 1} |K| |K-perp| mu(K, G)
    """
    _check_full(G, Phi)
    _require_normal(G, N)
    D = Phi.dual
    total = 0
    for K in G.subgroups():
        if G.product_mask(K, N) != G.full:
            continue
        mu = G.mobius(K, G.full)
        if not mu:
            continue
        kp = perp(D, K)
        if not Phi.is_trivial_on(kp):
            continue
        total += popcount(K) * len(kp) * mu
    return Fraction(len(perp(D, N)) * total, G.order * len(D))


def m_table(G: FiniteGroup, Phi: KChar) -> dict[int, Fraction]:
    """All m^N_{(G,Phi)}, keyed by normal subgroup mask."""
    return {N: m_constant(G, Phi, N) for N in G.normal_subgroups()}


def deflate_idempotent(G: FiniteGroup, Phi: KChar, N: int) -> tuple[Fraction, XPair]:
    """Deflate e^G_{(G,Phi)} to G/N and read off the scalar in front of e_{(G/N,Phi_N)}."""
    _check_full(G, Phi)
    _require_normal(G, N)
    A = Phi.dual.fiber
    e = idempotent(G, A, G.full, Phi)
    d = act(defl(G, N, A), e, method="closed")
    Q, PhiN = quotient_pair(G, Phi, N)
    target = XPair(Q.full, PhiN)
    s = species(d, target)
    if d != idempotent(Q, A, Q.full, PhiN).scale(s):
        raise AssertionError("deflated idempotent is not proportional to e_(G/N,Phi_N)")
    s = normalize_coeff(s)
    if not isinstance(s, Fraction):
        raise AssertionError("deflation scalar is not rational")
    return s, target


def sigma_set(G: FiniteGroup, A, K: int, M: int, N: int) -> tuple[int, ...]:
    """Sigma^K_{M,N}: indices phi in G* trivial on K cap M cap N whose
    restriction to K agrees with (alpha + beta)|_K for some alpha in M-perp,
    beta in N-perp (a character of (G/M) x (G/N) evaluated at (kM, kN))."""
    D = dual_group(G, A)
    add = D.fiber.add
    ks = bits(K)
    reach = set()
    for a in perp(D, M):
        va = D.elements[a]
        for b in perp(D, N):
            vb = D.elements[b]
            reach.add(tuple(add(va[k], vb[k]) for k in ks))
    KMN = K & M & N
    out = []
    for i in perp(D, KMN):
        v = D.elements[i]
        if tuple(v[k] for k in ks) in reach:
            out.append(i)
    return tuple(out)


def m_via_sigma(G: FiniteGroup, Phi: KChar, M: int, N: int) -> Fraction:
    """m^M_{(G,Phi)} through the Sigma^K_{M,N} formula, using m-values of G/N."""
    _check_full(G, Phi)
    _require_normal(G, M)
    _require_normal(G, N)
    D = Phi.dual
    A = D.fiber
    q = G.quotient(N)
    Q, PhiN = quotient_pair(G, Phi, N)
    proj = q.projection
    total = Fraction(0)
    for K in G.subgroups():
        if G.product_mask(K, N) != G.full or G.product_mask(K, M) != G.full:
            continue
        mu = G.mobius(K, G.full)
        if not mu or not Phi.is_trivial_on(perp(D, K)):
            continue
        sig = len(sigma_set(G, A, K, M, N))
        inner = m_constant(Q, PhiN, proj.image_mask(K & M))
        total += popcount(K) * mu * sig * inner
    return total / (G.order * len(D))


# ---------------------------------------------------------------------------
# B^A-pairs and isomorphisms of pairs


def is_bpair(G: FiniteGroup, Phi: KChar, strict: bool = False) -> bool:
    """Whether m^N_{(G,Phi)} = 0 for all nontrivial normal N.

    By transitivity of m it suffices to test minimal normal subgroups;
    strict=True tests all of them.
    """
    _check_full(G, Phi)
    if strict:
        Ns = [N for N in G.normal_subgroups() if N != 1]
    else:
        Ns = G.minimal_normal_subgroups()
    return all(m_constant(G, Phi, N) == 0 for N in Ns)


def find_pair_isomorphism(P: tuple[FiniteGroup, KChar], Q: tuple[FiniteGroup, KChar]) -> GroupHom | None:
    """An isomorphism f: H -> G with Psi o f* = Phi, for P = (G, Phi), Q = (H, Psi)."""
    G, Phi = P
    H, Psi = Q
    if _fingerprint(G, Phi) != _fingerprint(H, Psi):
        return None
    DG = Phi.dual
    DH = Psi.dual
    gens = DG.gens
    m = H.order
    for f in isomorphisms(H, G):
        ok = True
        # Psi o f* on the generators of G* first, full check afterwards
        for i in gens:
            lam = DG.elements[i]
            pulled = tuple(lam[f.images[h]] for h in range(m))
            if Psi.values[DH.index[pulled]] != Phi.values[i]:
                ok = False
                break
        if ok:
            if push_through(Psi, f) != Phi:
                raise AssertionError("pair isomorphism check on generators is inconsistent")
            return f
    return None


def pair_leq(small: tuple[FiniteGroup, KChar], big: tuple[FiniteGroup, KChar]) -> int | None:
    """A normal N of G with (G/N, Phi_N) isomorphic to (H, Psi), where
    small = (H, Psi) and big = (G, Phi); None if (H, Psi) is not below."""
    H, Psi = small
    G, Phi = big
    if G.order % H.order:
        return None
    for N in G.normal_subgroups():
        if G.order != H.order * popcount(N):
            continue
        if find_pair_isomorphism((H, Psi), quotient_pair(G, Phi, N)) is not None:
            return N
    return None


def beta(G: FiniteGroup, Phi: KChar) -> tuple[PairClass, int]:
    """The class of (G/N, Phi_N) for N with m^N != 0 and the quotient a B^A-pair.

    Returns the class together with the first witness N (largest N first).
    """
    _check_full(G, Phi)
    found: list[tuple[PairClass, int]] = []
    for N in sorted(G.normal_subgroups(), key=lambda n: (-popcount(n), n)):
        if m_constant(G, Phi, N) == 0:
            continue
        Q, PhiN = quotient_pair(G, Phi, N)
        if is_bpair(Q, PhiN):
            found.append((PairClass(Q, PhiN), N))
    if not found:
        raise AssertionError("no minimal pair found; N = 1 should always qualify")
    first = found[0][0]
    for c, _ in found[1:]:
        if c != first:
            raise AssertionError(f"two non-isomorphic candidates for beta: {first} and {c}")
    return found[0]


def aut_orbit(G: FiniteGroup, Phi: KChar) -> tuple[KChar, ...]:
    """The orbit of Phi under Aut(G) acting by Phi -> Phi o f*.

    Inner automorphisms fix every character of G*, so this is the Out(G)-orbit.
    """
    _check_full(G, Phi)
    seen = {}
    for f in automorphisms(G):
        chi = push_through(Phi, f)
        seen.setdefault(chi.id, chi)
    return tuple(seen[k] for k in sorted(seen))


# ---------------------------------------------------------------------------
# the subfunctor E_{(G,Phi)}


def evaluate_E(pair: tuple[FiniteGroup, KChar], H: FiniteGroup) -> frozenset[tuple[int, int]]:
    """E_{(G,Phi)}(H) as the set of (subgroup, char id) keys of H-pairs whose
    idempotents it contains.

    Every standard basis element x of B^A(H, G) is applied to e_{(G,Phi)};
    E(H) is the span of the results, an ideal spanned by idempotents, so a
    pair of H belongs to it iff some x . e has nonzero species there.
    """
    G, Phi = pair
    _check_full(G, Phi)
    A = Phi.dual.fiber
    RH = burnside_ring(H, A)
    xps = RH.xpairs()
    keys = [RH.xpair_key(p.mask, p.phi) for p in xps]
    e = to_biset(idempotent(G, A, G.full, Phi))
    ring = biset_ring(H, G, A)
    found: set[tuple[int, int]] = set()
    for b in ring.basis:
        if len(found) == len(xps):
            break
        x = BisetElement(H, G, ring.basis_element(b))
        y = from_biset(compose(x, e))
        if y.is_zero():
            continue
        for p, k in zip(xps, keys):
            if k not in found and not _is_zero(species(y, p)):
                found.add(k)
    return frozenset(found)


def double_product(G: FiniteGroup, H: FiniteGroup, rep: OrbitRep, Phi: KChar, Psi: KChar) -> tuple[FBRElement, Coeff]:
    """Both sides of the double product law for [U, phi] in B^A(G, H).

    Returns (e_Phi . ([U,phi] ._H e_Psi), predicted scalar); the law says the
    first equals the scalar times e^G_{(G,Phi)}. The scalar is
    Phi(alpha) Psi(beta) m^{k2(U)}_{(H,Psi)} when p1(U) = G, p2(U) = H, phi
    extends to alpha x beta on G x H and the eta condition holds; else 0.
    """
    A = Phi.dual.fiber
    U, vals = rep
    eG = idempotent(G, A, G.full, Phi)
    eH = idempotent(H, A, H.full, Psi)
    ring = biset_ring(G, H, A)
    x = BisetElement(G, H, ring.element({ring.locate(U, tuple(vals)): 1}))
    lhs = eG * from_biset(compose(x, to_biset(eH)))
    sd = stabilizer_data(G, H, A, U, vals)
    scalar: Coeff = Fraction(0)
    if sd.p1 == G.full and sd.p2 == H.full:
        ext = extend_char(G, H, A, U, vals)
        if ext is not None and eta_condition(G, H, A, U, vals, Phi, Psi):
            m = m_constant(H, Psi, sd.k2)
            if m:
                a, b = ext
                scalar = normalize_coeff(root_of_unity(Phi.values[a] + Psi.values[b]) * m)
    return lhs, scalar
