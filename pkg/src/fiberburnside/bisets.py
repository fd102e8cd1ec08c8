"""Fibered bisets: B^A(G, H) realized as B^A(G x H).

Elements of G x H are indexed by g*|H| + h. A basis element [U, phi] of
B^A(G, H) is an orbit of the product group; composition uses the
double-coset tensor formula, and the six elementary bisets act on B^A(-)
through both closed forms and composition with B^A(H, 1) = B^A(H).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence

from .cyclo import Cyclotomic, root_of_unity
from .fbring import (
    BurnsideRing,
    Coeff,
    FBRElement,
    OrbitRep,
    XPair,
    burnside_ring,
    idempotent_of,
    normalize_coeff,
)
from .fiber import (
    FiberGroup,
    KChar,
    char_push_quotient,
    conjugate_values,
    dual_group,
    parse_fiber,
    push_through,
    restrict_values,
)
from .groups import FiniteGroup, GroupError, GroupHom, bits, build_group, direct_product

__all__ = [
    "BisetElement",
    "StabilizerData",
    "biset_ring",
    "stabilizer_data",
    "compose",
    "elementary",
    "res",
    "ind",
    "inf",
    "defl",
    "iso",
    "tw",
    "delta",
    "act",
    "to_biset",
    "from_biset",
    "canonical_decomposition",
    "CanonicalDecomposition",
    "extend_char",
    "act_on_idempotent",
    "eta_condition",
]


def _trivial_group() -> FiniteGroup:
    return build_group("C1")


def biset_ring(G: FiniteGroup, H: FiniteGroup, A) -> BurnsideRing:
    return burnside_ring(direct_product(G, H), A)


class BisetElement:
    """An element of B^A(G, H): a left group, a right group and a body in B^A(G x H).

    ``kind``/``data`` tag the six elementary bisets so that ``act`` can use
    closed forms; arithmetic drops the tag.
    """

    __slots__ = ("left", "right", "body", "kind", "data")

    def __init__(self, left: FiniteGroup, right: FiniteGroup, body: FBRElement, kind: str | None = None, data=None):
        if body.group is not direct_product(left, right):
            raise GroupError("body does not live on the product of left and right")
        self.left = left
        self.right = right
        self.body = body
        self.kind = kind
        self.data = data

    @property
    def fiber(self) -> FiberGroup:
        return self.body.fiber

    def __repr__(self):
        tag = f" {self.kind}" if self.kind else ""
        return f"BisetElement({self.left.name} x {self.right.name}{tag}: {self.body!r})"

    def _same(self, other: "BisetElement") -> None:
        if other.left is not self.left or other.right is not self.right:
            raise GroupError("biset elements for different group pairs")

    def __add__(self, other: "BisetElement") -> "BisetElement":
        self._same(other)
        return BisetElement(self.left, self.right, self.body + other.body)

    def __sub__(self, other: "BisetElement") -> "BisetElement":
        self._same(other)
        return BisetElement(self.left, self.right, self.body - other.body)

    def __neg__(self):
        return BisetElement(self.left, self.right, -self.body)

    def scale(self, s) -> "BisetElement":
        return BisetElement(self.left, self.right, self.body.scale(s))

    def __mul__(self, other):
        if isinstance(other, BisetElement):
            return compose(self, other)
        if isinstance(other, FBRElement):
            return act(self, other)
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, BisetElement):
            return NotImplemented
        return other.left is self.left and other.right is self.right and self.body == other.body

    def __hash__(self):
        return hash(self.body)

    def terms(self):
        return self.body.items()


@dataclass(frozen=True)
class StabilizerData:
    """Projections, kernels and the kernel characters of (U, phi) <= G x H.

    phi1(a) = phi(a, 1) on k1 and phi2(b) = phi(1, b)^-1 on k2 (value
    tuples over G and H). ``eta`` sends h in p2 to some g with (g, h) in U,
    which realizes the isomorphism p2/k2 -> p1/k1.
    """

    left: FiniteGroup
    right: FiniteGroup
    p1: int
    p2: int
    k1: int
    k2: int
    phi1: tuple[int, ...]
    phi2: tuple[int, ...]
    eta: Mapping[int, int]

    def eta_hom_values(self, lam: Sequence[int]) -> tuple[int, ...]:
        """lambda o eta on p2, for lambda a homomorphism on p1 trivial on k1."""
        out = [0] * self.right.order
        for h, g in self.eta.items():
            out[h] = lam[g]
        return tuple(out)


def stabilizer_data(G: FiniteGroup, H: FiniteGroup, A, U: int, vals: Sequence[int]) -> StabilizerData:
    A = parse_fiber(A)
    m = H.order
    p1 = p2 = k1 = k2 = 0
    eta: dict[int, int] = {}
    phi1 = [0] * G.order
    phi2 = [0] * m
    for x in bits(U):
        g, h = divmod(x, m)
        p1 |= 1 << g
        p2 |= 1 << h
        if h == 0:
            k1 |= 1 << g
            phi1[g] = vals[x]
        if g == 0:
            k2 |= 1 << h
            phi2[h] = A.neg(vals[x])
        if h not in eta:
            eta[h] = g
    return StabilizerData(G, H, p1, p2, k1, k2, tuple(phi1), tuple(phi2), eta)


# ---------------------------------------------------------------------------
# composition


def _by_right(G: FiniteGroup, H: FiniteGroup, rep: OrbitRep) -> dict[int, list[tuple[int, int]]]:
    m = H.order
    out: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for x in bits(rep.mask):
        g, h = divmod(x, m)
        out[h].append((g, rep.vals[x]))
    return out


def _by_left(H: FiniteGroup, K: FiniteGroup, rep: OrbitRep) -> dict[int, list[tuple[int, int]]]:
    m = K.order
    out: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for x in bits(rep.mask):
        h, k = divmod(x, m)
        out[h].append((k, rep.vals[x]))
    return out


def _compose_basis(
    G: FiniteGroup, H: FiniteGroup, K: FiniteGroup, A: FiberGroup, a: OrbitRep, b: OrbitRep
) -> dict[OrbitRep, int]:
    target = biset_ring(G, K, A)
    cache = target.__dict__.setdefault("_compose_cache", {})
    key = (H, a, b)
    c = cache.get(key)
    if c is not None:
        return c
    mK = K.order
    add = A.add
    right = _by_right(G, H, a)
    left = _by_left(H, K, b)
    p2U = sum(1 << h for h in right)
    p1V = sum(1 << h for h in left)
    # phi(1, x) on k2(U) and psi(y, 1) on k1(V)
    k2U = {h: v for h, lst in right.items() for g, v in lst if g == 0}
    k1V = {h: v for h, lst in left.items() for k, v in lst if k == 0}
    inv = H.inv
    Hconj = H.conj
    out: dict[OrbitRep, int] = defaultdict(int)
    nG = G.order * mK
    for t in H.double_cosets(p2U, p1V):
        cinv = Hconj[inv[t]]  # x -> t^-1 x t
        ok = True
        for x, v in k2U.items():
            y = cinv[x]
            w = k1V.get(y)
            if w is not None and add(v, w) != 0:
                ok = False
                break
        if not ok:
            continue
        vals = [0] * nG
        mask = 0
        for h, gl in right.items():
            kl = left.get(cinv[h])
            if not kl:
                continue
            for g, va in gl:
                base = g * mK
                for k, vb in kl:
                    idx = base + k
                    v = add(va, vb)
                    if (mask >> idx) & 1:
                        if vals[idx] != v:
                            raise AssertionError("star character is not well defined")
                    else:
                        mask |= 1 << idx
                        vals[idx] = v
        out[target.locate(mask, tuple(vals))] += 1
    c = cache[key] = dict(out)
    return c


def compose(x: BisetElement, y: BisetElement) -> BisetElement:
    """x ._H y for x in B^A(G, H) and y in B^A(H, K)."""
    if x.right is not y.left:
        raise GroupError("middle groups do not match")
    if x.fiber != y.fiber:
        raise GroupError("fiber groups do not match")
    G, H, K = x.left, x.right, y.right
    A = x.fiber
    target = biset_ring(G, K, A)
    acc: dict[OrbitRep, Coeff] = {}
    for a, ca in x.body.terms.items():
        for b, cb in y.body.terms.items():
            c = ca * cb
            for r, n in _compose_basis(G, H, K, A, a, b).items():
                v = c * n
                acc[r] = acc[r] + v if r in acc else v
    return BisetElement(G, K, FBRElement(target, acc))


# ---------------------------------------------------------------------------
# B^A(G) as B^A(G, 1)


def to_biset(v: FBRElement) -> BisetElement:
    """The element v of B^A(G) viewed in B^A(G, 1)."""
    G = v.group
    one = _trivial_group()
    ring = biset_ring(G, one, v.fiber)
    return BisetElement(G, one, FBRElement(ring, {ring.locate(b.mask, b.vals): c for b, c in v.terms.items()}))


def from_biset(x: BisetElement) -> FBRElement:
    if x.right.order != 1:
        raise GroupError("only elements of B^A(G, 1) correspond to B^A(G)")
    ring = burnside_ring(x.left, x.fiber)
    return FBRElement(ring, {ring.locate(b.mask, b.vals): c for b, c in x.body.terms.items()})


# ---------------------------------------------------------------------------
# elementary bisets


def _graph_element(left: FiniteGroup, right: FiniteGroup, A, pairs, vals=None, kind=None, data=None) -> BisetElement:
    A = parse_fiber(A)
    ring = biset_ring(left, right, A)
    m = right.order
    mask = 0
    v = [0] * (left.order * m)
    for i, (g, h) in enumerate(pairs):
        idx = g * m + h
        mask |= 1 << idx
        if vals is not None:
            v[idx] = vals[i]
    prod = ring.group
    if not prod.is_subgroup(mask):
        raise AssertionError("graph is not a subgroup")
    return BisetElement(left, right, FBRElement(ring, {ring.locate(mask, tuple(v)): 1}), kind, data)


def res(G: FiniteGroup, H: int, A) -> BisetElement:
    """res^G_H in B^A(H, G); H is realized as G.subgroup_group(H)."""
    if not G.is_subgroup(H):
        raise GroupError("H is not a subgroup")
    Hg, emb = G.subgroup_group(H)
    return _graph_element(Hg, G, A, [(i, emb.images[i]) for i in range(Hg.order)], kind="res", data=(G, H))


def ind(G: FiniteGroup, H: int, A) -> BisetElement:
    """ind_H^G in B^A(G, H)."""
    if not G.is_subgroup(H):
        raise GroupError("H is not a subgroup")
    Hg, emb = G.subgroup_group(H)
    return _graph_element(G, Hg, A, [(emb.images[i], i) for i in range(Hg.order)], kind="ind", data=(G, H))


def inf(G: FiniteGroup, N: int, A) -> BisetElement:
    """inf_{G/N}^G in B^A(G, G/N)."""
    q = G.quotient(N)
    proj = q.projection.images
    return _graph_element(G, q.group, A, [(g, proj[g]) for g in range(G.order)], kind="inf", data=(G, N))


def defl(G: FiniteGroup, N: int, A) -> BisetElement:
    """def^G_{G/N} in B^A(G/N, G)."""
    q = G.quotient(N)
    proj = q.projection.images
    return _graph_element(q.group, G, A, [(proj[g], g) for g in range(G.order)], kind="def", data=(G, N))


def iso(f: GroupHom, A) -> BisetElement:
    """iso_f in B^A(G', G) for an isomorphism f: G -> G'."""
    if not f.is_bijective():
        raise GroupError("iso needs an isomorphism")
    G = f.source
    return _graph_element(f.target, G, A, [(f.images[g], g) for g in range(G.order)], kind="iso", data=(f,))


def tw(G: FiniteGroup, lam: Sequence[int], A) -> BisetElement:
    """tw_lambda = [Delta(G), Delta(lambda)] in B^A(G, G)."""
    A = parse_fiber(A)
    lam = tuple(lam)
    if lam not in dual_group(G, A).index:
        raise GroupError("lambda is not a homomorphism G -> A")
    return _graph_element(G, G, A, [(g, g) for g in range(G.order)], list(lam), kind="tw", data=(G, lam))


def delta(v: FBRElement) -> BisetElement:
    """Delta([U, phi]_G) = [Delta(U), Delta(phi)] in B^A(G, G)."""
    G = v.group
    ring = biset_ring(G, G, v.fiber)
    n = G.order
    acc: dict[OrbitRep, Coeff] = {}
    for b, c in v.terms.items():
        mask = 0
        vals = [0] * (n * n)
        for u in bits(b.mask):
            mask |= 1 << (u * n + u)
            vals[u * n + u] = b.vals[u]
        r = ring.locate(mask, tuple(vals))
        acc[r] = acc[r] + c if r in acc else c
    return BisetElement(G, G, FBRElement(ring, acc))


def elementary(kind: str, *args, fiber="1") -> BisetElement:
    """Dispatch to res/ind/inf/def/iso/tw by name."""
    table = {"res": res, "ind": ind, "inf": inf, "def": defl, "defl": defl, "tw": tw}
    if kind == "iso":
        return iso(args[0], fiber)
    if kind not in table:
        raise ValueError(f"unknown elementary biset {kind!r}")
    return table[kind](*args, fiber)


# ---------------------------------------------------------------------------
# action on B^A(-)


def _closed_form(x: BisetElement, v: FBRElement) -> FBRElement:
    kind, data = x.kind, x.data
    A = v.fiber
    add = A.add
    out_ring = burnside_ring(x.left, A)
    acc: dict[OrbitRep, Coeff] = {}

    def put(mask: int, vals: Sequence[int], c):
        r = out_ring.locate(mask, tuple(vals))
        acc[r] = acc[r] + c if r in acc else c

    if kind == "res":
        G, H = data
        Hg, emb = G.subgroup_group(H)
        pos = {e: i for i, e in enumerate(emb.images)}
        for (U, phi), c in v.terms.items():
            for g in G.double_cosets(H, U):
                gU = G.conjugate_mask(g, U)
                W = H & gU
                gphi = conjugate_values(G, g, phi, U)
                mask, vals = 0, [0] * Hg.order
                for w in bits(W):
                    mask |= 1 << pos[w]
                    vals[pos[w]] = gphi[w]
                put(mask, vals, c)
    elif kind == "ind":
        G, H = data
        Hg, emb = G.subgroup_group(H)
        for (V, psi), c in v.terms.items():
            mask, vals = 0, [0] * G.order
            for i in bits(V):
                mask |= 1 << emb.images[i]
                vals[emb.images[i]] = psi[i]
            put(mask, vals, c)
    elif kind == "inf":
        G, N = data
        proj = G.quotient(N).projection.images
        for (U, phi), c in v.terms.items():
            mask, vals = 0, [0] * G.order
            for g in range(G.order):
                if (U >> proj[g]) & 1:
                    mask |= 1 << g
                    vals[g] = phi[proj[g]]
            put(mask, vals, c)
    elif kind == "def":
        G, N = data
        q = G.quotient(N)
        proj = q.projection.images
        for (U, phi), c in v.terms.items():
            if any(phi[u] for u in bits(U & N)):
                continue
            mask, vals = 0, [0] * q.group.order
            for u in bits(U):
                mask |= 1 << proj[u]
                vals[proj[u]] = phi[u]
            put(mask, vals, c)
    elif kind == "iso":
        (f,) = data
        for (U, phi), c in v.terms.items():
            mask, vals = 0, [0] * f.target.order
            for u in bits(U):
                mask |= 1 << f.images[u]
                vals[f.images[u]] = phi[u]
            put(mask, vals, c)
    elif kind == "tw":
        G, lam = data
        for (U, phi), c in v.terms.items():
            vals = [add(lam[u], phi[u]) if (U >> u) & 1 else 0 for u in range(G.order)]
            put(U, vals, c)
    else:
        raise ValueError(f"no closed form for {kind!r}")
    return FBRElement(out_ring, acc)


def act(x: BisetElement, v: FBRElement, method: str = "auto") -> FBRElement:
    """The action B^A(G, H) x B^A(H) -> B^A(G).

    method: "closed" uses the elementary closed forms (x must be tagged),
    "compose" goes through x ._H v in B^A(G, 1), "auto" prefers closed forms.
    """
    if v.group is not x.right:
        raise GroupError("element does not live on the right-hand group")
    if v.fiber != x.fiber:
        raise GroupError("fiber groups do not match")
    if method not in ("auto", "closed", "compose"):
        raise ValueError(f"unknown method {method!r}")
    if method != "compose" and x.kind is not None:
        return _closed_form(x, v)
    if method == "closed":
        raise GroupError("no closed form for an untagged biset element")
    return from_biset(compose(x, to_biset(v)))


# ---------------------------------------------------------------------------
# canonical decomposition and characters extending phi


class CanonicalDecomposition(NamedTuple):
    """ind_P^G . inf_{P/K}^P . middle . def^Q_{Q/L} . res^H_Q."""

    ind: BisetElement
    inf: BisetElement
    middle: BisetElement
    defl: BisetElement
    res: BisetElement
    P: int
    Q: int
    K: int
    L: int

    def compose(self) -> BisetElement:
        left = compose(self.ind, self.inf)
        right = compose(self.defl, self.res)
        return compose(compose(left, self.middle), right)


def canonical_decomposition(G: FiniteGroup, H: FiniteGroup, A, rep: OrbitRep) -> CanonicalDecomposition:
    A = parse_fiber(A)
    U, vals = rep
    sd = stabilizer_data(G, H, A, U, vals)
    K = sum(1 << g for g in bits(sd.k1) if sd.phi1[g] == 0)
    L = sum(1 << h for h in bits(sd.k2) if sd.phi2[h] == 0)
    Pg, eP = G.subgroup_group(sd.p1)
    Qg, eQ = H.subgroup_group(sd.p2)
    posP = {e: i for i, e in enumerate(eP.images)}
    posQ = {e: i for i, e in enumerate(eQ.images)}
    Kp = sum(1 << posP[g] for g in bits(K))
    Lq = sum(1 << posQ[h] for h in bits(L))
    qP, qQ = Pg.quotient(Kp), Qg.quotient(Lq)
    PK, QL = qP.group, qQ.group
    m = H.order
    mid_ring = biset_ring(PK, QL, A)
    n = QL.order
    mask, mvals = 0, [0] * (PK.order * n)
    for x in bits(U):
        g, h = divmod(x, m)
        idx = qP.projection.images[posP[g]] * n + qQ.projection.images[posQ[h]]
        if (mask >> idx) & 1:
            if mvals[idx] != vals[x]:
                raise AssertionError("phi is not trivial on K x L")
        else:
            mask |= 1 << idx
            mvals[idx] = vals[x]
    middle = BisetElement(PK, QL, FBRElement(mid_ring, {mid_ring.locate(mask, tuple(mvals)): 1}))
    return CanonicalDecomposition(
        ind(G, sd.p1, A), inf(Pg, Kp, A), middle, defl(Qg, Lq, A), res(H, sd.p2, A), sd.p1, sd.p2, K, L
    )


def extend_char(G: FiniteGroup, H: FiniteGroup, A, U: int, vals: Sequence[int]) -> tuple[int, int] | None:
    """Indices (alpha in G*, beta in H*) with (alpha x beta)|_U = phi, if any.

    Requires p1(U) = G and p2(U) = H. Searches alpha extending phi1 and
    glues beta(h) = phi(g, h) - alpha(g).
    """
    A = parse_fiber(A)
    sd = stabilizer_data(G, H, A, U, vals)
    if sd.p1 != G.full or sd.p2 != H.full:
        raise GroupError("extend_char needs p1(U) = G and p2(U) = H")
    DG, DH = dual_group(G, A), dual_group(H, A)
    m = H.order
    k1 = bits(sd.k1)
    for ai, alpha in enumerate(DG.elements):
        if any(alpha[g] != sd.phi1[g] for g in k1):
            continue
        beta = [None] * m
        ok = True
        for x in bits(U):
            g, h = divmod(x, m)
            b = A.add(vals[x], A.neg(alpha[g]))
            if beta[h] is None:
                beta[h] = b
            elif beta[h] != b:
                ok = False
                break
        if not ok:
            continue
        bi = DH.index.get(tuple(beta))
        if bi is None:
            continue
        for x in bits(U):
            g, h = divmod(x, m)
            if A.add(alpha[g], beta[h]) != vals[x]:
                raise AssertionError("glued extension does not restrict to phi")
        return ai, bi
    return None


def eta_condition(G: FiniteGroup, H: FiniteGroup, A, U: int, vals: Sequence[int], Phi: KChar, Psi: KChar) -> bool:
    """Phi_{k1(U)} = Psi_{k2(U)} o eta_U^*, tested on every lambda in (G/k1)^*.

    (G/k1)^* is read as the characters of G trivial on k1, and lambda o eta_U
    as the character h -> lambda(g) for (g, h) in U.
    """
    sd = stabilizer_data(G, H, A, U, vals)
    DG, DH = Phi.dual, Psi.dual
    k1 = bits(sd.k1)
    for li, lam in enumerate(DG.elements):
        if any(lam[g] for g in k1):
            continue
        mu = DH.lookup(sd.eta_hom_values(lam))
        if Phi.values[li] != Psi.values[mu]:
            return False
    return True


# ---------------------------------------------------------------------------
# closed forms on primitive idempotents


def _sum_idempotents(ring: BurnsideRing, pairs) -> FBRElement:
    acc = ring.zero()
    for p in pairs:
        acc = acc + idempotent_of(ring, p)
    return acc


def act_on_idempotent(kind: str, G: FiniteGroup, A, pair: XPair, *args) -> FBRElement:
    """The closed-form image of a primitive idempotent under an elementary biset.

    kind / arguments (pair always lives in the source group of the operation):
      "res", H       : e^G_pair  -> sum of e^H_(L,Psi) with (L,Psi) =_G pair
      "inf", N       : e^{G/N}_pair -> sum of e^G_(H,Phi) with (HN/N, Phi_N) =_{G/N} pair
      "ind", H       : e^H_pair  -> |N_G(K,Psi)| / |N_H(K,Psi)| e^G_(K,Psi)
      "iso", f       : e^G_pair  -> e^{G'}_(f(H), Phi o f^*)
      "tw", lam      : e^G_pair  -> Phi(lam|_H) e^G_pair
    Deflation is handled with the m-constants in the pairs module.
    """
    A = parse_fiber(A)
    if kind == "res":
        (H,) = args
        Hg, emb = G.subgroup_group(H)
        RG, RH = burnside_ring(G, A), burnside_ring(Hg, A)
        target = RG.xpair_key(pair.mask, pair.phi)
        chosen = []
        for p in RH.xpairs():
            L = emb.image_mask(p.mask)
            if RG.xpair_key(L, push_through(p.phi, emb, L)) == target:
                chosen.append(p)
        return _sum_idempotents(RH, chosen)
    if kind == "inf":
        (N,) = args
        q = G.quotient(N)
        RG, RQ = burnside_ring(G, A), burnside_ring(q.group, A)
        if pair.phi.dual.group is not q.group:
            raise GroupError("pair must live on G/N")
        target = RQ.xpair_key(pair.mask, pair.phi)
        chosen = []
        for p in RG.xpairs():
            phiN = char_push_quotient(p.phi, N)
            if RQ.xpair_key(phiN.dual.mask, phiN) == target:
                chosen.append(p)
        return _sum_idempotents(RG, chosen)
    if kind == "ind":
        (H,) = args
        Hg, emb = G.subgroup_group(H)
        RG, RH = burnside_ring(G, A), burnside_ring(Hg, A)
        if pair.phi.dual.group is not Hg:
            raise GroupError("pair must live on the subgroup H")
        K = emb.image_mask(pair.mask)
        phiG = push_through(pair.phi, emb, K)
        factor = Fraction(RG.stabilizer_order(K, phiG), RH.stabilizer_order(pair.mask, pair.phi))
        return idempotent_of(RG, RG.xpair_rep(K, phiG)).scale(factor)
    if kind == "iso":
        (f,) = args
        RT = burnside_ring(f.target, A)
        K = f.image_mask(pair.mask)
        return idempotent_of(RT, RT.xpair_rep(K, push_through(pair.phi, f, K)))
    if kind == "tw":
        (lam,) = args
        RG = burnside_ring(G, A)
        D = pair.phi.dual
        value = pair.phi.values[D.index[restrict_values(lam, pair.mask)]]
        return idempotent_of(RG, RG.xpair_rep(pair.mask, pair.phi)).scale(normalize_coeff(root_of_unity(value)))
    raise ValueError(f"unknown kind {kind!r}")
