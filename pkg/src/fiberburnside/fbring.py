"""The A-fibered Burnside ring B^A_K(G) with exact cyclotomic coefficients.

Basis elements are G-orbits [U, phi]_G of pairs with U <= G and phi in
Hom(U, A). Each orbit is stored through its canonical representative: the
minimal conjugate subgroup with the lexicographically smallest value vector
among the conjugates of phi that live on it.

Coefficients are Fractions when rational and Cyclotomic numbers otherwise.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union

from .cyclo import Cyclotomic, rational_str, root_of_unity, root_sum
from .fiber import (
    DualGroup,
    FiberGroup,
    KChar,
    conjugate_values,
    dual_group,
    parse_fiber,
    perp,
    restrict_values,
)
from .groups import FiniteGroup, GroupError, bits, popcount

__all__ = [
    "OrbitRep",
    "XPair",
    "BurnsideRing",
    "FBRElement",
    "burnside_ring",
    "basis",
    "mul",
    "pi",
    "species",
    "mark_vector",
    "element_from_marks",
    "idempotent",
    "normalize_coeff",
    "coeff_to_json",
    "coeff_from_json",
]

Coeff = Union[Fraction, Cyclotomic]


class OrbitRep(NamedTuple):
    """Canonical representative (U, phi) of a basis orbit."""

    mask: int
    vals: tuple[int, ...]


def sort_key(rep: OrbitRep):
    return (popcount(rep.mask), rep.mask, rep.vals)


class XPair(NamedTuple):
    """A pair (H, Phi) with H <= G and Phi a character of Hom(H, A)."""

    mask: int
    phi: KChar


def normalize_coeff(c) -> Coeff:
    if isinstance(c, Cyclotomic):
        return c.to_rational() if c.is_rational() else c
    return Fraction(c)


def coeff_to_json(c):
    c = normalize_coeff(c)
    if isinstance(c, Fraction):
        return rational_str(c)
    return c.to_json()


def coeff_from_json(data) -> Coeff:
    if isinstance(data, Mapping):
        return normalize_coeff(Cyclotomic.from_json(data))
    return Fraction(data)


def _is_zero(c) -> bool:
    return c.is_zero() if isinstance(c, Cyclotomic) else c == 0


class BurnsideRing:
    """Basis, multiplication and marks of B^A_K(G) for one (G, A).

    Everything is computed lazily: canonical forms need only the conjugacy
    orbit of one subgroup, so rings of large products stay cheap until the
    full basis is requested.
    """

    def __init__(self, G: FiniteGroup, A: FiberGroup):
        self.group = G
        self.fiber = A
        self._orbit_min: dict[int, dict[int, int]] = {}
        self._norm_perms: dict[int, list[tuple[int, ...]]] = {}
        self._basis = None
        self._index = None
        self._locate_cache: dict[tuple[int, tuple[int, ...]], OrbitRep] = {}
        self._products: dict[tuple[OrbitRep, OrbitRep], dict[OrbitRep, int]] = {}
        self._ghosts: dict[tuple[OrbitRep, int], dict[int, int]] = {}
        self._xpairs = None
        self.one_rep = OrbitRep(G.full, (0,) * G.order)

    def __repr__(self):
        return f"BurnsideRing({self.group.name}, A={self.fiber})"

    def __len__(self):
        return len(self.basis)

    @property
    def basis(self) -> tuple[OrbitRep, ...]:
        """One canonical representative per orbit, ordered by (|U|, U, values)."""
        if self._basis is None:
            G = self.group
            out = []
            for R in G.class_reps():
                D = dual_group(G, self.fiber, R)
                reps = {self._min_in_orbit(R, i) for i in range(len(D))}
                out.extend(OrbitRep(R, D.elements[i]) for i in reps)
            out.sort(key=sort_key)
            self._basis = tuple(out)
        return self._basis

    @property
    def index(self) -> dict[OrbitRep, int]:
        if self._index is None:
            self._index = {b: i for i, b in enumerate(self.basis)}
        return self._index

    def _normalizer_perms(self, R: int) -> list[tuple[int, ...]]:
        c = self._norm_perms.get(R)
        if c is None:
            G = self.group
            D = dual_group(G, self.fiber, R)
            perms = {tuple(range(len(D)))}
            if not G.is_abelian():
                for n in bits(G.normalizer(R)):
                    perms.add(D.sigma(n))
            c = self._norm_perms[R] = sorted(perms)
        return c

    def _min_in_orbit(self, R: int, i: int) -> int:
        table = self._orbit_min.setdefault(R, {})
        c = table.get(i)
        if c is None:
            D = dual_group(self.group, self.fiber, R)
            orbit = {p[i] for p in self._normalizer_perms(R)}
            c = min(orbit, key=lambda j: D.elements[j])
            for j in orbit:
                table[j] = c
        return c

    # canonical forms -----------------------------------------------------

    def locate(self, mask: int, vals: tuple[int, ...]) -> OrbitRep:
        """Canonical representative of the orbit of (mask, vals)."""
        k = (mask, vals)
        c = self._locate_cache.get(k)
        if c is None:
            G = self.group
            R, t = G.canonical_subgroup(mask)
            v = conjugate_values(G, t, vals, mask) if t else vals
            D = dual_group(G, self.fiber, R)
            try:
                i = D.index[v]
            except KeyError:
                raise GroupError("values do not define a homomorphism on the subgroup") from None
            c = self._locate_cache[k] = OrbitRep(R, D.elements[self._min_in_orbit(R, i)])
        return c

    canonical = locate

    # elements -------------------------------------------------------------

    def element(self, terms: Mapping[OrbitRep, object] | None = None) -> "FBRElement":
        return FBRElement(self, terms or {})

    def basis_element(self, rep: OrbitRep | int, coeff=1) -> "FBRElement":
        if isinstance(rep, int):
            rep = self.basis[rep]
        return FBRElement(self, {rep: coeff})

    def orbit(self, mask: int, vals: Iterable[int], coeff=1) -> "FBRElement":
        return FBRElement(self, {self.locate(mask, tuple(vals)): coeff})

    def one(self) -> "FBRElement":
        return FBRElement(self, {self.one_rep: 1})

    def zero(self) -> "FBRElement":
        return FBRElement(self, {})

    # multiplication -------------------------------------------------------

    def basis_product(self, a: OrbitRep, b: OrbitRep) -> dict[OrbitRep, int]:
        """[U,phi][V,psi] = sum over g in U\\G/V of [U cap gV, phi . g.psi]."""
        if sort_key(a) > sort_key(b):
            a, b = b, a
        c = self._products.get((a, b))
        if c is None:
            G = self.group
            add = self.fiber.add
            U, phi = a
            V, psi = b
            out: dict[OrbitRep, int] = defaultdict(int)
            for g in G.double_cosets(U, V):
                gV = G.conjugate_mask(g, V)
                W = U & gV
                gpsi = conjugate_values(G, g, psi, V)
                vals = [0] * G.order
                for x in bits(W):
                    vals[x] = add(phi[x], gpsi[x])
                out[self.locate(W, tuple(vals))] += 1
            c = self._products[(a, b)] = dict(out)
        return c

    # marks ----------------------------------------------------------------

    def ghost(self, b: OrbitRep, H: int) -> dict[int, int]:
        """pi_H(res_H [U,phi]) as {index in H*: multiplicity}.

        Counts the cosets gU with H <= gUg^-1, recording (g.phi)|_H.
        """
        k = (b, H)
        c = self._ghosts.get(k)
        if c is None:
            G = self.group
            U, phi = b
            out: dict[int, int] = defaultdict(int)
            if popcount(H) <= popcount(U) and popcount(U) % popcount(H) == 0:
                D = dual_group(G, self.fiber, H)
                for g in G.left_transversal(U):
                    gU = G.conjugate_mask(g, U)
                    if gU & H == H:
                        v = conjugate_values(G, g, phi, U)
                        out[D.index[restrict_values(v, H)]] += 1
            c = self._ghosts[k] = dict(out)
        return c

    def xpairs(self) -> tuple[XPair, ...]:
        """Representatives of the G-orbits on pairs (H, Phi), in basis-like order."""
        if self._xpairs is None:
            out = []
            self._xstab: dict[tuple[int, int], int] = {}
            self._xmin: dict[tuple[int, int], int] = {}
            for R in self.group.class_reps():
                D = dual_group(self.group, self.fiber, R)
                seen: set[int] = set()
                for chi in D.kchars():
                    if chi.id in seen:
                        continue
                    orbit = self._char_orbit(R, chi)
                    rep = min(orbit)
                    for j in orbit:
                        seen.add(j)
                        self._xmin[(R, j)] = rep
                    out.append(XPair(R, D.kchars()[rep]))
            self._xpairs = tuple(out)
        return self._xpairs

    def _char_orbit(self, H: int, chi: KChar) -> set[int]:
        G = self.group
        orbit = {chi.id}
        if not G.is_abelian():
            for n in bits(G.normalizer(H)):
                orbit.add(self.conj_kchar(n, H, chi).id)
        return orbit

    def conj_kchar(self, g: int, H: int, chi: KChar) -> KChar:
        """The character g.Phi on (gHg^-1)^*: (g.Phi)(psi) = Phi(g^-1 . psi)."""
        G = self.group
        if not g:
            return chi
        gH = G.conjugate_mask(g, H)
        D = chi.dual
        E = dual_group(G, self.fiber, gH)
        ginv = G.inv[g]
        vals = [chi.values[D.index[conjugate_values(G, ginv, psi, gH)]] for psi in E.elements]
        return E.kchar_from_values(vals)

    def xpair_key(self, H: int, chi: KChar) -> tuple[int, int]:
        """(class rep R, char id) of the canonical representative of (H, Phi)."""
        self.xpairs()
        R, t = self.group.canonical_subgroup(H)
        chi = self.conj_kchar(t, H, chi)
        return R, self._xmin[(R, chi.id)]

    def xpair_rep(self, H: int, chi: KChar) -> XPair:
        R, j = self.xpair_key(H, chi)
        return XPair(R, dual_group(self.group, self.fiber, R).kchars()[j])

    def xpair_conjugate(self, a: XPair, b: XPair) -> bool:
        return self.xpair_key(a.mask, a.phi) == self.xpair_key(b.mask, b.phi)

    def stabilizer_order(self, H: int, chi: KChar) -> int:
        """|N_G(H, Phi)|."""
        G = self.group
        if G.is_abelian():
            return G.order
        n = 0
        for g in bits(G.normalizer(H)):
            if self.conj_kchar(g, H, chi) == chi:
                n += 1
        return n


def burnside_ring(G: FiniteGroup, A) -> BurnsideRing:
    A = parse_fiber(A)
    key = ("burnside", A)
    c = G._cache.get(key)
    if c is None:
        c = G._cache[key] = BurnsideRing(G, A)
    return c


class FBRElement:
    """An element of B^A_K(G): a sparse map basis index -> coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: BurnsideRing, terms: Mapping[OrbitRep, object]):
        self.ring = ring
        clean = {}
        for i, c in terms.items():
            c = normalize_coeff(c)
            if not _is_zero(c):
                clean[i] = c
        self.terms: dict[OrbitRep, Coeff] = clean

    @property
    def group(self) -> FiniteGroup:
        return self.ring.group

    @property
    def fiber(self) -> FiberGroup:
        return self.ring.fiber

    @property
    def coeffs(self) -> dict[OrbitRep, Coeff]:
        return dict(self.items())

    def items(self) -> list[tuple[OrbitRep, Coeff]]:
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def coefficient(self, rep: OrbitRep) -> Coeff:
        return self.terms.get(rep, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "FBRElement") -> None:
        if other.ring is not self.ring:
            raise GroupError("elements live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = self.ring.one() * other
        self._check(other)
        out = dict(self.terms)
        for i, c in other.terms.items():
            out[i] = out[i] + c if i in out else c
        return FBRElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return FBRElement(self.ring, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "FBRElement":
        s = normalize_coeff(s)
        if _is_zero(s):
            return self.ring.zero()
        if isinstance(s, Fraction):
            return FBRElement(self.ring, {i: c * s for i, c in self.terms.items()})
        return FBRElement(self.ring, {i: s * c for i, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FBRElement):
            return mul(self, other)
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.one() * other if other else self.ring.zero()
        if not isinstance(other, FBRElement) or other.ring is not self.ring:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (U, vals), c in self.items():
            phi = ",".join(str(self.fiber.render(vals[x])) for x in bits(U))
            parts.append(f"({c})[{list(bits(U))};{phi}]")
        return " + ".join(parts)

    def to_json(self) -> list:
        A = self.fiber
        out = []
        for (U, vals), c in self.items():
            out.append(
                {
                    "subgroup": list(bits(U)),
                    "phi": [A.render(vals[x]) for x in bits(U)],
                    "coeff": coeff_to_json(c),
                }
            )
        return out

    @classmethod
    def from_json(cls, ring: BurnsideRing, data: list) -> "FBRElement":
        A = ring.fiber
        G = ring.group
        terms: dict[OrbitRep, Coeff] = {}
        for entry in data:
            els = entry["subgroup"]
            mask = sum(1 << x for x in els)
            vals = [0] * G.order
            for x, v in zip(els, entry["phi"]):
                vals[x] = _parse_fiber_value(A, v)
            i = ring.locate(mask, tuple(vals))
            c = coeff_from_json(entry["coeff"])
            terms[i] = terms[i] + c if i in terms else c
        return cls(ring, terms)


def _parse_fiber_value(A: FiberGroup, v) -> int:
    if A.is_mu:
        q = Fraction(v) % 1
        return q.numerator * (A.factors[0] // q.denominator)
    if isinstance(v, list):
        return A._encode(v)
    return int(v)


# ---------------------------------------------------------------------------
# module-level operations


def basis(G: FiniteGroup, A) -> list[OrbitRep]:
    return list(burnside_ring(G, A).basis)


def _accumulate(acc: dict, i, c) -> None:
    if i in acc:
        acc[i] = acc[i] + c
    else:
        acc[i] = c


def mul(x: FBRElement, y: FBRElement) -> FBRElement:
    x._check(y)
    R = x.ring
    acc: dict[int, Coeff] = {}
    for i, a in x.terms.items():
        for j, b in y.terms.items():
            ab = a * b
            for k, n in R.basis_product(i, j).items():
                _accumulate(acc, k, ab * n if n != 1 else ab)
    return FBRElement(R, acc)


def pi(x: FBRElement) -> dict[int, Coeff]:
    """Projection onto K G^*: the [G, phi] terms, keyed by index in G^*."""
    G = x.group
    D = dual_group(G, x.fiber)
    return {D.index[b.vals]: c for b, c in x.items() if b.mask == G.full}


def _char_sum(chi: KChar, counts: Mapping[int, object]) -> Coeff:
    """K-linear extension of chi on an element of K H^*."""
    rat: dict[Fraction, Fraction] = defaultdict(Fraction)
    extra = None
    for i, c in counts.items():
        if isinstance(c, Cyclotomic):
            term = c * root_of_unity(chi.values[i])
            extra = term if extra is None else extra + term
        else:
            rat[chi.values[i]] += c
    total = root_sum(rat)
    if extra is not None:
        total = total + extra
    return normalize_coeff(total)


def species(x: FBRElement, pair: XPair) -> Coeff:
    """s_{(H,Phi)}(x) = Phi(pi_H(res_H x))."""
    H, chi = pair
    R = x.ring
    if H & x.group.full != H or not x.group.is_subgroup(H):
        raise GroupError("H is not a subgroup")
    if chi.dual.group is not x.group or chi.dual.mask != H or chi.dual.fiber != x.fiber:
        raise GroupError("Phi does not live on the dual of H")
    counts: dict[int, object] = {}
    for i, c in x.terms.items():
        for j, n in R.ghost(i, H).items():
            _accumulate(counts, j, c * n)
    return _char_sum(chi, counts)


def mark_vector(x: FBRElement) -> dict[XPair, Coeff]:
    return {p: species(x, p) for p in x.ring.xpairs()}


def idempotent(G: FiniteGroup, A, H: int, chi: KChar, *, filtered: bool = True) -> FBRElement:
    """The primitive idempotent e^G_{(H,Phi)}.

    e = 1/(|N_G(H,Phi)| |H*|) sum_{K <= H, Phi trivial on K-perp}
            sum_{phi in H*} |K| mu(K,H) Phi(phi^-1) [K, phi|_K]_G.

    With filtered=False the condition on K is dropped; the result is the same.
    """
    R = burnside_ring(G, A)
    D: DualGroup = chi.dual
    if D.group is not G or D.mask != H:
        raise GroupError("Phi does not live on the dual of H")
    n = len(D)
    acc: dict[int, dict[Fraction, int]] = defaultdict(lambda: defaultdict(int))
    for K in G.subgroups_of(H):
        m = G.mobius(K, H)
        if not m:
            continue
        if filtered and not chi.is_trivial_on(perp(D, K)):
            continue
        DK = dual_group(G, R.fiber, K)
        ridx = _restriction_index(D, DK)
        w = popcount(K) * m
        for i in range(n):
            b = R.locate(K, DK.elements[ridx[i]])
            acc[b][-chi.values[i]] += w
    scale = Fraction(1, R.stabilizer_order(H, chi) * n)
    terms = {b: root_sum(t) * scale for b, t in acc.items()}
    return FBRElement(R, terms)


def _restriction_index(D: DualGroup, sub: DualGroup) -> tuple[int, ...]:
    cache = D.__dict__.setdefault("_restr", {})
    c = cache.get(sub.mask)
    if c is None:
        c = cache[sub.mask] = D.restriction_index(sub)
    return c


def idempotent_of(ring: BurnsideRing, pair: XPair) -> FBRElement:
    key = ("idem", pair.mask, pair.phi.id)
    cache = ring.__dict__.setdefault("_idem", {})
    c = cache.get(key)
    if c is None:
        c = cache[key] = idempotent(ring.group, ring.fiber, pair.mask, pair.phi)
    return c


def element_from_marks(ring: BurnsideRing, marks: Mapping[XPair, object]) -> FBRElement:
    """Inverse of mark_vector: sum of marks[p] * e_p over orbit representatives."""
    acc = ring.zero()
    for p, v in marks.items():
        v = normalize_coeff(v)
        if _is_zero(v):
            continue
        rep = ring.xpair_rep(p.mask, p.phi)
        acc = acc + idempotent_of(ring, rep).scale(v)
    return acc
