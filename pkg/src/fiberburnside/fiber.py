"""The fiber group A, dual groups Hom(U, A) and characters of dual groups.

A is a finite abelian group given by invariant factors d1 | d2 | ... | dk,
or the group of all roots of unity ("mu"). Elements of A are encoded as
integers: a residue for cyclic A, a mixed-radix code otherwise. "mu" is
realized as the cyclic group of order MU_MODULUS = lcm(1..64), which holds
every root of unity whose order can occur as an element order below that
bound, so homomorphisms from any group in range are captured exactly and
values of different groups remain comparable.

A homomorphism U -> A (U a subgroup of G) is stored as a full-length value
tuple over the elements of G, zero outside U.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .groups import FiniteGroup, GroupError, GroupHom, bits

__all__ = [
    "FiberGroup",
    "MU_MODULUS",
    "parse_fiber",
    "homs_to_fiber",
    "DualGroup",
    "dual_group",
    "KChar",
    "MonomialChar",
    "restrict_values",
    "conjugate_values",
    "restrict_char",
    "conj_char",
    "perp",
    "char_push_quotient",
    "push_through",
    "o_subgroup",
    "zeta_iso",
]

MU_MODULUS = math.lcm(*range(1, 65))


class FiberGroup:
    """A finite abelian fiber group, or the roots of unity."""

    def __init__(self, factors: Sequence[int] = (), mu: bool = False):
        factors = tuple(int(d) for d in factors if int(d) != 1)
        if any(d < 1 for d in factors):
            raise ValueError("invariant factors must be positive")
        if mu:
            factors = (MU_MODULUS,)
        else:
            factors = _invariant_factors(factors)
        self.factors = factors
        self.is_mu = mu
        self.size = None if mu else math.prod(factors)
        self._radix = factors
        if len(factors) > 1:
            n = math.prod(factors)
            self._add = [[self._encode([(x + y) % d for x, y, d in zip(self._decode(a), self._decode(b), factors)])
                          for b in range(n)] for a in range(n)]
        else:
            self._add = None
        self._div_cache: dict[int, tuple[int, ...]] = {}

    # identity and display --------------------------------------------------

    def key(self):
        return ("mu",) if self.is_mu else self.factors

    def __eq__(self, other):
        return isinstance(other, FiberGroup) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        if self.is_mu:
            return "mu"
        if not self.factors:
            return "1"
        return "x".join(f"C{d}" for d in self.factors)

    def __repr__(self):
        return f"FiberGroup({self})"

    @property
    def is_cyclic(self) -> bool:
        return len(self.factors) <= 1

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    # element arithmetic ------------------------------------------------------

    def _decode(self, a: int) -> list[int]:
        out = []
        for d in self._radix:
            out.append(a % d)
            a //= d
        return out

    def _encode(self, residues: Iterable[int]) -> int:
        a, scale = 0, 1
        for r, d in zip(residues, self._radix):
            a += (r % d) * scale
            scale *= d
        return a

    def residues(self, a: int) -> tuple[int, ...]:
        return tuple(self._decode(a))

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        if not self.factors:
            return 0
        return (a + b) % self.factors[0]

    def neg(self, a: int) -> int:
        if self._add is not None:
            return self._encode(-r for r in self._decode(a))
        if not self.factors:
            return 0
        return (-a) % self.factors[0]

    def order_of(self, a: int) -> int:
        return math.lcm(1, *(d // math.gcd(r, d) for r, d in zip(self._decode(a), self._radix)))

    def elements_dividing(self, m: int) -> tuple[int, ...]:
        """Elements a with a^m = 1, increasing."""
        c = self._div_cache.get(m)
        if c is None:
            per = []
            for d in self._radix:
                g = math.gcd(m, d)
                step = d // g
                per.append([step * k for k in range(g)])
            c = tuple(sorted(self._encode(rs) for rs in itertools.product(*per)))
            self._div_cache[m] = c
        return c

    def to_fraction(self, a: int) -> Fraction:
        """The root-of-unity exponent of a, for A inside the roots of unity."""
        if not self.is_cyclic:
            raise ValueError(f"{self} is not cyclic, so it has no embedding into a field")
        if not self.factors:
            return Fraction(0)
        return Fraction(a, self.factors[0])

    def render(self, a: int):
        if self.is_mu:
            return str(self.to_fraction(a))
        if self.is_cyclic:
            return a
        return list(self._decode(a))


def _invariant_factors(ds: Sequence[int]) -> tuple[int, ...]:
    # split into prime powers, then rebuild the divisibility chain
    powers: dict[int, list[int]] = {}
    for d in ds:
        n, p = d, 2
        while p * p <= n:
            if n % p == 0:
                q = 1
                while n % p == 0:
                    n //= p
                    q *= p
                powers.setdefault(p, []).append(q)
            p += 1
        if n > 1:
            powers.setdefault(n, []).append(n)
    if not powers:
        return ()
    k = max(len(v) for v in powers.values())
    out = [1] * k
    for v in powers.values():
        v = sorted(v)
        for i, q in enumerate(v):
            out[k - len(v) + i] *= q
    return tuple(out)


def parse_fiber(text) -> FiberGroup:
    """Parse "1", "Cn", "Cn x Cm ...", "mu" (and FiberGroup passthrough)."""
    if isinstance(text, FiberGroup):
        return text
    s = str(text).strip().replace("×", "x").replace(" ", "")
    if s in ("1", "C1", ""):
        return FiberGroup(())
    if s.lower() == "mu":
        return FiberGroup(mu=True)
    parts = s.split("x")
    ds = []
    for p in parts:
        m = re.fullmatch(r"C(\d+)(?:\^(\d+))?", p)
        if not m:
            raise ValueError(f"cannot parse fiber group {text!r}")
        ds += [int(m.group(1))] * int(m.group(2) or 1)
    return FiberGroup(ds)


# ---------------------------------------------------------------------------
# homomorphisms into A


def _check_mu(G: FiniteGroup, A: FiberGroup) -> None:
    if A.is_mu and MU_MODULUS % G.exponent:
        raise GroupError(f"exponent of {G.name} exceeds the roots of unity modelled by mu")


def homs_to_fiber(G: FiniteGroup, mask: int, A: FiberGroup) -> tuple[tuple[int, ...], ...]:
    """All homomorphisms U -> A as full-length value tuples (zero off U).

    Ordered by generator images, so the trivial homomorphism comes first.
    """
    key = ("homs", mask, A)
    c = G._cache.get(key)
    if c is not None:
        return c
    _check_mu(G, A)
    n = G.order
    gens = G.generators(mask)
    orders = G.element_orders
    T = G.table
    add = A.add
    out = []

    def extend(level: int, vals: list[int], domain: list[int], dmask: int):
        if level == len(gens):
            out.append(tuple(vals))
            return
        g = gens[level]
        active = gens[: level + 1]
        for a in A.elements_dividing(orders[g]):
            v = vals[:]
            assigned = dmask
            queue = list(domain)
            if not (assigned >> g) & 1:
                v[g] = a
                assigned |= 1 << g
                queue.append(g)
            elif v[g] != a:
                continue
            ok = True
            i = 0
            img = dict(zip(active[:-1], (vals[s] for s in active[:-1])))
            img[g] = a
            while ok and i < len(queue):
                x = queue[i]
                i += 1
                row = T[x]
                vx = v[x]
                for s in active:
                    y = row[s]
                    vy = add(vx, img[s])
                    if (assigned >> y) & 1:
                        if v[y] != vy:
                            ok = False
                            break
                    else:
                        v[y] = vy
                        assigned |= 1 << y
                        queue.append(y)
            if ok:
                extend(level + 1, v, queue, assigned)

    extend(0, [0] * n, [0], 1)
    c = G._cache[key] = tuple(out)
    return c


def restrict_values(vals: Sequence[int], mask: int) -> tuple[int, ...]:
    return tuple(v if (mask >> i) & 1 else 0 for i, v in enumerate(vals))


def conjugate_values(G: FiniteGroup, g: int, vals: Sequence[int], mask: int) -> tuple[int, ...]:
    """Values of the conjugate g.phi on gUg^-1: (g.phi)(x) = phi(g^-1 x g)."""
    if not g:
        return tuple(vals)
    out = [0] * G.order
    row = G.conj[g]
    for x in bits(mask):
        out[row[x]] = vals[x]
    return tuple(out)


# ---------------------------------------------------------------------------
# dual groups


class DualGroup:
    """U* = Hom(U, A) for a subgroup U of G, with a cyclic decomposition.

    Elements are indexed 0..|U*|-1 with the trivial character at 0.
    ``gens``/``gen_orders`` give a decomposition with orders n1 | n2 | ...,
    and ``coords[i]`` the exponent vector of element i in it.
    """

    def __init__(self, G: FiniteGroup, mask: int, A: FiberGroup):
        self.group = G
        self.mask = mask
        self.fiber = A
        self.elements = homs_to_fiber(G, mask, A)
        self.index = {v: i for i, v in enumerate(self.elements)}
        self._mult = None
        self._decompose()

    def __repr__(self):
        return f"DualGroup({self.group.name}, U={list(bits(self.mask))}, A={self.fiber}, order={len(self)})"

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        if self._mult is None:
            add = self.fiber.add
            els = self.elements
            idx = self.index
            self._mult = [[idx[tuple(add(x, y) for x, y in zip(a, b))] for b in els] for a in els]
        return self._mult[i][j]

    def inverse(self, i: int) -> int:
        neg = self.fiber.neg
        return self.index[tuple(neg(x) for x in self.elements[i])]

    def element_order(self, i: int) -> int:
        A = self.fiber
        return math.lcm(1, *(A.order_of(self.elements[i][x]) for x in bits(self.mask)))

    def lookup(self, vals: Sequence[int]) -> int:
        try:
            return self.index[tuple(vals)]
        except KeyError:
            raise GroupError("values do not define a homomorphism on this subgroup") from None

    def restriction_index(self, sub: "DualGroup") -> tuple[int, ...]:
        """For each element of self, the index of its restriction in sub."""
        return tuple(sub.index[restrict_values(v, sub.mask)] for v in self.elements)

    def _decompose(self) -> None:
        # greedy: repeatedly take an element of maximal order modulo the part
        # already split off, lifted to an element of the same order
        n = len(self.elements)
        orders = [self.element_order(i) for i in range(n)]
        gens: list[int] = []
        span = {0}
        while len(span) < n:
            best, best_ord = None, 0
            for x in range(n):
                if x in span:
                    continue
                k, y = 1, x
                while y not in span:
                    y = self.mul(y, x)
                    k += 1
                if k > best_ord:
                    best, best_ord = x, k
            coset = {self.mul(best, s) for s in span}
            lift = min((y for y in coset if orders[y] == best_ord), default=None)
            if lift is None:
                raise AssertionError("cyclic decomposition failed to lift")
            gens.append(lift)
            new = set()
            p = 0
            for _ in range(best_ord):
                for s in span:
                    new.add(self.mul(p, s))
                p = self.mul(p, lift)
            span = new
        gens.reverse()
        self.gens = tuple(gens)
        self.gen_orders = tuple(orders[g] for g in gens)
        coords = [None] * n
        for exps in itertools.product(*(range(k) for k in self.gen_orders)):
            x = 0
            for g, e in zip(gens, exps):
                for _ in range(e):
                    x = self.mul(x, g)
            if coords[x] is not None:
                raise AssertionError("decomposition is not direct")
            coords[x] = exps
        self.coords = tuple(coords)

    def kchars(self) -> tuple["KChar", ...]:
        """All characters of this dual group; the trivial one first."""
        c = getattr(self, "_kchars", None)
        if c is None:
            c = []
            for ks in itertools.product(*(range(k) for k in self.gen_orders)):
                t = tuple(Fraction(k, nk) for k, nk in zip(ks, self.gen_orders))
                c.append(KChar(self, t, len(c)))
            c = self._kchars = tuple(c)
        return c

    def kchar_from_values(self, values: Sequence[Fraction]) -> "KChar":
        """The character with the given values (fractions mod 1) on all elements."""
        lookup = getattr(self, "_by_values", None)
        if lookup is None:
            lookup = self._by_values = {chi.values: chi for chi in self.kchars()}
        chi = lookup.get(tuple(Fraction(v) % 1 for v in values))
        if chi is None:
            raise GroupError("values do not define a character of the dual group")
        return chi

    def sigma(self, g: int) -> tuple[int, ...]:
        """Permutation of element indices induced by conjugation phi -> g.phi.

        g must normalize the underlying subgroup.
        """
        cache = self.__dict__.setdefault("_sigma", {})
        c = cache.get(g)
        if c is None:
            G = self.group
            c = cache[g] = tuple(
                self.index[conjugate_values(G, g, v, self.mask)] for v in self.elements
            )
        return c


def dual_group(G: FiniteGroup, A, mask: int | None = None) -> DualGroup:
    """The dual Hom(U, A) of the subgroup mask (default: all of G), cached."""
    A = parse_fiber(A)
    mask = G.full if mask is None else mask
    key = ("dual", mask, A)
    c = G._cache.get(key)
    if c is None:
        c = G._cache[key] = DualGroup(G, mask, A)
    return c


class KChar:
    """A character Phi of a dual group U*, with values as fractions mod 1.

    Phi sends the i-th decomposition generator to exp(2 pi i t_i); values
    are stored for every dual element.
    """

    __slots__ = ("dual", "t", "id", "values")

    def __init__(self, dual: DualGroup, t: Sequence[Fraction], ident: int = -1):
        if len(t) != len(dual.gen_orders):
            raise GroupError("one image per decomposition generator is needed")
        t = tuple(Fraction(x) % 1 for x in t)
        for x, nk in zip(t, dual.gen_orders):
            if (x * nk).denominator != 1:
                raise GroupError("generator image has the wrong order")
        self.dual = dual
        self.t = t
        self.id = ident
        self.values = tuple(sum((a * x for a, x in zip(c, t)), Fraction(0)) % 1 for c in dual.coords)

    def __call__(self, i: int) -> Fraction:
        return self.values[i]

    def __eq__(self, other):
        return isinstance(other, KChar) and self.dual is other.dual and self.t == other.t

    def __hash__(self):
        return hash(self.t)

    def __repr__(self):
        return f"KChar(#{self.id}, t={[str(x) for x in self.t]})"

    def is_trivial_on(self, ids: Iterable[int]) -> bool:
        return all(self.values[i] == 0 for i in ids)

    def fingerprint(self) -> tuple:
        return tuple(sorted(self.values))


class MonomialChar:
    """A homomorphism phi: U -> A for a subgroup U of G."""

    __slots__ = ("group", "mask", "values", "fiber")

    def __init__(self, group: FiniteGroup, mask: int, values: Sequence[int], fiber: FiberGroup):
        self.group = group
        self.mask = mask
        self.values = tuple(values)
        self.fiber = fiber

    def __eq__(self, other):
        return (
            isinstance(other, MonomialChar)
            and self.group is other.group
            and self.mask == other.mask
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.mask, self.values))

    def __call__(self, x: int):
        if not (self.mask >> x) & 1:
            raise GroupError("element outside the domain")
        return self.values[x]

    def __repr__(self):
        return f"MonomialChar(U={list(bits(self.mask))}, {[self.values[x] for x in bits(self.mask)]})"


def restrict_char(phi: MonomialChar, K: int) -> MonomialChar:
    if K & phi.mask != K:
        raise GroupError("restriction target is not contained in the domain")
    return MonomialChar(phi.group, K, restrict_values(phi.values, K), phi.fiber)


def conj_char(g: int, phi: MonomialChar) -> MonomialChar:
    G = phi.group
    return MonomialChar(G, G.conjugate_mask(g, phi.mask), conjugate_values(G, g, phi.values, phi.mask), phi.fiber)


def perp(dual: DualGroup, K: int) -> tuple[int, ...]:
    """Indices of the elements of U* that are trivial on K."""
    if K & dual.mask != K:
        raise GroupError("K must lie in the domain of the dual")
    ks = bits(K)
    return tuple(i for i, v in enumerate(dual.elements) if all(v[x] == 0 for x in ks))


def push_through(phi: KChar, f: GroupHom, target_mask: int | None = None) -> KChar:
    """The character Phi o f^* on Hom(S', A), for f: H -> T a homomorphism.

    phi lives on Hom(U, A) for U <= H = f.source, S' = target_mask <= T must
    contain f(U). (Phi o f^*)(lambda) = Phi(lambda o f|_U).
    """
    src = phi.dual
    H, T = f.source, f.target
    if src.group is not H:
        raise GroupError("character does not live on the source of f")
    tmask = f.image_mask(src.mask) if target_mask is None else target_mask
    tdual = dual_group(T, src.fiber, tmask)
    ubits = bits(src.mask)
    vals = []
    for lam in tdual.elements:
        pulled = [0] * H.order
        for u in ubits:
            pulled[u] = lam[f.images[u]]
        vals.append(phi.values[src.lookup(pulled)])
    return tdual.kchar_from_values(vals)


def char_push_quotient(phi: KChar, N: int) -> KChar:
    """Phi_N on (UN/N)^*, for Phi on U^* and N normal in G.

    (UN/N)^* is identified with the characters of U trivial on U cap N.
    """
    src = phi.dual
    G = src.group
    q = G.quotient(N)
    return push_through(phi, q.projection, q.projection.image_mask(src.mask))


def o_subgroup(G: FiniteGroup, A) -> int:
    """O(G): the intersection of the kernels of all homomorphisms G -> A."""
    D = dual_group(G, A)
    m = G.full
    for v in D.elements:
        m &= sum(1 << x for x, a in enumerate(v) if a == 0)
    return m


def zeta_iso(G: FiniteGroup, A) -> dict[int, KChar]:
    """The bijection gO(G) -> epsilon_g onto the characters of G*.

    Returns a map from coset representatives (minimal index) to KChars.
    Requires A cyclic (or mu), so that A sits inside the roots of unity.
    """
    A = parse_fiber(A)
    if not A.is_cyclic:
        raise GroupError("zeta_iso needs a fiber group that embeds in a field")
    D = dual_group(G, A)
    O = o_subgroup(G, A)
    q = G.quotient(O)
    out = {}
    for g in q.reps:
        vals = [A.to_fraction(v[g]) for v in D.elements]
        out[g] = D.kchar_from_values(vals)
    if len({chi.t for chi in out.values()}) != len(out) or len(out) != len(D.kchars()):
        raise AssertionError("zeta map is not bijective")
    return out
