"""Finite groups given by Cayley tables.

Elements are the integers 0..n-1 with the identity at 0. Subgroups are
handled internally as int bitmasks over element indices; :class:`Subgroup`
is a thin public wrapper. Everything derived from a group (subgroup lists,
conjugacy data, quotients, products) is cached on the group object, so
groups compare by identity and should be built once and shared.
"""

from __future__ import annotations

import contextlib
import json
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence

__all__ = [
    "GroupError",
    "OrderCapExceeded",
    "DEFAULT_ORDER_CAP",
    "get_order_cap",
    "order_cap",
    "bits",
    "popcount",
    "FiniteGroup",
    "GroupHom",
    "Subgroup",
    "SubgroupLattice",
    "Quotient",
    "build_group",
    "cyclic_group",
    "dihedral_group",
    "symmetric_group",
    "alternating_group",
    "metacyclic_group",
    "permutation_group",
    "direct_product",
    "catalog",
    "CATALOG_NAMES",
    "subgroup_lattice",
    "normal_subgroups",
    "quotient",
    "conjugate_subgroup",
    "find_isomorphism",
    "isomorphisms",
    "automorphisms",
    "outer_classes",
]


class GroupError(ValueError):
    """Invalid group data or an operation applied to unsuitable arguments."""


class OrderCapExceeded(RuntimeError):
    """A lattice-level computation was requested for a group above the cap."""


DEFAULT_ORDER_CAP = 48
_cap = [DEFAULT_ORDER_CAP]


def get_order_cap() -> int:
    return _cap[0]


@contextlib.contextmanager
def order_cap(n: int):
    """Temporarily change the order cap for subgroup-lattice work."""
    if n < 1:
        raise ValueError("order cap must be at least 1")
    old = _cap[0]
    _cap[0] = n
    try:
        yield
    finally:
        _cap[0] = old


def _check_cap(G: "FiniteGroup") -> None:
    if G.order > _cap[0]:
        raise OrderCapExceeded(f"{G.name} has order {G.order} > cap {_cap[0]}")


@lru_cache(maxsize=1 << 18)
def bits(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of mask, increasing."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


def _mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


# ---------------------------------------------------------------------------
# core group type


class FiniteGroup:
    """A finite group as a validated Cayley table with identity at index 0."""

    def __init__(self, table: Sequence[Sequence[int]], name: str = "G", *, check: bool = True):
        table = tuple(tuple(int(x) for x in row) for row in table)
        if not table:
            raise GroupError("a group needs at least one element")
        if check:
            _validate_table(table)
        self.order = len(table)
        self.table = table
        self.name = name
        self.inv = tuple(row.index(0) for row in table)
        self.full = (1 << self.order) - 1
        self._cache: dict = {}

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __len__(self):
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        r = 0
        for _ in range(k):
            r = self.table[r][g]
        return r

    # elementwise data ----------------------------------------------------

    @property
    def element_orders(self) -> tuple[int, ...]:
        c = self._cache.get("orders")
        if c is None:
            T = self.table
            out = []
            for g in range(self.order):
                k, x = 1, g
                while x:
                    x = T[x][g]
                    k += 1
                out.append(k)
            c = self._cache["orders"] = tuple(out)
        return c

    @property
    def exponent(self) -> int:
        return math.lcm(*self.element_orders)

    @property
    def conj(self) -> tuple[tuple[int, ...], ...]:
        """conj[g][x] = g x g^-1."""
        c = self._cache.get("conj")
        if c is None:
            T, inv = self.table, self.inv
            c = tuple(tuple(T[T[g][x]][inv[g]] for x in range(self.order)) for g in range(self.order))
            self._cache["conj"] = c
        return c

    def is_abelian(self) -> bool:
        c = self._cache.get("abelian")
        if c is None:
            T = self.table
            c = all(T[a][b] == T[b][a] for a in range(self.order) for b in range(a))
            self._cache["abelian"] = c
        return c

    # subgroup primitives ---------------------------------------------------

    def closure(self, gens: Iterable[int], base: int = 1) -> int:
        """Subgroup generated by gens together with the subgroup mask base."""
        gens = [g for g in gens if g]
        T = self.table
        mask = base | 1
        queue = list(bits(mask))
        for x in queue:
            row = T[x]
            for s in gens:
                y = row[s]
                if not (mask >> y) & 1:
                    mask |= 1 << y
                    queue.append(y)
        return mask

    def is_subgroup(self, mask: int) -> bool:
        if not mask & 1 or mask >> self.order:
            return False
        T = self.table
        els = bits(mask)
        return all((mask >> T[a][b]) & 1 for a in els for b in els)

    def subgroup(self, elements: Iterable[int]) -> "Subgroup":
        mask = _mask_of(elements)
        if not self.is_subgroup(mask):
            raise GroupError("elements do not form a subgroup")
        return Subgroup(self, mask)

    def generators(self, mask: int) -> tuple[int, ...]:
        """A short generating set of the subgroup mask, greedy by element order."""
        key = ("gens", mask)
        c = self._cache.get(key)
        if c is None:
            orders = self.element_orders
            cands = sorted(bits(mask), key=lambda x: (-orders[x], x))
            cur, out = 1, []
            for g in cands:
                if cur == mask:
                    break
                if not (cur >> g) & 1:
                    cur = self.closure(out + [g])
                    out.append(g)
            c = self._cache[key] = tuple(out)
        return c

    def conjugate_mask(self, g: int, mask: int) -> int:
        """g U g^-1."""
        if not g:
            return mask
        row = self.conj[g]
        m = 0
        for x in bits(mask):
            m |= 1 << row[x]
        return m

    def normalizes(self, g: int, mask: int) -> bool:
        row = self.conj[g]
        return all((mask >> row[x]) & 1 for x in self.generators(mask))

    def normalizer(self, mask: int) -> int:
        key = ("norm", mask)
        c = self._cache.get(key)
        if c is None:
            if self.is_abelian():
                c = self.full
            else:
                c = _mask_of(g for g in range(self.order) if self.normalizes(g, mask))
            self._cache[key] = c
        return c

    def is_normal(self, mask: int) -> bool:
        return all(self.normalizes(g, mask) for g in self.generators(self.full))

    def centralizer(self, mask: int) -> int:
        T = self.table
        gens = self.generators(mask)
        return _mask_of(g for g in range(self.order) if all(T[g][x] == T[x][g] for x in gens))

    def product_mask(self, a: int, b: int) -> int:
        """The set AB, as a mask (a subgroup when one factor normalizes the other)."""
        T = self.table
        m = 0
        for x in bits(a):
            row = T[x]
            for y in bits(b):
                m |= 1 << row[y]
        return m

    def left_transversal(self, mask: int) -> tuple[int, ...]:
        """Minimal-index representatives of the left cosets gU."""
        key = ("ltrans", mask)
        c = self._cache.get(key)
        if c is None:
            T = self.table
            seen, reps = 0, []
            els = bits(mask)
            for g in range(self.order):
                if (seen >> g) & 1:
                    continue
                reps.append(g)
                row = T[g]
                for u in els:
                    seen |= 1 << row[u]
            c = self._cache[key] = tuple(reps)
        return c

    def double_cosets(self, a: int, b: int) -> tuple[int, ...]:
        """Minimal-index representatives of the double cosets A g B."""
        key = ("dcos", a, b)
        c = self._cache.get(key)
        if c is None:
            T = self.table
            ea, eb = bits(a), bits(b)
            seen, reps = 0, []
            for g in range(self.order):
                if (seen >> g) & 1:
                    continue
                reps.append(g)
                left = {T[x][g] for x in ea}
                for y in left:
                    row = T[y]
                    for z in eb:
                        seen |= 1 << row[z]
            c = self._cache[key] = tuple(reps)
        return c

    # derived structure -----------------------------------------------------

    def derived_subgroup(self, mask: int | None = None) -> int:
        mask = self.full if mask is None else mask
        T, inv = self.table, self.inv
        els = bits(mask)
        comms = {T[T[inv[a]][inv[b]]][T[a][b]] for a in els for b in els}
        return self.closure(comms)

    def is_solvable(self) -> bool:
        c = self._cache.get("solvable")
        if c is None:
            m = self.full
            while True:
                d = self.derived_subgroup(m)
                if d == m:
                    break
                m = d
            c = self._cache["solvable"] = m == 1
        return c

    # lattice ---------------------------------------------------------------

    def subgroups(self) -> tuple[int, ...]:
        """All subgroup masks, sorted by (order, mask)."""
        _check_cap(self)
        c = self._cache.get("subgroups")
        if c is None:
            found = _enumerate_solvable(self) if self.is_solvable() else _enumerate_generic(self)
            c = tuple(sorted(found, key=lambda m: (m.bit_count(), m)))
            self._cache["subgroups"] = c
        return c

    def subgroups_of(self, mask: int) -> tuple[int, ...]:
        key = ("subs_of", mask)
        c = self._cache.get(key)
        if c is None:
            c = tuple(s for s in self.subgroups() if s & mask == s)
            self._cache[key] = c
        return c

    def canonical_subgroup(self, mask: int) -> tuple[int, int]:
        """(rep, t) with rep the minimal conjugate of mask and t mask t^-1 = rep."""
        cache = self._cache.setdefault("canon_sub", {})
        hit = cache.get(mask)
        if hit is not None:
            return hit
        if self.is_abelian():
            cache[mask] = (mask, 0)
            return mask, 0
        reach: dict[int, int] = {}
        for g in range(self.order):
            c = self.conjugate_mask(g, mask)
            if c not in reach:
                reach[c] = g
        rep = min(reach)
        g_rep = reach[rep]
        T, inv = self.table, self.inv
        for c, g in reach.items():
            # t c t^-1 = rep with t = g_rep g^-1
            cache[c] = (rep, T[g_rep][inv[g]])
        return cache[mask]

    def subgroup_classes(self) -> tuple[tuple[int, ...], ...]:
        """Conjugacy classes of subgroups; the first entry of each is its minimal rep."""
        c = self._cache.get("sub_classes")
        if c is None:
            groups: dict[int, list[int]] = {}
            for s in self.subgroups():
                rep, _ = self.canonical_subgroup(s)
                groups.setdefault(rep, []).append(s)
            out = []
            for rep in self.subgroups():
                if rep in groups:
                    members = sorted(groups[rep])
                    out.append(tuple(members))
            c = self._cache["sub_classes"] = tuple(out)
        return c

    def class_reps(self) -> tuple[int, ...]:
        return tuple(cl[0] for cl in self.subgroup_classes())

    def normal_subgroups(self) -> tuple[int, ...]:
        c = self._cache.get("normals")
        if c is None:
            c = self._cache["normals"] = tuple(s for s in self.subgroups() if self.is_normal(s))
        return c

    def minimal_normal_subgroups(self) -> tuple[int, ...]:
        ns = [n for n in self.normal_subgroups() if n != 1]
        return tuple(n for n in ns if not any(m != n and m & n == m for m in ns))

    def mobius(self, K: int, H: int) -> int:
        """Moebius function mu(K, H) of the subgroup lattice (0 unless K <= H)."""
        if K & H != K:
            return 0
        return self._mobius_column(H).get(K, 0)

    def _mobius_column(self, H: int) -> dict[int, int]:
        key = ("mu", H)
        c = self._cache.get(key)
        if c is None:
            subs = self.subgroups_of(H)
            c = {H: 1}
            # decreasing order: every L above K is handled before K
            for K in reversed(subs[:-1]):
                c[K] = -sum(v for L, v in c.items() if L & K == K)
            self._cache[key] = c
        return c

    # quotients and subgroups as groups ------------------------------------

    def quotient(self, N: int) -> "Quotient":
        key = ("quot", N)
        c = self._cache.get(key)
        if c is not None:
            return c
        if not self.is_subgroup(N) or not self.is_normal(N):
            raise GroupError("quotient requires a normal subgroup")
        T = self.table
        proj = [-1] * self.order
        reps = []
        nels = bits(N)
        for g in range(self.order):
            if proj[g] >= 0:
                continue
            idx = len(reps)
            reps.append(g)
            for x in nels:
                proj[T[g][x]] = idx
        table = [[proj[T[a][b]] for b in reps] for a in reps]
        name = self.name if N == 1 else f"{self.name}/N{N:x}"
        Q = FiniteGroup(table, name, check=False)
        c = Quotient(Q, GroupHom(self, Q, tuple(proj), check=False), tuple(reps), N)
        self._cache[key] = c
        return c

    def subgroup_group(self, mask: int) -> tuple["FiniteGroup", "GroupHom"]:
        """The subgroup mask as a group in its own right, with its embedding.

        Elements keep the relative order of their indices in self, so the
        identity stays at 0.
        """
        key = ("subgroup_group", mask)
        c = self._cache.get(key)
        if c is None:
            if mask == self.full:
                c = (self, GroupHom(self, self, tuple(range(self.order)), check=False))
            else:
                els = bits(mask)
                pos = {x: i for i, x in enumerate(els)}
                T = self.table
                table = [[pos[T[a][b]] for b in els] for a in els]
                H = FiniteGroup(table, f"{self.name}[{mask:x}]", check=False)
                c = (H, GroupHom(H, self, els, check=False))
            self._cache[key] = c
        return c

    def lattice(self) -> "SubgroupLattice":
        c = self._cache.get("lattice")
        if c is None:
            c = self._cache["lattice"] = SubgroupLattice(self)
        return c


def _validate_table(table) -> None:
    n = len(table)
    full = set(range(n))
    for row in table:
        if len(row) != n or set(row) != full:
            raise GroupError("table is not a Latin square")
    for j in range(n):
        if {table[i][j] for i in range(n)} != full:
            raise GroupError("table is not a Latin square")
    if table[0] != tuple(range(n)) or tuple(r[0] for r in table) != tuple(range(n)):
        raise GroupError("index 0 must be the identity")
    for a in range(n):
        ra = table[a]
        for b in range(n):
            rab = table[ra[b]]
            rb = table[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise GroupError("table is not associative")


def _enumerate_solvable(G: FiniteGroup) -> set[int]:
    # every subgroup of a solvable group is reached from 1 by adjoining
    # elements that normalize the current subgroup
    T = G.table
    n = G.order
    found = {1}
    frontier = [1]
    for V in frontier:
        vels = bits(V)
        done = V
        for g in range(1, n):
            if (done >> g) & 1 or not G.normalizes(g, V):
                continue
            W = V
            p = g
            powers = []
            while not (V >> p) & 1:
                powers.append(p)
                for v in vels:
                    W |= 1 << T[v][p]
                p = T[p][g]
            m = len(powers) + 1
            # g^j V generates the same cyclic group mod V when gcd(j, m) = 1
            for j, q in enumerate(powers, start=1):
                if math.gcd(j, m) == 1:
                    for v in vels:
                        done |= 1 << T[q][v]
            if W not in found:
                found.add(W)
                frontier.append(W)
    return found


def _enumerate_generic(G: FiniteGroup) -> set[int]:
    cyclic = {}
    for g in range(G.order):
        c = G.closure([g])
        cyclic.setdefault(c, g)
    found = {1}
    frontier = [1]
    for V in frontier:
        for C, g in cyclic.items():
            if C & V == C:
                continue
            W = G.closure(list(G.generators(V)) + [g], V)
            if W not in found:
                found.add(W)
                frontier.append(W)
    return found


class Quotient(NamedTuple):
    group: FiniteGroup
    projection: "GroupHom"
    reps: tuple[int, ...]
    kernel: int


@dataclass(frozen=True, eq=True)
class Subgroup:
    """A subgroup of a FiniteGroup, stored as a bitmask over element indices."""

    group: FiniteGroup
    mask: int

    @property
    def members(self) -> tuple[int, ...]:
        return bits(self.mask)

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: int) -> bool:
        return bool((self.mask >> x) & 1)

    def __le__(self, other: "Subgroup") -> bool:
        return self.group is other.group and self.mask & other.mask == self.mask

    def __repr__(self):
        return f"Subgroup({self.group.name}, {list(self.members)})"


# ---------------------------------------------------------------------------
# homomorphisms


class GroupHom:
    """A homomorphism between finite groups given by its image table."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: FiniteGroup, target: FiniteGroup, images: Sequence[int], *, check: bool = True):
        self.source = source
        self.target = target
        self.images = tuple(images)
        if check:
            if len(self.images) != source.order:
                raise GroupError("image table has the wrong length")
            if not self.is_homomorphism():
                raise GroupError("map is not a homomorphism")

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __eq__(self, other):
        return (
            isinstance(other, GroupHom)
            and self.source is other.source
            and self.target is other.target
            and self.images == other.images
        )

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"GroupHom({self.source.name} -> {self.target.name}, {list(self.images)})"

    def is_homomorphism(self) -> bool:
        S, T, f = self.source.table, self.target.table, self.images
        if f[0] != 0:
            return False
        n = self.source.order
        return all(f[S[a][b]] == T[f[a]][f[b]] for a in range(n) for b in range(n))

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self o inner."""
        if inner.target is not self.source:
            raise GroupError("cannot compose: groups do not match")
        return GroupHom(inner.source, self.target, tuple(self.images[x] for x in inner.images), check=False)

    def kernel(self) -> int:
        return _mask_of(x for x, y in enumerate(self.images) if y == 0)

    def image_mask(self, mask: int | None = None) -> int:
        mask = self.source.full if mask is None else mask
        return _mask_of(self.images[x] for x in bits(mask))

    def preimage_mask(self, mask: int) -> int:
        return _mask_of(x for x, y in enumerate(self.images) if (mask >> y) & 1)

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.source.order == self.target.order

    def inverse(self) -> "GroupHom":
        if not self.is_bijective():
            raise GroupError("only isomorphisms can be inverted")
        inv = [0] * self.target.order
        for x, y in enumerate(self.images):
            inv[y] = x
        return GroupHom(self.target, self.source, tuple(inv), check=False)

    @classmethod
    def identity(cls, G: FiniteGroup) -> "GroupHom":
        return cls(G, G, tuple(range(G.order)), check=False)

    @classmethod
    def conjugation(cls, G: FiniteGroup, g: int) -> "GroupHom":
        return cls(G, G, G.conj[g], check=False)


# ---------------------------------------------------------------------------
# isomorphism search


def _generating_sequence(G: FiniteGroup) -> tuple[int, ...]:
    return G.generators(G.full)


def _same_invariants(G: FiniteGroup, H: FiniteGroup) -> bool:
    if G.order != H.order:
        return False
    if sorted(G.element_orders) != sorted(H.element_orders):
        return False
    return G.is_abelian() == H.is_abelian()


def isomorphisms(G: FiniteGroup, H: FiniteGroup) -> Iterator[GroupHom]:
    """All isomorphisms G -> H, by backtracking over images of generators."""
    if not _same_invariants(G, H):
        return
    gens = _generating_sequence(G)
    og, oh = G.element_orders, H.element_orders
    cands = [[h for h in range(H.order) if oh[h] == og[g]] for g in gens]
    TG, TH = G.table, H.table
    n = G.order

    def extend(level: int, f: list[int], used: int, domain: list[int]):
        if level == len(gens):
            yield GroupHom(G, H, tuple(f), check=False)
            return
        g = gens[level]
        active = gens[: level + 1]
        for h in cands[level]:
            if (used >> h) & 1:
                continue
            f2 = f[:]
            u2 = used
            queue = list(domain)
            ok = True
            f2[g] = h
            u2 |= 1 << h
            queue.append(g)
            seen = _mask_of(queue)
            i = 0
            while ok and i < len(queue):
                x = queue[i]
                i += 1
                fx = f2[x]
                row = TG[x]
                hrow = TH[fx]
                for s in active:
                    y = row[s]
                    fy = hrow[f2[s]]
                    if f2[y] < 0:
                        if (u2 >> fy) & 1:
                            ok = False
                            break
                        f2[y] = fy
                        u2 |= 1 << fy
                    elif f2[y] != fy:
                        ok = False
                        break
                    if not (seen >> y) & 1:
                        seen |= 1 << y
                        queue.append(y)
            if ok:
                yield from extend(level + 1, f2, u2, queue)

    f0 = [-1] * n
    f0[0] = 0
    yield from extend(0, f0, 1, [0])


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> GroupHom | None:
    """Some isomorphism G -> H, or None if the groups are not isomorphic."""
    for f in isomorphisms(G, H):
        # cheap insurance: the witness is re-checked against both tables
        if f.is_homomorphism() and f.is_bijective():
            return f
        raise AssertionError("isomorphism search produced an invalid map")
    return None


def automorphisms(G: FiniteGroup) -> tuple[GroupHom, ...]:
    c = G._cache.get("aut")
    if c is None:
        _check_cap(G)
        c = G._cache["aut"] = tuple(isomorphisms(G, G))
    return c


def outer_classes(G: FiniteGroup) -> tuple[tuple[GroupHom, ...], ...]:
    """Automorphisms partitioned into cosets of the inner automorphism group."""
    c = G._cache.get("out")
    if c is None:
        inner = sorted({G.conj[g] for g in range(G.order)})
        auts = automorphisms(G)
        by_images = {f.images: f for f in auts}
        assigned: set = set()
        classes = []
        for f in auts:
            if f.images in assigned:
                continue
            coset = sorted({tuple(f.images[x] for x in c) for c in inner})
            assigned.update(coset)
            classes.append(tuple(by_images[im] for im in coset))
        c = G._cache["out"] = tuple(classes)
    return c


# ---------------------------------------------------------------------------
# lattice object


class SubgroupLattice:
    """Subgroups of G with containment, Moebius values and conjugacy classes."""

    def __init__(self, G: FiniteGroup):
        self.group = G
        self.subgroups = G.subgroups()
        self.index = {m: i for i, m in enumerate(self.subgroups)}
        self.conj_classes = G.subgroup_classes()
        self._mobius = None

    def __len__(self):
        return len(self.subgroups)

    def leq(self, i: int, j: int) -> bool:
        a, b = self.subgroups[i], self.subgroups[j]
        return a & b == a

    def zeta_matrix(self) -> list[list[int]]:
        n = len(self.subgroups)
        return [[1 if self.leq(i, j) else 0 for j in range(n)] for i in range(n)]

    @property
    def mobius(self) -> list[list[int]]:
        """mu as a matrix: the inverse of the zeta matrix over the integers."""
        if self._mobius is None:
            subs = self.subgroups
            n = len(subs)
            mu = [[0] * n for _ in range(n)]
            # zeta is unitriangular in this ordering; back-substitute per column
            for j in range(n):
                mu[j][j] = 1
                for i in range(j - 1, -1, -1):
                    if subs[i] & subs[j] != subs[i]:
                        continue
                    mu[i][j] = -sum(mu[k][j] for k in range(i + 1, j + 1) if subs[i] & subs[k] == subs[i])
            self._mobius = mu
        return self._mobius

    def mu(self, K: int, H: int) -> int:
        return self.group.mobius(K, H)

    def members(self, i: int) -> tuple[int, ...]:
        return bits(self.subgroups[i])


def subgroup_lattice(G: FiniteGroup) -> SubgroupLattice:
    return G.lattice()


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    return [Subgroup(G, m) for m in G.normal_subgroups()]


def quotient(G: FiniteGroup, N: "Subgroup | int") -> tuple[FiniteGroup, GroupHom]:
    mask = N.mask if isinstance(N, Subgroup) else N
    q = G.quotient(mask)
    return q.group, q.projection


def conjugate_subgroup(g: int, U: "Subgroup") -> Subgroup:
    return Subgroup(U.group, U.group.conjugate_mask(g, U.mask))


# ---------------------------------------------------------------------------
# constructions and catalog


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], f"C{n}", check=False)


def metacyclic_group(n: int, m: int, r: int, s: int, name: str) -> FiniteGroup:
    """<a, x | a^n, x^m = a^s, x a x^-1 = a^r>, element a^i x^j at index i + n*j."""
    r %= n
    if pow(r, m, n) != 1 % n or (s * r - s) % n:
        raise GroupError("inconsistent metacyclic parameters")
    rp = [pow(r, j, n) for j in range(m)]
    size = n * m
    table = []
    for u in range(size):
        i, j = u % n, u // n
        row = []
        for v in range(size):
            k, l = v % n, v // n
            e = i + k * rp[j]
            jl = j + l
            if jl >= m:
                e += s
                jl -= m
            row.append(e % n + n * jl)
        table.append(row)
    return FiniteGroup(table, name, check=False)


def dihedral_group(order: int) -> FiniteGroup:
    """Dihedral group of the given (even) order; a^i x^j at index i + (order/2)*j."""
    if order % 2 or order < 2:
        raise GroupError("dihedral groups have even order")
    n = order // 2
    return metacyclic_group(n, 2, -1, 0, f"D{order}")


def quaternion_group(order: int) -> FiniteGroup:
    """Generalized quaternion / dicyclic group of order 4k."""
    if order % 4 or order < 8:
        raise GroupError("dicyclic groups have order divisible by 4 and at least 8")
    n = order // 2
    name = "Q8" if order == 8 else f"Dic{order}"
    return metacyclic_group(n, 2, -1, n // 2, name)


def permutation_group(generators: Sequence[Sequence[int]], name: str = "P") -> FiniteGroup:
    """Group generated by one-line permutations; elements in lexicographic order."""
    gens = [tuple(int(x) for x in p) for p in generators]
    if not gens:
        raise GroupError("empty generator set")
    d = len(gens[0])
    for p in gens:
        if len(p) != d or sorted(p) != list(range(d)):
            raise GroupError(f"not a permutation of 0..{d - 1}: {p}")
    ident = tuple(range(d))
    seen = {ident}
    queue = [ident]
    for p in queue:
        for q in gens:
            r = tuple(p[q[i]] for i in range(d))
            if r not in seen:
                seen.add(r)
                queue.append(r)
    els = sorted(seen)
    pos = {p: i for i, p in enumerate(els)}
    # composition p*q acts as x -> p(q(x))
    table = [[pos[tuple(p[q[i]] for i in range(d))] for q in els] for p in els]
    G = FiniteGroup(table, name, check=False)
    G._cache["perms"] = tuple(els)
    return G


def symmetric_group(n: int) -> FiniteGroup:
    if n <= 1:
        return cyclic_group(1)
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return permutation_group(gens, f"S{n}")


def alternating_group(n: int) -> FiniteGroup:
    if n <= 2:
        return cyclic_group(1)
    gens = []
    for k in range(2, n):
        p = list(range(n))
        p[0], p[1], p[k] = 1, k, 0
        gens.append(tuple(p))
    return permutation_group(gens, f"A{n}")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with (g, h) at index g*|H| + h."""
    key = ("dp", H)
    c = G._cache.get(key)
    if c is None:
        m = H.order
        TG, TH = G.table, H.table
        table = [
            [TG[a // m][b // m] * m + TH[a % m][b % m] for b in range(G.order * m)]
            for a in range(G.order * m)
        ]
        c = FiniteGroup(table, f"{G.name}x{H.name}", check=False)
        c._cache["factors"] = (G, H)
        G._cache[key] = c
    return c


CATALOG_NAMES = (
    "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7",
    "C8", "C4xC2", "C2^3", "D8", "Q8", "C9", "C3xC3", "C10", "D10", "C11",
    "C12", "C2xC6", "A4", "D12", "Dic12", "C13", "C14", "D14", "C15",
)

_registry: dict[str, FiniteGroup] = {}


def _build_atom(name: str) -> FiniteGroup:
    m = re.fullmatch(r"C(\d+)\^(\d+)", name)
    if m:
        base, k = cyclic_group(int(m.group(1))), int(m.group(2))
        if k < 1:
            raise GroupError(f"bad power in {name!r}")
        G = base
        for _ in range(k - 1):
            G = direct_product(G, base)
        return FiniteGroup(G.table, name, check=False)
    m = re.fullmatch(r"([A-Za-z]+)(\d+)", name)
    if not m:
        raise GroupError(f"unknown group name {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "C":
        return cyclic_group(n)
    if kind == "D":
        return dihedral_group(n)
    if kind == "S":
        return symmetric_group(n)
    if kind == "A":
        return alternating_group(n)
    if kind in ("Q", "Dic"):
        return quaternion_group(n)
    raise GroupError(f"unknown group name {name!r}")


def _build_named(text: str) -> FiniteGroup:
    text = text.strip().replace("×", "x").replace(" ", "")
    if text in _registry:
        return _registry[text]
    parts = text.split("x")
    if any(not p for p in parts):
        raise GroupError(f"malformed group name {text!r}")
    if len(parts) == 1:
        G = _build_atom(text)
    else:
        G = _build_named(parts[0])
        for p in parts[1:]:
            G = direct_product(G, _build_named(p))
        G = FiniteGroup(G.table, text, check=False)
    if G.order > 4096:
        raise GroupError(f"{text} is too large to tabulate")
    G.name = text
    _registry[text] = G
    return G


def build_group(text) -> FiniteGroup:
    """Build a group from a catalog name, generator list, table dict or JSON file.

    Catalog names: Cn, Dn (dihedral of order n), Sn, An, Q8, Dicn, Cp^k,
    and products joined by 'x' such as "C2xC4". Results for names are
    memoized, so repeated calls share one group object.
    """
    if isinstance(text, FiniteGroup):
        return text
    if isinstance(text, dict):
        if "table" not in text:
            raise GroupError("table specification needs a 'table' entry")
        table = text["table"]
        if "order" in text and int(text["order"]) != len(table):
            raise GroupError("declared order does not match the table")
        return FiniteGroup(table, text.get("name", "G"))
    if isinstance(text, (list, tuple)):
        return permutation_group(text)
    if isinstance(text, Path) or (isinstance(text, str) and text.endswith(".json")):
        path = Path(text)
        data = json.loads(path.read_text())
        if isinstance(data, list):
            return permutation_group(data, path.stem)
        data.setdefault("name", path.stem)
        return build_group(data)
    if isinstance(text, str):
        return _build_named(text)
    raise GroupError(f"cannot build a group from {text!r}")


def catalog(max_order: int = 15) -> list[FiniteGroup]:
    """Isomorphism-class representatives of all groups of order <= max_order.

    Complete up to order 15; asking for more raises, since the built-in list
    does not cover larger orders.
    """
    if max_order > 15:
        raise GroupError("the built-in catalog is complete only up to order 15")
    out = []
    for name in CATALOG_NAMES:
        G = build_group(name)
        if G.order <= max_order:
            out.append(G)
    return out
