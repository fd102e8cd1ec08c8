"""The poset of B^A-pair classes up to an order bound, its closed subsets and
the composition factors they correspond to.

Closed subsets of the full poset correspond to subfunctors of the fibered
Burnside functor. Here the poset is truncated at a bound on |G|, so a closed
set of the truncation describes the subfunctor generated in order <= bound.
Every output carries that reading in its ``note`` field.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .fiber import KChar, dual_group, parse_fiber, push_through
from .groups import FiniteGroup, GroupError, catalog, find_isomorphism, outer_classes, popcount
from .pairs import PairClass, aut_orbit, evaluate_E, is_bpair, pair_leq, phi_label

__all__ = [
    "BPairPoset",
    "ClosedSet",
    "CompositionFactorData",
    "TRUNCATION_NOTE",
    "build_poset",
    "closed_sets",
    "count_closed_sets",
    "is_closed",
    "composition_factor",
    "chain_report",
    "to_dot",
    "closed_sets_json",
    "composition_csv",
]

log = logging.getLogger(__name__)

TRUNCATION_NOTE = (
    "bounded-order reading: closed sets of the truncated poset describe "
    "subfunctors generated by groups of order at most the bound"
)
CLOSED_SET_CAP = 2**20


class EnumerationCapExceeded(RuntimeError):
    pass


@dataclass
class BPairPoset:
    nodes: list[PairClass]
    leq: list[list[bool]]
    bound: int
    fiber: object
    witnesses: dict[tuple[int, int], int] = field(default_factory=dict)
    complete: bool = True

    def __len__(self):
        return len(self.nodes)

    def up(self, i: int) -> int:
        """Bitset of nodes j with i <= j."""
        return sum(1 << j for j in range(len(self.nodes)) if self.leq[i][j])

    def covers(self) -> list[tuple[int, int]]:
        """Pairs (i, j) with i < j and nothing strictly in between."""
        n = len(self.nodes)
        out = []
        for i in range(n):
            for j in range(n):
                if i == j or not self.leq[i][j]:
                    continue
                if any(k not in (i, j) and self.leq[i][k] and self.leq[k][j] for k in range(n)):
                    continue
                out.append((i, j))
        return out

    def index_of(self, pc: PairClass) -> int:
        for i, node in enumerate(self.nodes):
            if node == pc:
                return i
        raise KeyError(pc)


@dataclass(frozen=True)
class ClosedSet:
    poset: BPairPoset = field(compare=False, hash=False, repr=False)
    members: int

    def indices(self) -> list[int]:
        return [i for i in range(len(self.poset.nodes)) if (self.members >> i) & 1]

    def __len__(self):
        return popcount(self.members)


@dataclass
class CompositionFactorData:
    pair: PairClass
    out_orbit_size: int
    stabilizer_index: int
    label: str
    E_orbit_size: int | None = None


def _orbit_reps(G: FiniteGroup, A) -> list[KChar]:
    seen: set[int] = set()
    reps = []
    for chi in dual_group(G, A).kchars():
        if chi.id in seen:
            continue
        orb = aut_orbit(G, chi)
        seen.update(c.id for c in orb)
        reps.append(orb[0])
    return reps


def build_poset(bound: int, A, groups: Sequence[FiniteGroup] | None = None) -> BPairPoset:
    """B^A-pair classes with |G| <= bound, ordered by the quotient relation.

    With groups=None the built-in catalog is used, which is complete up to
    order 15. A caller-supplied list is trusted for completeness and the
    result is marked incomplete when the bound exceeds 15.
    """
    A = parse_fiber(A)
    if bound < 1:
        raise GroupError("the order bound must be positive")
    complete = True
    if groups is None:
        groups = catalog(bound)
    else:
        groups = [G for G in groups if G.order <= bound]
        complete = bound <= 15 and _covers_catalog(groups, bound)
    nodes: list[PairClass] = []
    for G in sorted(groups, key=lambda g: g.order):
        for chi in _orbit_reps(G, A):
            if not is_bpair(G, chi):
                continue
            pc = PairClass(G, chi)
            if any(pc == old for old in nodes):
                log.warning("duplicate pair class %s skipped", pc)
                continue
            nodes.append(pc)
    n = len(nodes)
    leq = [[False] * n for _ in range(n)]
    witnesses: dict[tuple[int, int], int] = {}
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            N = pair_leq((a.group, a.phi), (b.group, b.phi))
            if N is not None:
                leq[i][j] = True
                witnesses[(i, j)] = N
    return BPairPoset(nodes, leq, bound, A, witnesses, complete)


def _covers_catalog(groups: Sequence[FiniteGroup], bound: int) -> bool:
    for C in catalog(bound):
        if not any(G.order == C.order and find_isomorphism(G, C) is not None for G in groups):
            return False
    return True


def is_closed(poset: BPairPoset, members: int | Iterable[int]) -> bool:
    """Upward closed: a member below x forces x to be a member."""
    if not isinstance(members, int):
        members = sum(1 << i for i in members)
    for i in range(len(poset.nodes)):
        if (members >> i) & 1 and poset.up(i) & ~members:
            return False
    return True


def _top_down_order(poset: BPairPoset) -> list[int]:
    # larger elements first: sort by the number of elements above
    return sorted(range(len(poset.nodes)), key=lambda i: (bin(poset.up(i)).count("1"), i))


def _walk(poset: BPairPoset, visit) -> None:
    order = _top_down_order(poset)
    ups = [poset.up(i) for i in range(len(poset.nodes))]

    def rec(k: int, S: int):
        if k == len(order):
            visit(S)
            return
        i = order[k]
        rec(k + 1, S)
        if ups[i] & ~(1 << i) & ~S == 0:
            rec(k + 1, S | (1 << i))

    rec(0, 0)


def closed_sets(poset: BPairPoset, cap: int = CLOSED_SET_CAP) -> list[ClosedSet]:
    """All upward-closed subsets, sorted by size then bitset."""
    out: list[int] = []

    def visit(S: int):
        if len(out) >= cap:
            raise EnumerationCapExceeded(f"more than {cap} closed sets; use count_closed_sets")
        out.append(S)

    _walk(poset, visit)
    out.sort(key=lambda s: (popcount(s), s))
    return [ClosedSet(poset, s) for s in out]


def count_closed_sets(poset: BPairPoset) -> int:
    """Number of closed sets, i.e. of antichains (their sets of minimal elements)."""
    order = _top_down_order(poset)
    ups = [poset.up(i) for i in range(len(poset.nodes))]
    memo: dict[tuple[int, int], int] = {}

    def rec(k: int, S: int) -> int:
        if k == len(order):
            return 1
        # only the part of S that can still constrain later nodes matters
        rest = 0
        for i in order[k:]:
            rest |= ups[i]
        key = (k, S & rest)
        if key in memo:
            return memo[key]
        i = order[k]
        total = rec(k + 1, S)
        if ups[i] & ~(1 << i) & ~S == 0:
            total += rec(k + 1, S | (1 << i))
        memo[key] = total
        return total

    return rec(0, 0)


def composition_factor(pc: PairClass, check_E: bool = False) -> CompositionFactorData:
    """Data of the simple quotient E_{(G,Phi)} / J_{(G,Phi)}.

    The factor is parametrized by (G, 1, 1, V_Phi) where V_Phi is induced from
    G* x| Out(G)_Phi, so dim V_Phi = [Out(G) : Out(G)_Phi], the orbit size.
    With check_E the orbit size is compared against the idempotents of G
    spanning E_{(G,Phi)}(G).
    """
    G, Phi = pc.group, pc.phi
    if not is_bpair(G, Phi):
        raise GroupError(f"{pc} is not a B^A-pair")
    orbit = aut_orbit(G, Phi)
    outs = outer_classes(G)
    fixed = sum(1 for cls in outs if push_through(Phi, cls[0]) == Phi)
    if len(outs) % fixed:
        raise AssertionError("stabilizer of Phi is not a subgroup of Out(G)")
    index = len(outs) // fixed
    if index != len(orbit):
        raise AssertionError("orbit size differs from the stabilizer index")
    label = f"({G.name}, 1, 1, V[dim {index}])"
    data = CompositionFactorData(pc, len(orbit), index, label)
    if check_E:
        keys = evaluate_E((G, Phi), G)
        if any(k[0] != G.full for k in keys):
            raise AssertionError("E(G) contains an idempotent of a proper subgroup")
        if {k[1] for k in keys} != {c.id for c in orbit}:
            raise AssertionError("E(G) is not spanned by the Out-orbit idempotents")
        data.E_orbit_size = len(keys)
    return data


def chain_report(F: ClosedSet, Fp: ClosedSet) -> PairClass:
    """The class [G, Phi] with F = E_{(G,Phi)} + F' for adjacent closed sets F' < F."""
    if F.poset is not Fp.poset:
        raise GroupError("closed sets from different posets")
    if Fp.members & ~F.members:
        raise GroupError("F' is not contained in F")
    diff = F.members & ~Fp.members
    if popcount(diff) != 1:
        raise GroupError("closed sets are not adjacent")
    return F.poset.nodes[diff.bit_length() - 1]


# ---------------------------------------------------------------------------
# export


def _node_label(pc: PairClass) -> str:
    return f"{pc.group.name} | {phi_label(pc.phi)}"


def to_dot(poset: BPairPoset) -> str:
    lines = ["digraph bpairs {", f'  label="{_dot_escape(TRUNCATION_NOTE)}";', "  rankdir=BT;"]
    for i, pc in enumerate(poset.nodes):
        lines.append(f'  n{i} [label="{_dot_escape(_node_label(pc))}"];')
    for i, j in poset.covers():
        N = poset.witnesses[(i, j)]
        lines.append(f'  n{i} -> n{j} [label="|N|={popcount(N)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def poset_json(poset: BPairPoset) -> dict:
    return {
        "bound": poset.bound,
        "fiber": str(poset.fiber),
        "complete": poset.complete,
        "note": TRUNCATION_NOTE,
        "nodes": [
            {"index": i, "group": pc.group.name, "order": pc.group.order, "phi": [str(x) for x in pc.phi.t]}
            for i, pc in enumerate(poset.nodes)
        ],
        "relations": [
            {"below": i, "above": j, "witness": sorted(_members(poset.witnesses[(i, j)]))}
            for (i, j) in sorted(poset.witnesses)
            if i != j
        ],
    }


def _members(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if (mask >> i) & 1]


def closed_sets_json(poset: BPairPoset, sets: Sequence[ClosedSet] | None = None) -> str:
    sets = closed_sets(poset) if sets is None else sets
    data = poset_json(poset)
    data["closed_sets"] = [s.indices() for s in sets]
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def composition_csv(poset: BPairPoset) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "group", "phi", "out_orbit_size", "dim_V", "label"])
    for i, pc in enumerate(poset.nodes):
        d = composition_factor(pc)
        w.writerow([i, pc.group.name, phi_label(pc.phi), d.out_orbit_size, d.stabilizer_index, d.label])
    return buf.getvalue()
