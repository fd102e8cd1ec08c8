"""Exact computations in A-fibered Burnside rings and their biset functors."""

from .cyclo import Cyclotomic
from .groups import FiniteGroup, GroupError, OrderCapExceeded, build_group, catalog, order_cap
from .fiber import FiberGroup, KChar, dual_group, parse_fiber
from .fbring import BurnsideRing, FBRElement, XPair, burnside_ring, idempotent, idempotent_of, species
from .bisets import act, compose, canonical_decomposition, defl, ind, inf, iso, res, tw
from .pairs import (
    PairClass,
    beta,
    deflate_idempotent,
    evaluate_E,
    find_pair_isomorphism,
    is_bpair,
    m_constant,
    m_via_sigma,
    pair_leq,
)
from .lattice import build_poset, chain_report, closed_sets, composition_factor, is_closed

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic",
    "FiniteGroup",
    "GroupError",
    "OrderCapExceeded",
    "build_group",
    "catalog",
    "order_cap",
    "FiberGroup",
    "KChar",
    "dual_group",
    "parse_fiber",
    "BurnsideRing",
    "FBRElement",
    "XPair",
    "burnside_ring",
    "idempotent",
    "idempotent_of",
    "species",
    "act",
    "compose",
    "canonical_decomposition",
    "defl",
    "ind",
    "inf",
    "iso",
    "res",
    "tw",
    "PairClass",
    "beta",
    "deflate_idempotent",
    "evaluate_E",
    "find_pair_isomorphism",
    "is_bpair",
    "m_constant",
    "m_via_sigma",
    "pair_leq",
    "build_poset",
    "chain_report",
    "closed_sets",
    "composition_factor",
    "is_closed",
]
