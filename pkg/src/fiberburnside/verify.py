"""A battery of exact consistency checks for one group and fiber.

Each check returns a :class:`CheckResult`; ``run_battery`` collects them in a
fixed order so reports are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .bisets import (
    act,
    biset_ring,
    canonical_decomposition,
    defl,
    ind,
    inf,
    res,
    tw,
    BisetElement,
)
from .fbring import burnside_ring, idempotent_of, species
from .fiber import dual_group, parse_fiber
from .groups import FiniteGroup, get_order_cap, popcount
from .lattice import composition_factor
from .pairs import (
    PairClass,
    deflate_idempotent,
    double_product,
    is_bpair,
    m_constant,
    m_via_sigma,
    quotient_pair,
)

__all__ = ["CheckResult", "run_battery", "CHECKS"]


@dataclass
class CheckResult:
    name: str
    ok: bool | None  # None: skipped
    detail: str = ""

    @property
    def status(self) -> str:
        return {True: "pass", False: "FAIL", None: "skip"}[self.ok]


def check_idempotents(G: FiniteGroup, A) -> CheckResult:
    R = burnside_ring(G, A)
    xps = R.xpairs()
    es = [idempotent_of(R, p) for p in xps]
    total = R.zero()
    for e in es:
        total = total + e
    if total != R.one():
        return CheckResult("idempotents", False, "sum differs from 1")
    for i, e in enumerate(es):
        for j in range(i, len(es)):
            prod = e * es[j]
            if prod != (e if i == j else R.zero()):
                return CheckResult("idempotents", False, f"e{i} * e{j} is wrong")
        for j, p in enumerate(xps):
            s = species(e, p)
            if s != (1 if i == j else 0):
                return CheckResult("idempotents", False, f"species of e{i} at pair {j} is {s}")
    return CheckResult("idempotents", True, f"{len(es)} idempotents")


def check_species_multiplicative(G: FiniteGroup, A) -> CheckResult:
    R = burnside_ring(G, A)
    xps = R.xpairs()
    basis = [R.basis_element(b) for b in R.basis]
    for x in basis:
        sx = [species(x, p) for p in xps]
        for y in basis:
            xy = x * y
            for p, a in zip(xps, sx):
                if species(xy, p) != a * species(y, p):
                    return CheckResult("species-multiplicative", False, f"{x} * {y} at {p}")
    return CheckResult("species-multiplicative", True, f"{len(basis)}^2 products")


def check_deflation(G: FiniteGroup, A) -> CheckResult:
    n = 0
    for Phi in dual_group(G, A).kchars():
        for N in G.normal_subgroups():
            s, _ = deflate_idempotent(G, Phi, N)
            if s != m_constant(G, Phi, N):
                return CheckResult("deflation-m", False, f"Phi #{Phi.id}, |N|={popcount(N)}")
            n += 1
    return CheckResult("deflation-m", True, f"{n} cases")


def check_transitivity(G: FiniteGroup, A) -> CheckResult:
    n = 0
    normals = G.normal_subgroups()
    for Phi in dual_group(G, A).kchars():
        for N in normals:
            Q, PhiN = quotient_pair(G, Phi, N)
            proj = G.quotient(N).projection
            for M in normals:
                if M & N != N:
                    continue
                rhs = m_constant(G, Phi, N) * m_constant(Q, PhiN, proj.image_mask(M))
                if m_constant(G, Phi, M) != rhs:
                    return CheckResult("m-transitivity", False, f"Phi #{Phi.id}")
                n += 1
    return CheckResult("m-transitivity", True, f"{n} chains")


def check_sigma(G: FiniteGroup, A) -> CheckResult:
    n = 0
    normals = G.normal_subgroups()
    for Phi in dual_group(G, A).kchars():
        for M in normals:
            m = m_constant(G, Phi, M)
            for N in normals:
                if m_via_sigma(G, Phi, M, N) != m:
                    return CheckResult("m-sigma", False, f"Phi #{Phi.id}")
                n += 1
    return CheckResult("m-sigma", True, f"{n} cases")


def check_bpair_modes(G: FiniteGroup, A) -> CheckResult:
    for Phi in dual_group(G, A).kchars():
        if is_bpair(G, Phi) != is_bpair(G, Phi, strict=True):
            return CheckResult("bpair-minimal-vs-all", False, f"Phi #{Phi.id}")
    return CheckResult("bpair-minimal-vs-all", True)


def check_elementary(G: FiniteGroup, A) -> CheckResult:
    R = burnside_ring(G, A)
    basis = [R.basis_element(b) for b in R.basis]
    ops: list[BisetElement] = []
    for H in G.class_reps():
        ops.append(res(G, H, A))
        ops.append(ind(G, H, A))
    for N in G.normal_subgroups():
        ops.append(defl(G, N, A))
        ops.append(inf(G, N, A))
    for lam in dual_group(G, A).elements:
        ops.append(tw(G, lam, A))
    n = 0
    for x in ops:
        src = burnside_ring(x.right, A)
        vs = basis if x.right is G else [src.basis_element(b) for b in src.basis]
        for v in vs:
            if act(x, v, "closed") != act(x, v, "compose"):
                return CheckResult("closed-vs-compose", False, f"{x.kind} on {v}")
            n += 1
    return CheckResult("closed-vs-compose", True, f"{n} actions")


def check_canonical(G: FiniteGroup, A) -> CheckResult:
    if G.order * G.order > get_order_cap():
        return CheckResult("canonical-decomposition", None, "G x G above the order cap")
    ring = biset_ring(G, G, A)
    for b in ring.basis:
        dec = canonical_decomposition(G, G, A, b)
        if dec.compose() != BisetElement(G, G, ring.basis_element(b)):
            return CheckResult("canonical-decomposition", False, f"{b}")
    return CheckResult("canonical-decomposition", True, f"{len(ring.basis)} basis elements")


def check_double_product(G: FiniteGroup, A) -> CheckResult:
    if G.order > 6:
        return CheckResult("double-product", None, "only run for |G| <= 6")
    ring = biset_ring(G, G, A)
    chars = dual_group(G, A).kchars()
    R = burnside_ring(G, A)
    n = 0
    for b in ring.basis:
        for Phi in chars:
            eG = idempotent_of(R, R.xpair_rep(G.full, Phi))
            for Psi in chars:
                lhs, s = double_product(G, G, b, Phi, Psi)
                if lhs != eG.scale(s):
                    return CheckResult("double-product", False, f"{b}")
                n += 1
    return CheckResult("double-product", True, f"{n} cases")


def check_composition_factors(G: FiniteGroup, A) -> CheckResult:
    if G.order * G.order > get_order_cap():
        return CheckResult("E-orbit", None, "G x G above the order cap")
    n = 0
    for Phi in dual_group(G, A).kchars():
        if not is_bpair(G, Phi):
            continue
        d = composition_factor(PairClass(G, Phi), check_E=True)
        if d.E_orbit_size != d.out_orbit_size:
            return CheckResult("E-orbit", False, f"Phi #{Phi.id}")
        n += 1
    return CheckResult("E-orbit", True, f"{n} B^A-pairs")


CHECKS: list[Callable[[FiniteGroup, object], CheckResult]] = [
    check_idempotents,
    check_species_multiplicative,
    check_deflation,
    check_transitivity,
    check_sigma,
    check_bpair_modes,
    check_elementary,
    check_canonical,
    check_double_product,
    check_composition_factors,
]


def run_battery(G: FiniteGroup, A) -> list[CheckResult]:
    A = parse_fiber(A)
    return [chk(G, A) for chk in CHECKS]
