"""Command-line driver.

Exit codes: 0 success, 1 a verified property failed, 2 bad input,
3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .cyclo import rational_str
from .fbring import burnside_ring, idempotent_of, species
from .fiber import dual_group, parse_fiber
from .groups import GroupError, OrderCapExceeded, bits, build_group, catalog, order_cap, popcount
from .lattice import (
    EnumerationCapExceeded,
    build_poset,
    closed_sets_json,
    composition_csv,
    count_closed_sets,
    poset_json,
    to_dot,
)
from .pairs import is_bpair, m_constant, m_table
from .verify import run_battery

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3


class ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _phi_json(phi) -> dict:
    return {"id": phi.id, "t": [rational_str(x) for x in phi.t]}


def _subgroup_json(G, mask: int) -> dict:
    return {"elements": list(bits(mask)), "order": popcount(mask)}


def cmd_idempotents(args) -> tuple[str, int]:
    G = build_group(args.group)
    A = parse_fiber(args.fiber)
    R = burnside_ring(G, A)
    xps = R.xpairs()
    out, failed = [], False
    for p in xps:
        e = idempotent_of(R, p)
        ok = all(species(e, q) == (1 if q == p else 0) for q in xps)
        failed |= not ok
        out.append(
            {
                "subgroup": _subgroup_json(G, p.mask),
                "Phi": _phi_json(p.phi),
                "terms": e.to_json(),
                "marks_ok": ok,
            }
        )
    data = {"group": G.name, "fiber": str(A), "idempotents": out}
    return _dump(data), EXIT_FAIL if failed else EXIT_OK


def cmd_mconst(args) -> tuple[str, int]:
    G = build_group(args.group)
    A = parse_fiber(args.fiber)
    rows = []
    for Phi in dual_group(G, A).kchars():
        table = m_table(G, Phi)
        rows.append(
            {
                "Phi": _phi_json(Phi),
                "m": [
                    {"N": _subgroup_json(G, N), "value": rational_str(v)}
                    for N, v in sorted(table.items(), key=lambda kv: (popcount(kv[0]), kv[0]))
                ],
            }
        )
    if args.format == "csv":
        lines = ["Phi,N_order,N_elements,m"]
        for r in rows:
            for e in r["m"]:
                els = " ".join(str(x) for x in e["N"]["elements"])
                lines.append(f"{r['Phi']['id']},{e['N']['order']},{els},{e['value']}")
        return "\n".join(lines) + "\n", EXIT_OK
    return _dump({"group": G.name, "fiber": str(A), "table": rows}), EXIT_OK


def cmd_bpairs(args) -> tuple[str, int]:
    A = parse_fiber(args.fiber)
    poset = build_poset(args.max_order, A)
    data = poset_json(poset)
    if args.strict:
        for pc in poset.nodes:
            if not is_bpair(pc.group, pc.phi, strict=True):
                return _dump(data), EXIT_FAIL
    rejected = []
    for G in catalog(args.max_order):
        for Phi in dual_group(G, A).kchars():
            if is_bpair(G, Phi):
                continue
            N = next(N for N in G.minimal_normal_subgroups() if m_constant(G, Phi, N) != 0)
            rejected.append(
                {"group": G.name, "Phi": _phi_json(Phi), "witness_N": _subgroup_json(G, N),
                 "m": rational_str(m_constant(G, Phi, N))}
            )
    data["rejected"] = rejected
    return _dump(data), EXIT_OK


def cmd_poset(args) -> tuple[str, int]:
    poset = build_poset(args.max_order, parse_fiber(args.fiber))
    if args.format == "dot":
        return to_dot(poset), EXIT_OK
    return _dump(poset_json(poset)), EXIT_OK


def cmd_lattice(args) -> tuple[str, int]:
    poset = build_poset(args.max_order, parse_fiber(args.fiber))
    if args.format == "csv":
        return composition_csv(poset), EXIT_OK
    if args.format == "dot":
        return to_dot(poset), EXIT_OK
    try:
        return closed_sets_json(poset), EXIT_OK
    except EnumerationCapExceeded:
        data = poset_json(poset)
        data["closed_set_count"] = count_closed_sets(poset)
        data["closed_sets"] = None
        return _dump(data), EXIT_CAP


def cmd_verify(args) -> tuple[str, int]:
    G = build_group(args.group)
    A = parse_fiber(args.fiber)
    results = run_battery(G, A)
    lines = [f"{r.status:4}  {r.name}  {r.detail}".rstrip() for r in results]
    failed = any(r.ok is False for r in results)
    if args.format == "json":
        data = [{"name": r.name, "status": r.status, "detail": r.detail} for r in results]
        return _dump({"group": G.name, "fiber": str(A), "results": data}), EXIT_FAIL if failed else EXIT_OK
    return "\n".join(lines) + "\n", EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "idempotents": (cmd_idempotents, "primitive idempotents of B^A(G)", "group", ("json",)),
    "mconst": (cmd_mconst, "deflation numbers m^N for every Phi", "group", ("json", "csv")),
    "bpairs": (cmd_bpairs, "B^A-pair classes up to an order bound", "order", ("json",)),
    "poset": (cmd_poset, "the order relation on B^A-pair classes", "order", ("json", "dot")),
    "lattice": (cmd_lattice, "closed sets and composition factors", "order", ("json", "csv", "dot")),
    "verify": (cmd_verify, "run the property battery for one group", "group", ("text", "json")),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--fiber", default="1", help='fiber group A: "1", "C2", "C2xC4", "C2^3", "mu"')
    common.add_argument("--strict", action="store_true", help="test every normal subgroup, run extra cross-checks")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    common.add_argument("--cap", type=int, default=None, help="largest group order to tabulate")
    common.add_argument("--out", type=Path, default=None, help="write output here instead of stdout")
    parser = _Parser(prog="fiberburnside", description="Exact computations in A-fibered Burnside rings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text, kind, formats) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if kind == "group":
            p.add_argument("--group", required=True, help="catalog name like S3 or C2xC4, or a JSON file")
        else:
            p.add_argument("--max-order", type=int, required=True, dest="max_order")
        p.add_argument("--format", choices=formats, default=formats[0])
    return parser


def run(argv: list[str] | None = None) -> tuple[str, int]:
    """Run a command and return (output, exit code) without touching stdout."""
    try:
        args = build_parser().parse_args(argv)
        if args.cap is not None and args.cap < 1:
            raise ParseError("--cap must be at least 1")
        if getattr(args, "max_order", 1) < 1:
            raise ParseError("--max-order must be at least 1")
    except ParseError as exc:
        return f"error: {exc}\n", EXIT_PARSE
    random.seed(args.seed)
    func = COMMANDS[args.command][0]
    try:
        if args.cap is not None:
            with order_cap(args.cap):
                text, code = func(args)
        else:
            text, code = func(args)
    except (OrderCapExceeded, EnumerationCapExceeded, RecursionError) as exc:
        return f"error: {exc}\n", EXIT_CAP
    except (GroupError, ValueError, OSError) as exc:
        return f"error: {exc}\n", EXIT_PARSE
    if args.out is not None:
        args.out.write_text(text)
        return "", code
    return text, code


def main(argv: list[str] | None = None) -> int:
    text, code = run(argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_FAIL) else sys.stderr
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
