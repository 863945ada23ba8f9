"""Command-line front end.

Subcommands::

    grundy <g6|->           exact Grundy number plus a witness ordering
    partial-grundy <g6|->   exact partial Grundy number
    cubic <g6|->            linear classifier for connected cubic graphs
    atoms --t N [--max-degree D] [--max-order M] [--minimal] --out FILE
    family {f3,gstar} --script FILE [--r R]
    grki --r R --k K --parts a,b,... --i I
    enumerate --r R --n N [--connected]
    verify --claim ID [--r R] [--max-n N] [--input FILE] [--budget N]
           [--seed S] [--count C] [--json|--csv]

Graph arguments are graph6 text; ``-`` reads one graph per line from
standard input. Exit codes: 0 all passed, 1 counterexample found,
2 inconclusive (budget ran out somewhere), 3 usage error. The environment
variable GRUNDYLAB_THREADS caps the verification worker pool; reports are
byte-identical for any pool size.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import families
from .atoms import enumerate_atoms, minimal_atoms, write_catalog
from .generate import enumerate_regular_graphs
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .solver import (
    SearchBudgetExceeded,
    grundy_witness,
    partial_grundy_exact,
)
from .twins import cubic_grundy_linear
from .verify import CLAIM_IDS, load_graph6_file, run_campaign

USAGE_ERROR = 3


def _input_graphs(arg: str):
    if arg == "-":
        for line in sys.stdin:
            line = line.strip()
            if line and not line.startswith("#"):
                yield parse_graph6(line)
    else:
        yield parse_graph6(arg)


def _cmd_grundy(args) -> int:
    for g in _input_graphs(args.graph):
        value, order = grundy_witness(g, args.budget)
        print(f"{value}\torder={','.join(str(v) for v in order)}")
    return 0


def _cmd_partial_grundy(args) -> int:
    for g in _input_graphs(args.graph):
        print(partial_grundy_exact(g, args.budget))
    return 0


def _cmd_cubic(args) -> int:
    for g in _input_graphs(args.graph):
        print(cubic_grundy_linear(g))
    return 0


def _cmd_atoms(args) -> int:
    catalog = enumerate_atoms(args.t, max_degree=args.max_degree, max_order=args.max_order)
    if args.minimal:
        catalog = minimal_atoms(catalog)
    write_catalog(catalog, args.out)
    print(f"wrote {len(catalog)} atoms at level {args.t} to {args.out}", file=sys.stderr)
    return 0


def _cmd_family(args) -> int:
    with open(args.script) as fh:
        script = families.parse_script(fh.read())
    result = families.run_script(script, args.family, args.r)
    print(f"{write_graph6(result.graph)}\tregular={1 if result.regular else 0}")
    return 0


def _cmd_grki(args) -> int:
    parts = tuple(int(x) for x in args.parts.split(","))
    g = families.build_G_rki(args.r, args.k, parts, args.i)
    print(write_graph6(g))
    return 0


def _cmd_enumerate(args) -> int:
    for g in enumerate_regular_graphs(args.r, args.n, connected_only=args.connected):
        print(write_graph6(g))
    return 0


def _cmd_verify(args) -> int:
    source = load_graph6_file(args.input) if args.input else None
    started = time.perf_counter()
    report = run_campaign(
        args.claim,
        source,
        r=args.r,
        max_n=args.max_n,
        budget=args.budget,
        seed=args.seed,
        count=args.count,
    )
    elapsed = time.perf_counter() - started
    if args.csv:
        sys.stdout.write(report.to_csv())
    else:
        sys.stdout.write(report.to_json_lines())
    print(f"campaign {args.claim}: {report.outcome()} in {elapsed:.2f}s", file=sys.stderr)
    return report.exit_code()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grundylab", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("grundy", help="exact Grundy number with witness ordering")
    p.add_argument("graph", help="graph6 string, or - for one graph per stdin line")
    p.add_argument("--budget", type=int, default=None, help="search node limit")
    p.set_defaults(func=_cmd_grundy)

    p = sub.add_parser("partial-grundy", help="exact partial Grundy number")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_partial_grundy)

    p = sub.add_parser("cubic", help="linear Grundy classifier for connected cubic graphs")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_cubic)

    p = sub.add_parser("atoms", help="write an atom catalog file")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--minimal", action="store_true", help="keep only minimal atoms")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_atoms)

    p = sub.add_parser("family", help="run a build script")
    p.add_argument("family", choices=["f3", "gstar"])
    p.add_argument("--script", required=True)
    p.add_argument("--r", type=int, default=None, help="regularity for gstar")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("grki", help="ring construction with prescribed Grundy number")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--parts", required=True, help="comma-separated block sizes summing to r")
    p.add_argument("--i", type=int, default=2)
    p.set_defaults(func=_cmd_grki)

    p = sub.add_parser("enumerate", help="enumerate regular graphs up to isomorphism")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("--claim", required=True, choices=list(CLAIM_IDS))
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--input", default=None, help="graph6 file, one graph per line")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--count", type=int, default=200)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--csv", action="store_true", default=False)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (Graph6Error, families.ScriptError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except SearchBudgetExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
