"""Command-line front end.

Exit codes: 0 success, 1 verification or reproduction failure, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import families, products, verify
from .closed_forms import FormulaRangeError
from .edgelist import read_edge_list, write_edge_list
from .graph import Graph, GraphError, RootedGraph, SubsetGraph
from .invariants import em1, em2, m1, m2

INDICES = {"m1": m1, "m2": m2, "em1": em1, "em2": em2}


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _plain(value):
    return value.graph if isinstance(value, (RootedGraph, SubsetGraph)) else value


def _emit(value, output):
    text = write_edge_list(value)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _num(value):
    return str(value) if isinstance(value, Fraction) else value


# -- index -------------------------------------------------------------------


def cmd_index(args):
    g = _plain(read_edge_list(args.file))
    names = [s.strip() for s in args.indices.split(",") if s.strip()]
    unknown = [s for s in names if s not in INDICES]
    if unknown or not names:
        raise UsageError(f"unknown index selection {args.indices!r}; choose from {', '.join(INDICES)}")
    values = {name: INDICES[name](g) for name in names}
    if args.format == "json":
        print(json.dumps(values))
    else:
        sep = "\t" if args.format == "tsv" else " "
        for name, value in values.items():
            print(f"{name}{sep}{value}")
    return 0


# -- product -----------------------------------------------------------------


def cmd_product(args):
    inputs = [read_edge_list(path) for path in args.inputs]
    need = 1 if args.kind == "thorn" else 2
    if len(inputs) != need:
        raise UsageError(f"product {args.kind} takes {need} input file(s), got {len(inputs)}")
    g = _plain(inputs[0])
    if args.kind == "thorn":
        if args.t is None:
            raise UsageError("product thorn requires --t")
        result = products.thorn(g, args.t)
    elif args.kind == "cart":
        result = products.cartesian(g, _plain(inputs[1]))
    elif args.kind == "hier":
        h = inputs[1]
        if args.subset is not None:
            subset = _int_list(args.subset)
        elif isinstance(h, SubsetGraph):
            subset = sorted(h.subset)
        else:
            raise UsageError("product hier requires --subset (or a subset line in the second file)")
        result = products.hierarchical(g, _plain(h), subset)
    else:
        h = inputs[1]
        if args.root is not None:
            rooted = RootedGraph(_plain(h), args.root)
        elif isinstance(h, RootedGraph):
            rooted = h
        else:
            raise UsageError("product cluster requires --root (or a root line in the second file)")
        result = products.cluster(g, rooted)
    _emit(result, args.output)
    return 0


# -- family ------------------------------------------------------------------

# family name -> (constructor, parameter names)
FAMILIES = {
    "path": (families.path, ("n",)),
    "cycle": (families.cycle, ("n",)),
    "complete": (families.complete, ("n",)),
    "star": (families.rooted_star, ("n",)),
    "hypercube": (families.hypercube, ("d",)),
    "hexchain": (families.hex_chain, ("n",)),
    "polyhex": (families.polyhex, ("n",)),
    "phenylene": (families.phenylene, ("n",)),
    "dendron": (families.dendron, ("p", "r")),
    "dendrimer": (families.dicentric_dendrimer, ("p", "r")),
    "sun": (families.sun, ("m", "n")),
    "comb": (families.comb, ("n",)),
    "c60": (families.c60, ()),
    "dimer": (families.dimer_fullerene, ()),
    "truncated-cube": (families.truncated_cube, ()),
    "truncated-cube-half": (families.truncated_cube_half, ()),
    "octanitrocubane": (families.octanitrocubane, ()),
}


def cmd_family(args):
    ctor, params = FAMILIES[args.name]
    values = []
    for name in params:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"family {args.name} requires --{name}")
        values.append(value)
    result = ctor(*values)
    if args.rooted and isinstance(result, Graph):
        result = RootedGraph(result, 0)
    _emit(result, args.output)
    return 0


# -- verify ------------------------------------------------------------------


def format_verify(cfg, records, fmt):
    totals = {check: [0, 0] for check in verify.CHECKS}
    for rec in records:
        totals[rec.check][0] += 1
        totals[rec.check][1] += not rec.passed
    failures = [rec for rec in records if not rec.passed]
    n_failed = len(failures)

    if fmt == "json":
        doc = {
            "config": {"trials": cfg.trials, "max_n": cfg.max_n, "edge_prob": cfg.edge_prob_percent, "seed": cfg.seed},
            "checks": [{"check": c, "total": t, "failed": f} for c, (t, f) in totals.items()],
            "failures": [
                {"trial": r.trial, "check": r.check, "g": r.g, "h": r.h, "subset": list(r.subset), "oracle": r.oracle, "formula": r.formula}
                for r in failures
            ],
            "status": "PASS" if not n_failed else "FAIL",
        }
        return json.dumps(doc, indent=2) + "\n"

    if fmt == "tsv":
        lines = [
            "#config\ttrials\tmax_n\tedge_prob\tseed",
            f"config\t{cfg.trials}\t{cfg.max_n}\t{cfg.edge_prob_percent}\t{cfg.seed}",
            "#check\tname\ttotal\tfailed",
        ]
        lines += [f"check\t{c}\t{t}\t{f}" for c, (t, f) in totals.items()]
        lines.append("#failure\ttrial\tcheck\tg\th\tsubset\toracle\tformula")
        lines += [
            f"failure\t{r.trial}\t{r.check}\t{r.g}\t{r.h}\t{','.join(map(str, r.subset))}\t{r.oracle}\t{r.formula}"
            for r in failures
        ]
        lines.append(f"status\t{'PASS' if not n_failed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    lines = [f"verify: trials={cfg.trials} max_n={cfg.max_n} edge_prob={cfg.edge_prob_percent} seed={cfg.seed}"]
    width = max(len(c) for c in totals)
    for c, (t, f) in totals.items():
        lines.append(f"  {c:<{width}}  {t - f}/{t} passed")
    for r in failures:
        lines.append(
            f"FAIL trial={r.trial} check={r.check} oracle={r.oracle} formula={r.formula} "
            f"G={r.g} H={r.h} U={','.join(map(str, r.subset))}"
        )
    lines.append(f"{len(records)} checks, {n_failed} failed: {'PASS' if not n_failed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def cmd_verify(args):
    try:
        cfg = verify.TrialConfig(args.trials, args.max_n, args.edge_prob, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records = verify.run_suite(cfg, jobs=args.jobs)
    sys.stdout.write(format_verify(cfg, records, args.format))
    return 0 if all(r.passed for r in records) else 1


# -- reproduce ---------------------------------------------------------------

FIELDS = ("example_id", "construction", "oracle", "paper", "corrected", "status")


def _row_values(row):
    return (row.example_id, row.construction, row.oracle, _num(row.paper), row.corrected, row.status)


def format_reproduce(rows, fmt):
    ok = verify.reproduction_ok(rows)
    found = sorted(verify.errata(rows), key=_example_key)
    if fmt == "json":
        doc = [dict(zip(FIELDS, _row_values(row))) for row in rows]
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "tsv":
        lines = ["\t".join(FIELDS)]
        lines += ["\t".join(str(v) for v in _row_values(row)) for row in rows]
        return "\n".join(lines) + "\n"

    table = [("example", "construction", "oracle", "paper", "corrected", "status")]
    table += [tuple(str(v) for v in _row_values(row)) for row in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(FIELDS))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in table]
    lines.append("")
    lines.append(f"errata: {', '.join(found)}")
    lines.append("reproduction " + ("OK" if ok else "FAILED"))
    return "\n".join(lines) + "\n"


def _example_key(example_id):
    head = example_id.split("(")[0]
    return (int(head), example_id)


def cmd_reproduce(args):
    rows = verify.reproduce()
    sys.stdout.write(format_reproduce(rows, args.format))
    return 0 if verify.reproduction_ok(rows) else 1


# -- entry point ---------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="hierzagreb", description="Reformulated Zagreb indices of graph products.")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = dict(choices=("pretty", "tsv", "json"), default="pretty")

    p = sub.add_parser("index", help="compute degree-based indices of an edge-list file")
    p.add_argument("file")
    p.add_argument("--indices", default="m1,m2,em1,em2")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("product", help="build a graph product")
    p.add_argument("kind", choices=("hier", "cart", "cluster", "thorn"))
    p.add_argument("inputs", nargs="+")
    p.add_argument("--subset")
    p.add_argument("--root", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("family", help="emit a graph family member")
    p.add_argument("name", choices=sorted(FAMILIES))
    for name in ("n", "m", "p", "r", "d"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--rooted", action="store_true", help="mark vertex 0 as root")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="randomized identity checks against the brute-force index")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--edge-prob", type=int, default=40)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", help="reproduce the worked examples and flag errata")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, FormulaRangeError, OSError) as exc:
        print(f"hierzagreb {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
