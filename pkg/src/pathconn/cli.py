"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 mismatch or invalid witness,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict
from typing import Sequence

from .errors import BudgetExhausted, GraphParseError, InvalidArgument, NoSpanningPath
from .formula import BRANCH_TEXT, COMPLETE_TEXT, BipartiteCase, pi_bipartite, pi_complete
from .graph_core import (
    BipartiteLabeling,
    Graph,
    load_graph,
    make_complete,
    make_complete_bipartite,
    validate_family,
)
from .oracle import SearchBudget, bipartite_subset_classes, max_internally_disjoint, pi_k_exact
from .verify import DEFAULT_MAX_ORDER, LARGE_MAX_ORDER, run_verify
from .witness import ConstructionRecipe, Witness, build_witness, witness_document

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _budget(args: argparse.Namespace) -> SearchBudget:
    if args.budget is not None:
        return SearchBudget(args.budget, args.time_limit)
    return SearchBudget.from_env(args.time_limit)


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, help="node budget per S (default: $PATHCONN_BUDGET or 50M)")
    p.add_argument("--time-limit", type=float, help="seconds per S; opt-in")


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def cmd_formula(args: argparse.Namespace) -> int:
    if args.family == "complete":
        if args.n is None:
            raise UsageError("formula complete needs -n")
        result = pi_complete(args.n, args.k)
        head, text = f"{result.value}", COMPLETE_TEXT
        params = {"n": args.n, "k": args.k}
    else:
        if args.a is None or args.b is None:
            raise UsageError("formula bipartite needs -a and -b")
        result = pi_bipartite(args.a, args.b, args.k)
        head = f"{result.value} ({result.provenance})"
        text = BRANCH_TEXT[BipartiteCase(result.provenance)]
        params = {"a": args.a, "b": args.b, "k": args.k}
    if args.format == "json":
        _emit_json({**params, "value": result.value, "case": result.provenance, "formula": text, "swapped": result.swapped})
    elif args.format == "csv":
        _emit_csv([*params, "value", "case"], [[*params.values(), result.value, result.provenance]])
    else:
        print(head)
        print(f"formula: {text}")
        if result.swapped:
            print("note: parts exchanged so that a <= b")
    return EXIT_OK


def _print_witness_text(labeling: BipartiteLabeling | None, witness: Witness, valid: bool) -> None:
    label = labeling.label if labeling else str
    fam = witness.family
    print(f"S = {{{', '.join(label(v) for v in sorted(fam.s))}}}")
    print(f"recipe: {witness.recipe.value}")
    print(f"paths: {len(fam)}")
    for i, p in enumerate(fam.paths, 1):
        print(f"  P{i}: {' '.join(label(v) for v in p.vertices)}")
    print(f"valid: {'yes' if valid else 'NO'}")


def cmd_witness(args: argparse.Namespace) -> int:
    a, b = args.a, args.b
    labeling = BipartiteLabeling(a, b)
    if args.s:
        s = labeling.parse_many(args.s)
        if args.k is not None and args.k != len(s):
            raise UsageError(f"-k {args.k} disagrees with |S| = {len(s)}")
    elif args.k is not None:
        if not 2 <= args.k <= a + b:
            raise UsageError(f"k must satisfy 2 <= k <= a+b = {a + b}")
        s = next(iter(bipartite_subset_classes(a, b, args.k)))
    else:
        s = frozenset(range(a + b))
    witness = build_witness(a, b, s, _budget(args))
    g, _ = make_complete_bipartite(a, b)
    valid = validate_family(g, witness.family).ok
    if args.format == "json":
        _emit_json(witness_document(labeling, witness))
    elif args.format == "csv":
        _emit_csv(["path", "vertices"], [[i, " ".join(labeling.label(v) for v in p.vertices)] for i, p in enumerate(witness.family.paths, 1)])
    else:
        _print_witness_text(labeling, witness, valid)
    return EXIT_OK if valid else EXIT_MISMATCH


def _oracle_graph(args: argparse.Namespace) -> tuple[Graph, BipartiteLabeling | None]:
    if args.file:
        return load_graph(args.file), None
    if args.bipartite:
        try:
            a, b = (int(t) for t in args.bipartite.split(","))
        except ValueError:
            raise UsageError(f"--bipartite expects 'a,b', got {args.bipartite!r}") from None
        return make_complete_bipartite(a, b)
    if args.complete is not None:
        return make_complete(args.complete), None
    raise UsageError("give one of --file, --bipartite, --complete")


def cmd_oracle(args: argparse.Namespace) -> int:
    g, labeling = _oracle_graph(args)
    label = labeling.label if labeling else str
    budget = _budget(args)
    if (args.s is None) == (args.k is None):
        raise UsageError("give exactly one of --s and -k")
    if args.s is not None:
        if labeling:
            s = labeling.parse_many(args.s)
        else:
            try:
                s = frozenset(int(t) for t in args.s.split(",") if t.strip())
            except ValueError:
                raise UsageError(f"--s expects comma-separated vertex ids, got {args.s!r}") from None
        result = max_internally_disjoint(g, s, budget)
        mode = {"s": [label(v) for v in sorted(s)]}
    else:
        source = None
        if labeling and args.orbit:
            source = bipartite_subset_classes(labeling.a, labeling.b, args.k)
        result = pi_k_exact(g, args.k, budget, source, workers=args.workers)
        mode = {"k": args.k, "argmin_s": [label(v) for v in sorted(result.argmin_s)]}
    witness = Witness(result.witness, ConstructionRecipe.ORACLE_FALLBACK)
    if args.format == "json":
        doc = witness_document(labeling, witness, g)
        _emit_json({"value": result.value, **mode, "witness": doc})
    elif args.format == "csv":
        _emit_csv(["path", "vertices"], [[i, " ".join(label(v) for v in p.vertices)] for i, p in enumerate(result.witness.paths, 1)])
    else:
        print(result.value)
        if "argmin_s" in mode:
            print(f"argmin S = {{{', '.join(mode['argmin_s'])}}}")
            if labeling:
                sx = sum(labeling.in_x(v) for v in result.argmin_s)
                print(f"split (|S cap X|, |S cap Y|) = ({sx}, {args.k - sx})")
        for i, p in enumerate(result.witness.paths, 1):
            print(f"  P{i}: {' '.join(label(v) for v in p.vertices)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_order < 2:
        raise UsageError("--max-order must be at least 2")
    if args.max_order > DEFAULT_MAX_ORDER and not args.allow_large:
        raise UsageError(f"--max-order above {DEFAULT_MAX_ORDER} needs --allow-large (long runtime)")
    if args.max_order > LARGE_MAX_ORDER:
        raise UsageError(f"--max-order is capped at {LARGE_MAX_ORDER}")
    workers = args.workers
    if args.parallel and not workers:
        workers = max(2, os.cpu_count() or 2)
    report = run_verify(args.max_order, orbit=args.orbit, workers=workers, budget=_budget(args))
    if args.format == "json":
        _emit_json(
            {
                "max_order": report.max_order,
                "orbit": report.orbit,
                "mismatches": len(report.mismatches),
                "skipped": len(report.skipped),
                "cells": [asdict(c) | {"argmin": list(c.argmin)} for c in report.cells],
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["a", "b", "k", "formula", "case", "oracle", "status", "subsets"],
            [
                [c.a, c.b, c.k, c.formula, c.case, "" if c.skipped else c.oracle,
                 "skipped" if c.skipped else ("mismatch" if c.mismatch else "ok"), c.evaluations]
                for c in report.cells
            ],
        )
    else:
        sys.stdout.write(report.render(verbose=args.verbose))
    if report.mismatches:
        return EXIT_MISMATCH
    if report.skipped:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    if args.a_max < 1 or args.b_max < 1:
        raise UsageError("--a-max and --b-max must be at least 1")
    k_max = args.a_max + args.b_max
    ks = list(range(1, k_max + 1))
    rows = []
    for a in range(1, args.a_max + 1):
        for b in range(1, args.b_max + 1):
            cells = []
            for k in ks:
                if k < 2 or k > a + b:
                    cells.append("")
                    continue
                r = pi_bipartite(a, b, k)
                cells.append(f"{r.value}:{r.provenance}" if args.verbose else str(r.value))
            rows.append((a, b, cells))
    if args.format == "json":
        _emit_json(
            [{"a": a, "b": b, "values": {str(k): c for k, c in zip(ks, cells) if c}} for a, b, cells in rows]
        )
    elif args.format == "csv":
        _emit_csv(["a", "b", *[f"k={k}" for k in ks]], [[a, b, *cells] for a, b, cells in rows])
    else:
        width = max([4] + [len(c) for _, _, cells in rows for c in cells])
        print("a  b | " + " ".join(f"{'k=' + str(k):>{width}}" for k in ks))
        for a, b, cells in rows:
            print(f"{a:<2} {b:<2}| " + " ".join(f"{c:>{width}}" for c in cells))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pathconn", description="k-path-connectivity of complete and complete bipartite graphs")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("formula", help="evaluate the closed form")
    p.add_argument("family", choices=["complete", "bipartite"])
    p.add_argument("-n", type=int)
    p.add_argument("-a", type=int)
    p.add_argument("-b", type=int)
    p.add_argument("-k", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("witness", help="build an explicit family of internally disjoint S-paths in K_{a,b}")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("-k", type=int)
    p.add_argument("--s", help="comma-separated labels such as x1,y2")
    _add_budget_flags(p)
    fmt(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("oracle", help="exact pi_G(S) or pi_k(G) by exhaustive search")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="edge-list file: first line n, then 'u v' per line")
    src.add_argument("--bipartite", help="built-in K_{a,b}, given as 'a,b'")
    src.add_argument("--complete", type=int, help="built-in K_n")
    p.add_argument("--s", help="target set: labels (x1,y2) for --bipartite, ids otherwise")
    p.add_argument("-k", type=int)
    p.add_argument("--orbit", action=argparse.BooleanOptionalAction, default=True,
                   help="one subset per split for K_{a,b} in -k mode")
    p.add_argument("--workers", type=int)
    _add_budget_flags(p)
    fmt(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="compare formula and oracle on all K_{a,b} with a+b <= max order")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p.add_argument("--allow-large", action="store_true", help=f"permit max order up to {LARGE_MAX_ORDER}")
    p.add_argument("--orbit", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--workers", type=int)
    p.add_argument("-v", "--verbose", action="store_true", help="print every cell")
    _add_budget_flags(p)
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="print pi_k(K_{a,b}) over a grid")
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    p.add_argument("-v", "--verbose", action="store_true", help="annotate cells with the case name")
    fmt(p)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, InvalidArgument, NoSpanningPath, GraphParseError, OSError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
