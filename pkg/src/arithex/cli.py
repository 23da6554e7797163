"""Command-line interface binding the engine, the oracle and the solver.

Subcommands::

    count     recurrence-engine class tables (table / json / csv, breakdowns)
    oracle    exhaustive generation: identity counts, orbits, classification
    verify    cross-check oracle vs engine vs published values (exit 1 on
              any mismatch)
    solve     target-number puzzles over exact rationals
    classify  canonical form and classification of one expression

Outputs are deterministic for identical inputs and seeds.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import canon, counting, oracle, solver
from .exprtree import (
    DuplicateVariable,
    ExprSyntaxError,
    parse as parse_expr,
    pretty,
    to_canon,
)
from .partitions import partition_text
from .projrat import INF, fmt

_TYPE_BY_NAME = {"first": 1, "second": 2, "third": 3}

ORACLE_DEFAULT_MAX_N = 5
ORACLE_DEEP_MAX_N = 6


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arithex",
        description="count, verify and search single-use arithmetic expressions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="class tables from the recurrences")
    p_count.add_argument("--max-n", type=int, required=True)
    p_count.add_argument(
        "--breakdown",
        metavar="OP,TYPE,N",
        help="summand trace for one cell, e.g. '-,third,6'",
    )
    p_count.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_count.set_defaults(func=cmd_count)

    p_oracle = sub.add_parser("oracle", help="exhaustive generation and orbits")
    p_oracle.add_argument("--n", type=int, required=True)
    p_oracle.add_argument("--ops", default="+-*/")
    p_oracle.add_argument(
        "--deep", action="store_true", help=f"allow n = {ORACLE_DEEP_MAX_N} (minutes)"
    )
    p_oracle.add_argument("--dump", metavar="FILE", help="write one JSON line per class")
    p_oracle.add_argument("--format", choices=("table", "json"), default="table")
    p_oracle.set_defaults(func=cmd_oracle)

    p_verify = sub.add_parser("verify", help="oracle vs engine vs known values")
    p_verify.add_argument("--max-n", type=int, required=True)
    p_verify.add_argument("--ops", default="+-*/")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=cmd_verify)

    p_solve = sub.add_parser("solve", help="reach a target from given numbers")
    p_solve.add_argument("--numbers", required=True, help="comma-separated rationals")
    p_solve.add_argument("--target", required=True, help="rational or 'inf'")
    p_solve.add_argument("--all", action="store_true", help="all witnesses, not one per class")
    p_solve.add_argument("--max-solutions", type=int, default=None)
    p_solve.add_argument("--json", action="store_true")
    p_solve.set_defaults(func=cmd_solve)

    p_classify = sub.add_parser("classify", help="canonical form of one expression")
    p_classify.add_argument("--expr", required=True)
    p_classify.add_argument("--against", help="second expression for an isomorphism check")
    p_classify.add_argument("--json", action="store_true")
    p_classify.set_defaults(func=cmd_classify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ExprSyntaxError, DuplicateVariable, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


# -- count --------------------------------------------------------------------


def _parse_cell(spec: str, n_max: int):
    try:
        op, type_name, n_text = spec.split(",")
        type_ = _TYPE_BY_NAME[type_name.strip()]
        n = int(n_text)
    except (ValueError, KeyError):
        raise ValueError(
            f"breakdown cell must be 'OP,TYPE,N' with OP in + - * / and "
            f"TYPE in first/second/third, got {spec!r}"
        ) from None
    op = op.strip()
    if op not in counting.OPS or not 2 <= n <= n_max:
        raise ValueError(f"no cell ({op}, {type_name}, {n}) within --max-n {n_max}")
    return op, type_, n


def _term_json(term: counting.Term) -> dict:
    if term.kind == "partition":
        key = partition_text(term.key)
    else:
        key = term.key
    return {
        "kind": term.kind,
        "key": key,
        "factors": list(term.factors),
        "value": term.value,
    }


def cmd_count(args) -> int:
    table = counting.class_counts(args.max_n)
    if args.breakdown:
        op, type_, n = _parse_cell(args.breakdown, args.max_n)
        bd = counting.worked_breakdown(table, n, op, type_)
        if args.format == "json":
            payload = {
                "n": n,
                "op": op,
                "type": counting.TYPE_NAMES[type_],
                "terms": [_term_json(t) for t in bd.terms],
                "total": bd.total,
            }
            print(json.dumps(payload, indent=2))
        else:
            print(f"cell op={op} type={counting.TYPE_NAMES[type_]} n={n}")
            for t in bd.terms:
                key = partition_text(t.key) if t.kind == "partition" else t.key
                factors = "*".join(str(f) for f in t.factors)
                print(f"  {t.kind:12} {str(key):14} {factors} = {t.value}")
            print(f"total: {bd.total}")
        return 0
    if args.format == "json":
        print(json.dumps(table.to_json_levels(), indent=2))
    elif args.format == "csv":
        print(table.to_csv(), end="")
    else:
        print(table.to_text())
        print("totals: " + table.totals_line())
    return 0


# -- oracle -------------------------------------------------------------------


def cmd_oracle(args) -> int:
    limit = ORACLE_DEEP_MAX_N if args.deep else ORACLE_DEFAULT_MAX_N
    if not 1 <= args.n <= limit:
        hint = "" if args.deep else " (use --deep for n = 6)"
        print(f"error: --n must be within 1..{limit}{hint}", file=sys.stderr)
        return 2
    family = oracle.generate(args.n, ops=args.ops, limit=limit)
    oracle.classify_endops(family)
    aeset = family.full_set()
    orbits = oracle.compute_orbits(aeset, args.n)
    oracle.classify_types(aeset, orbits)
    cells = oracle.category_table(aeset, orbits)
    if args.dump:
        with open(args.dump, "w", encoding="utf-8") as handle:
            for record in oracle.dump_lines(family, aeset, orbits, args.n):
                handle.write(json.dumps(record) + "\n")
    if args.format == "json":
        payload = {
            "n": args.n,
            "ops": "".join(family.ops),
            "identity_count": len(aeset.entries),
            "orbit_count": len(orbits),
            "table": {
                counting.OP_NAMES[op]: {
                    counting.TYPE_NAMES[t]: cells[op][t] for t in (1, 2, 3)
                }
                for op in counting.OPS
            },
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"n={args.n} ops={''.join(family.ops)}")
        print(f"identity-distinct expressions: {len(aeset.entries)}")
        print(f"classes up to relabeling:      {len(orbits)}")
        header = "        " + "".join(op.rjust(8) for op in counting.OPS)
        print(header)
        for t in (1, 2, 3):
            row = counting.TYPE_NAMES[t].ljust(8)
            row += "".join(str(cells[op][t]).rjust(8) for op in counting.OPS)
            print(row)
    return 0


# -- verify -------------------------------------------------------------------


def cmd_verify(args) -> int:
    if not 1 <= args.max_n <= ORACLE_DEFAULT_MAX_N:
        print(f"error: --max-n must be within 1..{ORACLE_DEFAULT_MAX_N}", file=sys.stderr)
        return 2
    report = oracle.verify(args.max_n, ops=args.ops, seed=args.seed)
    for line in report.lines():
        print(line)
    if report.ok:
        print("verification passed")
        return 0
    print("verification FAILED")
    return 1


# -- solve --------------------------------------------------------------------


def cmd_solve(args) -> int:
    numbers = [Fraction(part) for part in args.numbers.split(",") if part.strip()]
    target = INF if args.target.strip() in ("inf", "oo") else Fraction(args.target)
    query = solver.make_query(
        numbers, target, want_all=args.all, max_solutions=args.max_solutions
    )
    solutions = solver.solve(query)
    classes = solver.class_uniqueness(solutions)
    if args.json:
        payload = {
            "numbers": [str(x) for x in numbers],
            "target": fmt(target),
            "classes": classes,
            "solutions": [s.to_dict() for s in solutions],
        }
        print(json.dumps(payload, indent=2))
        return 0
    if not solutions:
        print("no solutions")
        print("classes: 0")
        return 0
    for sol in solutions:
        note = "  [domain extension]" if sol.extension else ""
        print(f"{sol.expr_text()} = {fmt(sol.value)}{note}")
    print(f"classes: {classes}")
    return 0


# -- classify -----------------------------------------------------------------


def cmd_classify(args) -> int:
    tree = parse_expr(args.expr)
    form = to_canon(tree)
    relabeled = False
    work = form
    n = len(form.varset)
    if form.varset != frozenset(range(1, n + 1)):
        work, _ = canon.relabel_contiguous(form)
        relabeled = True
    endop = typeclass = None
    if n <= ORACLE_DEFAULT_MAX_N:
        family = oracle.generate(n)
        oracle.classify_endops(family)
        entry = family.entry_of(work)
        aeset = family.full_set(n)
        orbits = oracle.compute_orbits(aeset, n)
        oracle.classify_types(aeset, orbits)
        endop, typeclass = entry.endop, entry.typeclass
    iso = None
    if args.against:
        other = to_canon(parse_expr(args.against))
        other_work, _ = canon.relabel_contiguous(other)
        iso = (
            canon.is_isomorphic(work, other_work) is not None
            if len(other_work.varset) == n
            else False
        )
    if args.json:
        payload = {
            "expr": pretty(tree),
            "canonical": canon.form_str(form),
            "variables": sorted(form.varset),
            "monic": canon.is_monic_form(form),
            "relabeled": relabeled,
            "endop": endop,
            "type": typeclass,
            "isomorphic_to_against": iso,
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"expression: {pretty(tree)}")
    print(f"canonical:  {canon.form_str(form)}")
    print(f"variables:  {sorted(form.varset)}")
    print(f"monic:      {'yes' if canon.is_monic_form(form) else 'no'}")
    if relabeled:
        print(f"relabeled:  {canon.form_str(work)} (for classification)")
    if endop is not None:
        print(f"ends with:  {endop}")
        print(f"type:       {typeclass}")
    else:
        print(f"ends with:  (classification available up to {ORACLE_DEFAULT_MAX_N} variables)")
    if args.against:
        print(f"isomorphic to --against: {'yes' if iso else 'no'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
