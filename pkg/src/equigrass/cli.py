"""Command-line interface.

Exit codes: 0 when everything passes, 1 for usage errors, 2 when a
verification check fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .invariants import forgetful, rank_chart_inv, render_forget
from .parser import EvalError, ParseError, evaluate, parse_expression
from .partitions import format_partition, parse_partition
from .schubert import (e1_rank_chart, enumerate_cells, parse_pattern, partition_to_pattern,
                       pattern_to_partition, render_pattern)
from .charts import RankChart
from .suites import all_tasks, run_suites

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {n}")
    return n


def _positive(text: str) -> int:
    n = _nonneg(text)
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="equigrass",
                  description="Exact computations for the Z/2-equivariant cohomology of Gr_k(U).")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    chart = sub.add_parser("chart", help="bigraded rank charts")
    chart.add_argument("kind", choices=["inv", "cells"])
    chart.add_argument("--k", type=_positive, required=True)
    chart.add_argument("--pmax", type=_nonneg, default=None,
                       help="largest topological degree (required unless --ambient)")
    chart.add_argument("--ambient", type=_nonneg, default=None,
                       help="cells only: restrict to Gr_k(U^N)")
    chart.add_argument("--format", choices=["ascii", "csv", "json"], default="ascii")

    verify = sub.add_parser("verify", help="run verification suites")
    vsub = verify.add_subparsers(dest="suite", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=["text", "json"], default="text")
        return p

    fmt(vsub.add_parser("presentation")).add_argument("--k", type=int, choices=[2, 3],
                                                      required=True)
    vsub.choices["presentation"].add_argument("--degmax", type=_nonneg, default=14)
    fmt(vsub.add_parser("gr4"))
    fmt(vsub.add_parser("charts"))
    for name in ("kronholm", "duality"):
        p = fmt(vsub.add_parser(name))
        p.add_argument("--k", type=_positive, required=True)
        p.add_argument("--pmax", type=_nonneg, required=True)
    p = fmt(vsub.add_parser("cells"))
    p.add_argument("--k", type=_positive, default=6, help="largest k")
    p.add_argument("--rmax", type=_nonneg, default=10)
    p = fmt(vsub.add_parser("bijection"))
    p.add_argument("--k", type=_positive, default=5, help="largest k")
    p.add_argument("--dimmax", type=_nonneg, default=12)
    p = fmt(vsub.add_parser("products"))
    p.add_argument("--k", type=_positive, default=5, help="largest k")
    p.add_argument("--emax", type=_nonneg, default=4)
    p = fmt(vsub.add_parser("indecomposables"))
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--degmax", type=_nonneg, default=14)
    p = fmt(vsub.add_parser("stable"))
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--degmax", type=_nonneg, default=12)
    p = fmt(vsub.add_parser("appendix"))
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--degmax", type=_nonneg, default=14)
    p = fmt(vsub.add_parser("properties"))
    p.add_argument("--samples", type=_positive, default=200)
    p.add_argument("--seed", type=int, default=0)
    p = fmt(vsub.add_parser("all"))
    p.add_argument("--k", type=_positive, default=6, help="largest k for the chart suites")
    p.add_argument("--pmax", type=_nonneg, default=20)

    ev = sub.add_parser("eval", help="evaluate a class expression in Inv_k")
    ev.add_argument("--k", type=_positive, required=True)
    ev.add_argument("expr")
    ev.add_argument("--compare", metavar="EXPR",
                    help="also report equality with EXPR, exactly and mod (rho, tau)")
    ev.add_argument("--format", choices=["text", "json"], default="text")

    fg = sub.add_parser("forget", help="image of an expression in F2[w_1..w_k]")
    fg.add_argument("--k", type=_positive, required=True)
    fg.add_argument("expr")
    fg.add_argument("--format", choices=["text", "json"], default="text")

    bij = sub.add_parser("bijection", help="partitions <-> *-patterns")
    bij.add_argument("direction", choices=["partition-to-pattern", "pattern-to-partition"])
    bij.add_argument("value")
    bij.add_argument("--format", choices=["text", "json"], default="text")
    return top


# -- commands -------------------------------------------------------------------------

def _cmd_chart(args) -> int:
    if args.kind == "inv":
        if args.ambient is not None:
            raise UsageError("--ambient applies to cell charts only")
        if args.pmax is None:
            raise UsageError("chart inv needs --pmax")
        chart = rank_chart_inv(args.k, args.pmax)
    elif args.ambient is not None:
        if args.pmax is not None:
            raise UsageError("give either --pmax or --ambient, not both")
        cells = enumerate_cells(args.k, ambient=args.ambient)
        top = max((p for _, (p, _) in cells), default=0)
        chart = RankChart.from_bidegrees((bd for _, bd in cells), k=args.k, p_max=top)
    else:
        if args.pmax is None:
            raise UsageError("chart cells needs --pmax or --ambient")
        chart = e1_rank_chart(args.k, args.pmax)
    sys.stdout.write(chart.render(args.format))
    return EXIT_OK


def _tasks_for(args) -> list[tuple[str, dict]]:
    s = args.suite
    if s == "all":
        return all_tasks(args.k, args.pmax)
    if s == "presentation":
        return [(s, {"k": args.k, "deg_max": args.degmax})]
    if s in ("gr4", "charts"):
        return [(s, {})]
    if s == "kronholm":
        return [(s, {"k": args.k, "p_max": args.pmax})]
    if s == "duality":
        return [(s, {"k": args.k, "p_max": args.pmax})]
    if s == "cells":
        return [(s, {"k_max": args.k, "r_max": args.rmax})]
    if s == "bijection":
        return [(s, {"k_max": args.k, "dim_max": args.dimmax})]
    if s == "products":
        return [(s, {"k_max": args.k, "e_max": args.emax})]
    if s in ("indecomposables", "stable"):
        return [(s, {"k": args.k, "deg_max": args.degmax})]
    if s == "appendix":
        return [(s, {"n": args.n, "deg_max": args.degmax})]
    if s == "properties":
        return [(s, {"samples": args.samples, "seed": args.seed})]
    raise UsageError(f"unknown suite {s!r}")


def _cmd_verify(args) -> int:
    try:
        reports = run_suites(_tasks_for(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = all(r.ok for r in reports)
    if args.format == "json":
        print(json.dumps({"ok": ok, "reports": [r.to_dict() for r in reports]}, indent=1))
    else:
        print("\n\n".join(r.render() for r in reports))
        passed = sum(ok_ for r in reports for ok_, *_ in r.lines)
        total = sum(len(r.lines) for r in reports)
        print(f"\n{passed}/{total} checks passed")
    return EXIT_OK if ok else EXIT_FAIL


def _evaluate(src: str, k: int):
    try:
        tree = parse_expression(src)
        return tree, evaluate(tree, k)
    except (ParseError, EvalError) as exc:
        raise UsageError(str(exc)) from None


def _cmd_eval(args) -> int:
    tree, value = _evaluate(args.expr, args.k)
    reduced = sorted(value.mod_rho_tau())
    out = {"k": args.k, "expression": tree.render(), "terms": value.to_json(),
           "bidegrees": sorted(value.bidegrees()),
           "mod_rho_tau": [list(p) for p in reduced]}
    if args.compare is not None:
        _, other = _evaluate(args.compare, args.k)
        diff = value + other
        out["compare"] = {"expression": args.compare, "equal": not diff,
                          "equal_mod_rho_tau": diff.in_rho_tau_ideal(),
                          "difference": diff.to_json()}
    if args.format == "json":
        print(json.dumps(out))
        return EXIT_OK
    print(value.render(names=True))
    names = " + ".join(format_partition(p) for p in reduced) or "0"
    print(f"mod (rho, tau): {names}")
    if args.compare is not None:
        cmp = out["compare"]
        print(f"equal to {args.compare}: {'yes' if cmp['equal'] else 'no'}; "
              f"mod (rho, tau): {'yes' if cmp['equal_mod_rho_tau'] else 'no'}")
        print(f"difference: {diff.render(names=True)}")
    return EXIT_OK


def _cmd_forget(args) -> int:
    tree, value = _evaluate(args.expr, args.k)
    image = forgetful(value)
    if args.format == "json":
        print(json.dumps({"k": args.k, "expression": tree.render(),
                          "image": render_forget(image),
                          "exponents": sorted(list(e) for e in image)}))
    else:
        print(render_forget(image))
    return EXIT_OK


def _cmd_bijection(args) -> int:
    try:
        if args.direction == "partition-to-pattern":
            src = parse_partition(args.value)
            out = partition_to_pattern(src)
            shown = render_pattern(out)
            result = {"partition": list(src), "stars": list(out), "pattern": shown}
        else:
            src = parse_pattern(args.value)
            out = pattern_to_partition(src)
            shown = format_partition(out)
            result = {"stars": list(src), "pattern": render_pattern(src),
                      "partition": list(out)}
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(result))
    elif args.direction == "partition-to-pattern":
        print(f"{shown}  stars at {{{','.join(map(str, out))}}}")
    else:
        print(shown)
    return EXIT_OK


COMMANDS = {"chart": _cmd_chart, "verify": _cmd_verify, "eval": _cmd_eval,
            "forget": _cmd_forget, "bijection": _cmd_bijection}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
