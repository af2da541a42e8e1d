"""Command-line front end.

Exit codes: 0 success, 1 verify found a failing flag, 2 parse error,
3 precondition not met or not applicable, 4 mismatch, 5 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as cons
from .bounds import bounds
from .checks import check_dp_set
from .distance import DistanceOracle
from .errors import (CapacityError, DpdomError, GraphParseError, InvalidInput, InvalidParameter,
                     NotApplicable, UnreachableError)
from .graph import parse_graph_spec
from .io import format_vertex_set, read_vertex_set, write_json
from .pipeline import STAGES, compute, formula_value
from .reproduce import ReproConfig, reproduce
from .solver import SearchConfig
from .values import Exhausted, Params, ext_json, ext_str

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_NA, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3, 4, 5


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _graph_args(p: argparse.ArgumentParser, params: bool = True) -> None:
    p.add_argument("--graph", required=True, metavar="SPEC",
                   help="path:N, cycle:N, glued:K:L, product(SPEC,SPEC) or file:PATH")
    if params:
        p.add_argument("--d", type=_nonneg, required=True)
        p.add_argument("--p", type=_nonneg, required=True)


def _search_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=_nonneg, default=0, metavar="NODES", help="node budget, 0 = unlimited")
    p.add_argument("--workers", type=_nonneg, default=1)
    p.add_argument("--no-symmetry", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dpdom", description="d-distance p-packing domination numbers")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="value via shortcuts, formulas, bounds, then exact search")
    _graph_args(c)
    _search_args(c)
    c.add_argument("--stage", choices=STAGES, help="run only this stage")
    c.add_argument("--json", metavar="PATH")

    f = sub.add_parser("formula", help="closed-form value, if one applies")
    _graph_args(f)
    f.add_argument("--json", metavar="PATH")

    b = sub.add_parser("bounds", help="lower and upper bounds with their sources")
    _graph_args(b)
    b.add_argument("--json", metavar="PATH")

    v = sub.add_parser("verify", help="check a vertex set for packing and domination")
    _graph_args(v)
    v.add_argument("--set", required=True, metavar="PATH", dest="set_path")
    v.add_argument("--json", metavar="PATH")

    k = sub.add_parser("construct", help="write a named construction to a vertex-set file")
    k.add_argument("name", choices=["product", "x_t", "family55", "torus_minus_one", "glued"])
    k.add_argument("--t", type=_nonneg)
    k.add_argument("--k", type=_nonneg)
    k.add_argument("--m", type=_nonneg)
    k.add_argument("--n", type=_nonneg)
    k.add_argument("--d", type=_nonneg)
    k.add_argument("--p", type=_nonneg)
    k.add_argument("--left", metavar="SPEC", help="product: left factor")
    k.add_argument("--right", metavar="SPEC", help="product: right factor")
    k.add_argument("--left-set", metavar="PATH")
    k.add_argument("--right-set", metavar="PATH")
    k.add_argument("--out", metavar="PATH", help="output file (default stdout)")

    r = sub.add_parser("reproduce", help="recompute every claim and report match/bounded/budget/mismatch")
    _search_args(r)
    r.set_defaults(budget=ReproConfig.node_budget)
    r.add_argument("--skip-slow", action="store_true")
    r.add_argument("--json", metavar="PATH")
    return ap


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InvalidParameter(f"construct {args.name} needs " + ", ".join("--" + n.replace("_", "-")
                                                                           for n in missing))


def cmd_compute(args) -> int:
    g = parse_graph_spec(args.graph)
    config = SearchConfig(node_budget=args.budget, use_symmetry=not args.no_symmetry,
                          worker_count_hint=max(1, args.workers))
    res = compute(g, Params(args.d, args.p), config, force_stage=args.stage)
    if res.value is None:
        if res.bounds is not None:
            print(f"bounds {ext_str(res.bounds.lower)} .. {ext_str(res.bounds.upper)} (stage {res.stage})")
        elif res.report is None:
            print(f"stage {res.stage} does not settle this query")
    else:
        print(ext_str(res.value))
        print(f"stage: {res.stage}")
    if res.certificate is not None:
        print("certificate: " + " ".join(map(str, res.certificate)))
    if res.report is not None:
        print(f"nodes: {res.report.nodes_explored}  time: {res.report.wall_time:.2f}s  "
              f"provenance: {','.join(res.report.provenance)}")
    for note in res.notes:
        print("note: " + note)
    if args.json:
        write_json(args.json, res.to_json())
    if res.report is not None and isinstance(res.report.result, Exhausted):
        print(f"budget exhausted; best upper bound {ext_str(res.report.best_upper)}")
        return EXIT_BUDGET
    if res.value is None:
        return EXIT_NA
    return EXIT_OK


def cmd_formula(args) -> int:
    g = parse_graph_spec(args.graph)
    v = formula_value(g, Params(args.d, args.p), strict=True)
    print(ext_str(v))
    if args.json:
        write_json(args.json, {"graph": args.graph, "d": args.d, "p": args.p, "value": ext_json(v)})
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = parse_graph_spec(args.graph)
    b = bounds(g, Params(args.d, args.p))
    print(f"{ext_str(b.lower)} <= value <= {ext_str(b.upper)}")
    print("lower from: " + ", ".join(b.provenance["lower"]))
    print("upper from: " + ", ".join(b.provenance["upper"]))
    if b.upper_certificate is not None:
        print("certificate: " + " ".join(map(str, b.upper_certificate)))
    if args.json:
        write_json(args.json, b.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    g = parse_graph_spec(args.graph)
    s = read_vertex_set(args.set_path, g)
    verdict = check_dp_set(DistanceOracle(g), s, Params(args.d, args.p))
    print(f"packing: {str(verdict.is_packing).lower()}")
    print(f"dominating: {str(verdict.is_dominating).lower()}")
    for u, w in verdict.packing_violations:
        print(f"  too close: {u} {w}")
    if verdict.undominated:
        shown = verdict.undominated[:20]
        more = len(verdict.undominated) - len(shown)
        print("  undominated: " + " ".join(map(str, shown)) + (f" (+{more} more)" if more else ""))
    if args.json:
        write_json(args.json, verdict.to_json())
    return EXIT_OK if verdict.ok else EXIT_FAIL


def cmd_construct(args) -> int:
    name = args.name
    if name == "product":
        _need(args, "left", "right", "left_set", "right_set", "d", "p")
        gl, gr = parse_graph_spec(args.left), parse_graph_spec(args.right)
        params = Params(args.d, args.p)
        sl, sr = read_vertex_set(args.left_set, gl), read_vertex_set(args.right_set, gr)
        verts = cons.product_set(gl, sl, gr, sr, params)
        spec = f"product({args.left},{args.right})"
        g = parse_graph_spec(spec)
        header = {"name": "product", "graph_spec": spec, "params": {"d": params.d, "p": params.p},
                  "claimed_size": len(sl) * len(sr)}
        text = format_vertex_set(verts, g, header)
    else:
        if name == "x_t":
            _need(args, "t")
            c = cons.x_t_set(args.t)
        elif name == "family55":
            _need(args, "k")
            c = cons.family55_set(args.k)
        elif name == "torus_minus_one":
            _need(args, "m", "n", "d")
            c = cons.torus_minus_one_set(args.m, args.n, Params(args.d, args.p if args.p is not None else args.d))
        else:
            _need(args, "k", "d")
            c = cons.glued_product_set(args.k, args.d)
        text = format_vertex_set(c.vertices, c.graph, c.header())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    cfg = ReproConfig(node_budget=args.budget, workers=max(1, args.workers),
                      use_symmetry=not args.no_symmetry, skip_slow=args.skip_slow)

    def show(rec):
        print(f"{rec.status:9s} {rec.claim_id:32s} expected={rec.expected} computed={rec.computed} "
              f"({rec.seconds:.1f}s)", flush=True)

    report = reproduce(cfg, progress=show)
    if args.json:
        write_json(args.json, report.to_json())
    counts = {}
    for rec in report.records:
        counts[rec.status] = counts.get(rec.status, 0) + 1
    print("summary: " + json.dumps(counts, sort_keys=True))
    return EXIT_OK if report.ok else EXIT_MISMATCH


COMMANDS = {"compute": cmd_compute, "formula": cmd_formula, "bounds": cmd_bounds, "verify": cmd_verify,
            "construct": cmd_construct, "reproduce": cmd_reproduce}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (GraphParseError, InvalidParameter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except cons.ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (NotApplicable, CapacityError, UnreachableError, InvalidInput) as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_NA
    except DpdomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NA


if __name__ == "__main__":
    sys.exit(main())
