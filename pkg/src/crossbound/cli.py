"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 exact MAX-CUT infeasible at the requested size.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from crossbound.combinatorics import guy_number
from crossbound.crossing_graph import (
    ExactTooLarge,
    HeuristicParams,
    MaxCutResult,
    asymptotic_lower_bound,
    build_crossing_graph,
    crossing_lower_bound,
    exact_max_cut,
    heuristic_max_cut,
)
from crossbound.drawing import build_cylindrical, closed_form_crossings, count_crossings
from crossbound.svg import SvgOptions, render_svg
from crossbound.verify import FourierConfig, counting_checks, fourier_checks, level_checks

CSV_HEADER = ["n", "z", "gn_edges", "maxcut", "method", "lower_bound", "asymptotic_leading"]

REPORT_SCHEMA = {
    "type": "object",
    "required": ["rows"],
    "additionalProperties": False,
    "properties": {
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": CSV_HEADER,
                "additionalProperties": False,
                "properties": {
                    "n": {"type": "integer", "minimum": 3},
                    "z": {"type": "integer", "minimum": 0},
                    "gn_edges": {"type": "integer", "minimum": 0},
                    "maxcut": {"type": "integer", "minimum": 0},
                    "method": {"enum": ["exact", "heuristic"]},
                    "lower_bound": {"type": "integer"},
                    "asymptotic_leading": {"type": "number"},
                },
            },
        }
    },
}


@dataclass(frozen=True)
class ReportRow:
    n: int
    z: int
    gn_edges: int
    maxcut: int
    method: str
    lower_bound: int
    asymptotic_leading: float


def _bool(v: bool) -> str:
    return "true" if v else "false"


def solve(n: int, params: HeuristicParams | None = None) -> MaxCutResult:
    """Exact MAX-CUT when within the effort limit, heuristic otherwise."""
    g = build_crossing_graph(n)
    try:
        return exact_max_cut(g)
    except ExactTooLarge:
        p = params or HeuristicParams()
        return heuristic_max_cut(g, p.seed, p.restarts, p.iterations)


def report_rows(n_min: int, n_max: int) -> list[ReportRow]:
    rows = []
    for n in range(n_min, n_max + 1):
        result = solve(n)
        edges = math.comb(n, 4)
        rows.append(ReportRow(n, guy_number(n), edges, result.value, result.method,
                              crossing_lower_bound(n, result.value), asymptotic_lower_bound(n)))
    return rows


def format_report(rows: list[ReportRow], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"rows": [asdict(r) for r in rows]}, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([getattr(r, k) for k in CSV_HEADER])
    return buf.getvalue()


def _cmd_upper(args) -> int:
    d = build_cylindrical(args.n)
    crossings, z, closed = count_crossings(d), guy_number(args.n), closed_form_crossings(args.n)
    print(f"crossings={crossings} Z={z} closed_form={closed} match={_bool(crossings == z == closed)}")
    if args.svg:
        Path(args.svg).write_text(render_svg(d, SvgOptions(args.layout, args.size)), encoding="utf-8")
    return 0


def _cmd_gn(args) -> int:
    g = build_crossing_graph(args.n)
    print(f"vertices={g.num_vertices} edges={g.num_edges} isolated={len(g.isolated())}")
    return 0


def _cmd_maxcut(args) -> int:
    g = build_crossing_graph(args.n)
    if args.mode == "exact":
        try:
            result = exact_max_cut(g, effort_limit=args.effort_limit)
        except ExactTooLarge as exc:
            print(f"error: {exc} (--mode heuristic)", file=sys.stderr)
            return 3
    else:
        result = heuristic_max_cut(g, args.seed, args.restarts, args.iters)
    bound = crossing_lower_bound(args.n, result.value)
    print(f"maxcut={result.value} lower_bound={bound} certificate={_bool(result.certificate)}")
    print(f"method={result.method}")
    if not result.certificate:
        print("note: heuristic cut; lower_bound is not certified")
    return 0


def _cmd_bound(args) -> int:
    try:
        result = exact_max_cut(build_crossing_graph(args.n))
        print(f"lower_bound={crossing_lower_bound(args.n, result.value)} method=exact")
    except ExactTooLarge:
        print("lower_bound=unavailable (exact MAX-CUT out of reach)")
    print(f"asymptotic_leading={asymptotic_lower_bound(args.n):.3f} (leading-order)")
    return 0


def _run_checks(checks) -> int:
    for check in checks:
        print(check.line())
        if not check.ok:
            return 1
    return 0


def _cmd_verify(args) -> int:
    if args.what == "fourier":
        cfg = FourierConfig(args.trials, args.truncation, args.grid, args.seed)
        return _run_checks(fourier_checks(cfg))
    if args.what == "level":
        return _run_checks(level_checks(args.k_max))
    return _run_checks(counting_checks(args.n_max))


def _cmd_report(args) -> int:
    if args.n_min < 3 or args.n_max < args.n_min:
        print("error: need 3 <= n-min <= n-max", file=sys.stderr)
        return 2
    text = format_report(report_rows(args.n_min, args.n_max), args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _n(value: str) -> int:
    n = int(value)
    if n < 3:
        raise argparse.ArgumentTypeError(f"n must be >= 3, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crossbound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("upper", help="cylindrical drawing vs Z(n)")
    p.add_argument("--n", type=_n, required=True)
    p.add_argument("--svg")
    p.add_argument("--layout", choices=["discs", "circle"], default="discs")
    p.add_argument("--size", type=int, default=400)
    p.set_defaults(func=_cmd_upper)

    p = sub.add_parser("gn", help="size of the crossing graph G_n")
    p.add_argument("--n", type=_n, required=True)
    p.set_defaults(func=_cmd_gn)

    p = sub.add_parser("maxcut", help="MAX-CUT of G_n and the resulting lower bound")
    p.add_argument("--n", type=_n, required=True)
    p.add_argument("--mode", choices=["exact", "heuristic"], required=True)
    p.add_argument("--seed", type=int, default=HeuristicParams.seed)
    p.add_argument("--restarts", type=int, default=HeuristicParams.restarts)
    p.add_argument("--iters", type=int, default=HeuristicParams.iterations)
    p.add_argument("--effort-limit", type=int, default=30)
    p.set_defaults(func=_cmd_maxcut)

    p = sub.add_parser("bound", help="certified lower bound and asymptotic leading term")
    p.add_argument("--n", type=_n, required=True)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("verify", help="numerical verification sweeps")
    vsub = p.add_subparsers(dest="what", required=True)
    v = vsub.add_parser("fourier")
    v.add_argument("--trials", type=int, default=FourierConfig.trials)
    v.add_argument("--truncation", type=int, default=FourierConfig.truncation)
    v.add_argument("--grid", type=int, default=FourierConfig.grid)
    v.add_argument("--seed", type=int, default=FourierConfig.seed)
    v = vsub.add_parser("level")
    v.add_argument("--k-max", type=int, default=50)
    v = vsub.add_parser("counting")
    v.add_argument("--n-max", type=int, default=60)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("report", help="one row per n: Z(n), |E(G_n)|, MAX-CUT, bounds")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
