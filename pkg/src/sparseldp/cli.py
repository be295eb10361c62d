"""Command-line front end.

Subcommands: defect | design | sweep | check-pure | sample.  Every run is a
pure function of its flags; results go to stdout or --out as csv, json, or a
4-decimal human-readable table.  Exit codes: 0 success, 1 well-formed
negative result (infeasible design, not pure), 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from .calibration import min_feasible_support, sweep_param, sweep_support
from .mechanisms import Kernel, SpecError, TruncatedParams, load_spec, sample
from .privacy import pure_ldp_epsilon, separation_breakdown, worst_case_defect

FORMATS = ("csv", "json", "table")


def _fmt4(x: float) -> str:
    # half-away-from-zero on the exact binary value
    return str(Decimal(x).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP))


def _fmt_varied(x: float) -> str:
    return f"{x:g}"


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return repr(v) if isinstance(v, float) else str(v)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_text(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(_csv_cell(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"
    # table: 4-decimal floats, left-aligned columns
    cells = [header] + [
        [_fmt4(v) if isinstance(v, float) else ("" if v is None else str(v)) for v in row] for row in rows
    ]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells) + "\n"


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _parse_int_list(text: str, flag: str) -> list[int]:
    items = [v for v in text.split(",") if v.strip()]
    if not items:
        raise SpecError(f"{flag} needs at least one value")
    try:
        return [int(v) for v in items]
    except ValueError:
        raise SpecError(f"{flag} must be a comma-separated list of integers") from None


def _parse_float_list(text: str, flag: str) -> list[float]:
    items = [v for v in text.split(",") if v.strip()]
    if not items:
        raise SpecError(f"{flag} needs at least one value")
    try:
        return [float(v) for v in items]
    except ValueError:
        raise SpecError(f"{flag} must be a comma-separated list of numbers") from None


def cmd_defect(args) -> int:
    kernel = Kernel(args.family, args.param)
    params = TruncatedParams(kernel, args.s, args.eps, args.range)
    if args.per_h:
        rows = []
        for h in range(args.range + 1):
            b = separation_breakdown(kernel, args.eps, params.t, h)
            rows.append([h, b.total, b.support_leakage, b.overlap_excess])
        if args.format == "json":
            text = _json_text(
                [
                    {"h": r[0], "delta_h": r[1], "leakage": r[2], "overlap": r[3]}
                    for r in rows
                ]
            )
        else:
            text = _rows_text(["h", "delta_h", "leakage", "overlap"], rows, args.format)
    else:
        delta_star, argmax_h = worst_case_defect(kernel, args.s, args.eps, args.range)
        if args.format == "json":
            text = _json_text({"delta_star": delta_star, "argmax_h": argmax_h})
        else:
            text = _rows_text(["delta_star", "argmax_h"], [[delta_star, argmax_h]], args.format)
    _emit(text, args.out)
    return 0


def cmd_design(args) -> int:
    kernel = Kernel(args.family, args.param)
    res = min_feasible_support(kernel, args.eps, args.delta, args.range, args.s_max)
    r1 = res.moments.r1 if res.moments else None
    r2 = res.moments.r2 if res.moments else None
    if args.format == "json":
        text = _json_text(
            {
                "feasible": res.feasible,
                "s": res.s_chosen,
                "delta_star": res.achieved_delta_star,
                "r1": r1,
                "r2": r2,
                "s_scanned_max": res.s_scanned_max,
            }
        )
    else:
        text = _rows_text(
            ["feasible", "s", "delta_star", "r1", "r2", "s_scanned_max"],
            [[res.feasible, res.s_chosen, res.achieved_delta_star, r1, r2, res.s_scanned_max]],
            args.format,
        )
    _emit(text, args.out)
    return 0 if res.feasible else 1


def cmd_sweep(args) -> int:
    if args.kind == "support":
        if args.s_list is None or args.param is None:
            raise SpecError("support sweep needs --param (fixed kernel) and --s-list (varied sizes)")
        kernel = Kernel(args.family, args.param)
        rows = sweep_support(kernel, args.eps, args.range, _parse_int_list(args.s_list, "--s-list"))
    else:
        if args.param_list is None or args.s is None:
            raise SpecError("param sweep needs --s (fixed size) and --param-list (varied kernel values)")
        rows = sweep_param(
            args.family, _parse_float_list(args.param_list, "--param-list"), args.eps, args.range, args.s
        )
    if args.format == "json":
        text = _json_text(
            [{"varied": r.varied, "delta_star": r.delta_star, "r1": r.r1, "r2": r.r2} for r in rows]
        )
    elif args.format == "csv":
        lines = ["varied,delta_star,r1,r2"]
        lines += [f"{_csv_cell(r.varied)},{_csv_cell(r.delta_star)},{_csv_cell(r.r1)},{_csv_cell(r.r2)}" for r in rows]
        text = "\n".join(lines) + "\n"
    else:
        cells = [["varied", "delta_star", "r1", "r2"]] + [
            [_fmt_varied(r.varied), _fmt4(r.delta_star), _fmt4(r.r1), _fmt4(r.r2)] for r in rows
        ]
        widths = [max(len(r[i]) for r in cells) for i in range(4)]
        text = "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells) + "\n"
    _emit(text, args.out)
    return 0


def cmd_check_pure(args) -> int:
    spec = load_spec(args.spec)
    res = pure_ldp_epsilon(spec)
    witness = list(res.witness) if res.witness is not None else None
    if args.format == "json":
        text = _json_text({"finite": res.finite, "epsilon_star": res.epsilon_star, "witness": witness})
    elif args.format == "csv":
        w = witness or ["", "", ""]
        text = (
            "finite,epsilon_star,witness_x,witness_x_prime,witness_y\n"
            f"{_csv_cell(res.finite)},{_csv_cell(res.epsilon_star)},{w[0]},{w[1]},{w[2]}\n"
        )
    else:
        if res.finite:
            eps = "0.0000" if res.epsilon_star is None else _fmt4(res.epsilon_star)
            text = f"pure level: {eps}\nwitness: {witness}\n"
        else:
            text = f"not pure for any finite level\nsupport mismatch witness: {witness}\n"
    _emit(text, args.out)
    return 0 if res.finite else 1


def cmd_sample(args) -> int:
    params = TruncatedParams(Kernel(args.family, args.param), args.s)
    draws = sample(params, args.x, args.seed, args.n)
    if args.histogram:
        values, counts = np.unique(draws, return_counts=True)
        rows = [[int(v), int(c)] for v, c in zip(values, counts)]
        if args.format == "json":
            text = _json_text([{"value": r[0], "count": r[1]} for r in rows])
        else:
            text = _rows_text(["value", "count"], rows, args.format)
    else:
        if args.format == "json":
            text = _json_text({"samples": [int(v) for v in draws]})
        else:
            lines = ["sample"] if args.format == "csv" else []
            lines += [str(int(v)) for v in draws]
            text = "\n".join(lines) + "\n" if lines else ""
    _emit(text, args.out)
    return 0


def _add_common(p: argparse.ArgumentParser, *, family=True, out=True) -> None:
    if family:
        p.add_argument("--family", choices=("laplace", "gaussian"), required=True)
    p.add_argument("--format", choices=FORMATS, default="table")
    if out:
        p.add_argument("--out", default=None, help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparseldp",
        description="Exact privacy guarantees and support-size design for sparse local randomizers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("defect", help="worst-case defect of a window family over a privacy range")
    _add_common(p)
    p.add_argument("--param", type=float, required=True, help="kernel parameter (lam or sigma)")
    p.add_argument("--s", type=int, required=True, help="odd support size")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--range", type=int, required=True, help="privacy range (max input separation)")
    p.add_argument("--per-h", dest="per_h", action="store_true", help="one row per separation with the leakage/overlap split")
    p.set_defaults(func=cmd_defect)

    p = sub.add_parser("design", help="smallest support size meeting a defect target")
    _add_common(p)
    p.add_argument("--param", type=float, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--range", type=int, required=True)
    p.add_argument("--s-max", dest="s_max", type=int, default=None, help="odd scan limit (defaults to a generous bound)")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("sweep", help="tabulate defect and distortion over sizes or kernel parameters")
    _add_common(p)
    p.add_argument("--kind", choices=("support", "param"), required=True)
    p.add_argument("--param", type=float, default=None, help="fixed kernel parameter (support sweep)")
    p.add_argument("--s", type=int, default=None, help="fixed support size (param sweep)")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--range", type=int, required=True)
    p.add_argument("--s-list", dest="s_list", default=None, help="comma-separated odd sizes to sweep")
    p.add_argument("--param-list", dest="param_list", default=None, help="comma-separated kernel parameters to sweep")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("check-pure", help="exact pure level of a channel spec, or its mismatch witness")
    _add_common(p, family=False)
    p.add_argument("--spec", required=True, help="path to a MechanismSpec JSON file")
    p.set_defaults(func=cmd_check_pure)

    p = sub.add_parser("sample", help="seeded draws from a window family")
    _add_common(p)
    p.add_argument("--param", type=float, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--histogram", action="store_true", help="emit value/count pairs instead of raw draws")
    p.set_defaults(func=cmd_sample)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
