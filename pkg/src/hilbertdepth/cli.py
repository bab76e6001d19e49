"""Command-line front end.

Subcommands: qdepth, beta, sqf, hyp, verify.  Exit codes: 0 success, 1 a
mathematical property was violated, 2 bad input or configuration.  JSON
output serializes every mathematical integer as a decimal string so
consumers never truncate, and is byte-identical across runs with the same
seed and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .depth import BetaTable, QDepthResult, beta_table, qdepth
from .dsl import parse_function
from .errors import HilbertDepthError, ParseError
from .hypergeometric import big_e, coeff_table, gauss_2f1
from .report import VerificationReport
from .series import from_table
from .squarefree import (
    HARD_VARIABLE_CAP,
    SquarefreeQuotient,
    alpha_vector,
    format_ideal,
    parse_ideal,
    qdepth_from_alpha,
)
from .verify import BATTERY_ALIASES, BATTERY_NAMES, DEFAULT_SEED, run_battery


def _read_arg(value: str) -> str:
    """Literal argument, or the contents of a file when prefixed with @."""
    if value.startswith("@"):
        return Path(value[1:]).read_text()
    return value


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _print_table(table: BetaTable) -> None:
    values = ", ".join(str(v) for v in table.values)
    print(f"beta table (d={table.d}, k={table.start_k}..{table.d}): [{values}]")


def _print_result(result: QDepthResult) -> None:
    print(f"qdepth:  {result.qdepth}")
    print(f"bounds:  [{result.lower_bound}, {result.upper_bound}]")
    _print_table(result.certificate)
    if result.refutation is None:
        print("refutation: none (depth equals the upper bound)")
    else:
        d, k, b = result.refutation
        print(f"refutation: beta at d={d}, k={k} is {b} < 0")


def cmd_qdepth(args: argparse.Namespace) -> int:
    h = parse_function(_read_arg(args.spec))
    if args.d is not None:
        table = beta_table(h, args.d)
        if args.json:
            _emit_json({"command": "beta", "function": h.to_json_dict(),
                        "table": table.to_json_dict()})
        else:
            _print_table(table)
        return 0
    result = qdepth(h)
    if args.json:
        payload = {"command": "qdepth", "function": h.to_json_dict()}
        payload.update(result.to_json_dict())
        _emit_json(payload)
    else:
        _print_result(result)
    return 0


def cmd_beta(args: argparse.Namespace) -> int:
    h = parse_function(_read_arg(args.spec))
    table = beta_table(h, args.d)
    if args.json:
        _emit_json({"command": "beta", "function": h.to_json_dict(),
                    "table": table.to_json_dict()})
    else:
        _print_table(table)
    return 0


def cmd_sqf(args: argparse.Namespace) -> int:
    upper = parse_ideal(_read_arg(args.upper), args.n)
    lower = parse_ideal(_read_arg(args.lower), args.n)
    quotient = SquarefreeQuotient(args.n, upper, lower)
    alpha = alpha_vector(quotient, args.max_vars)
    direct = qdepth_from_alpha(alpha)
    table = from_table({k: a for k, a in enumerate(alpha) if a})
    via_function = qdepth(table)
    match = direct.qdepth == via_function.qdepth
    if args.json:
        _emit_json(
            {
                "command": "sqf",
                "n": str(args.n),
                "upper": format_ideal(upper),
                "lower": format_ideal(lower),
                "alpha": [str(a) for a in alpha],
                "quotientDepth": direct.to_json_dict(),
                "functionDepth": via_function.to_json_dict(),
                "match": match,
            }
        )
    else:
        print(f"n:     {args.n}")
        print(f"upper: {format_ideal(upper)}")
        print(f"lower: {format_ideal(lower)}")
        print(f"alpha: {alpha}")
        print(f"qdepth from alpha:    {direct.qdepth}")
        print(f"qdepth from function: {via_function.qdepth}")
        _print_table(direct.certificate)
        print("verdict: MATCH" if match else "verdict: MISMATCH")
    return 0 if match else 1


def cmd_hyp(args: argparse.Namespace) -> int:
    n = args.n
    if n < 1:
        raise HilbertDepthError(f"need n >= 1, got {n}")
    row = [gauss_2f1(k, n) for k in range(n + 1)]
    table = coeff_table(n, n, n)
    if args.json:
        _emit_json(
            {
                "command": "hyp",
                "n": str(n),
                "gauss": [str(v) for v in row],
                "bigE": {str(k): str(big_e(n, k)) for k in range(2, n + 1)},
                "coeffRows": [
                    [str(table.value(k, j)) for j in range(k + 1)]
                    for k in range(1, n + 1)
                ],
            }
        )
        return 0
    print(f"gauss values (k=0..{n}): [{', '.join(str(v) for v in row)}]")
    if n >= 2:
        parts = ", ".join(f"E({n},{k})={big_e(n, k)}" for k in range(2, n + 1))
        print(f"integer sums: {parts}")
    print("derivative table (rows k, entries j=0..k, sign annotated):")
    for k in range(1, n + 1):
        entries = []
        for j in range(k + 1):
            v = table.value(k, j)
            mark = "0" if v == 0 else ("+" if v > 0 else "-")
            entries.append(f"{v}({mark})")
        print(f"  k={k}: " + "  ".join(entries))
    return 0


def _battery_job(job: tuple[str, dict]) -> VerificationReport:
    name, params = job
    return run_battery(name, **params)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.all:
        names = list(BATTERY_NAMES)
    else:
        names = [BATTERY_ALIASES.get(b, b) for b in args.batteries]
    if not names:
        print("error: no batteries selected (name some or pass --all)", file=sys.stderr)
        return 2
    unknown = [b for b in names if b not in BATTERY_NAMES]
    if unknown:
        print(f"error: unknown batteries {unknown}", file=sys.stderr)
        return 2
    params = {
        "max_n": args.max_n,
        "max_degree": args.max_degree,
        "trials": args.trials,
        "seed": args.seed,
    }
    jobs = [(name, params) for name in names]
    if args.parallel and args.parallel > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            reports = list(pool.map(_battery_job, jobs))
    else:
        reports = [_battery_job(job) for job in jobs]
    total = sum(len(r.violations) for r in reports)
    if args.json:
        _emit_json(
            {
                "command": "verify",
                "seed": args.seed if args.seed is not None else DEFAULT_SEED,
                "batteries": [r.to_json_dict() for r in reports],
                "violationCount": total,
            }
        )
    else:
        for r in reports:
            print(r.summary_line())
            for v in r.violations:
                print(f"    violation: {v}")
        print(f"total violations: {total}")
    return 0 if total == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbertdepth",
        description="Exact Hilbert depth of Hilbert functions, with certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_qdepth = sub.add_parser("qdepth", help="depth of a function expression")
    p_qdepth.add_argument("spec", help="function expression, or @file")
    p_qdepth.add_argument("--d", type=int, default=None,
                          help="print the beta table at this depth instead")
    p_qdepth.add_argument("--json", action="store_true")
    p_qdepth.set_defaults(func=cmd_qdepth)

    p_beta = sub.add_parser("beta", help="beta table of a function expression")
    p_beta.add_argument("spec", help="function expression, or @file")
    p_beta.add_argument("--d", type=int, required=True)
    p_beta.add_argument("--json", action="store_true")
    p_beta.set_defaults(func=cmd_beta)

    p_sqf = sub.add_parser("sqf", help="depth of a squarefree monomial quotient")
    p_sqf.add_argument("n", type=int, help="number of variables")
    p_sqf.add_argument("upper", help='outer ideal, e.g. "x1*x3, x2" ("1" = ring)')
    p_sqf.add_argument("lower", nargs="?", default="0",
                       help='inner ideal (default "0")')
    p_sqf.add_argument("--max-vars", type=int, default=None,
                       help=f"enumeration cap override (ceiling {HARD_VARIABLE_CAP})")
    p_sqf.add_argument("--json", action="store_true")
    p_sqf.set_defaults(func=cmd_sqf)

    p_hyp = sub.add_parser("hyp", help="exact hypergeometric tables for one n")
    p_hyp.add_argument("n", type=int)
    p_hyp.add_argument("--json", action="store_true")
    p_hyp.set_defaults(func=cmd_hyp)

    p_verify = sub.add_parser("verify", help="run verification batteries")
    p_verify.add_argument(
        "batteries",
        nargs="*",
        help="battery names: " + ", ".join(BATTERY_NAMES)
        + " (aliases: " + ", ".join(f"{a}={b}" for a, b in BATTERY_ALIASES.items()) + ")",
    )
    p_verify.add_argument("--all", action="store_true", help="run every battery")
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--max-degree", type=int, default=None)
    p_verify.add_argument("--trials", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=None,
                          help=f"randomized batteries seed (default {DEFAULT_SEED})")
    p_verify.add_argument("--parallel", type=int, default=1,
                          help="worker processes for running batteries")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HilbertDepthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
