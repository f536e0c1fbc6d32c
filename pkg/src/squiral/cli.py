"""Command-line front end.

Exit codes: 0 success, 1 a check or cross-path comparison failed, 2 usage
error, 3 a size, level or memory limit was hit (including brute-force counts
that could not be certified within the level budget).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import config
from .checks import SUITES, run_suite
from .complexity import brute_force_triple
from .errors import ResourceLimitError, UnverifiedCountError
from .sequences import closed_form_A, recursion_triple, sequence_table, simplified_recursion_A
from .substitution import BinaryGrid, supertile

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

_INT64_MAX = 2**63 - 1


def _json_int(v: int):
    return v if -_INT64_MAX - 1 <= v <= _INT64_MAX else str(v)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def render_pbm(g: BinaryGrid, raw: bool = False) -> bytes:
    """P1 (plain) or P4 (raw) bitmap, row 1 first, 1 = symbol 1 (black)."""
    if raw:
        return f"P4\n{g.cols} {g.rows}\n".encode() + g.packed.tobytes()
    lines = [f"P1\n{g.cols} {g.rows}"]
    for row in g.to_array().tolist():
        digits = "".join(map(str, row))
        lines.extend(digits[k : k + 70] for k in range(0, len(digits), 70))
    return ("\n".join(lines) + "\n").encode()


def cmd_supertile(args) -> int:
    g = supertile(args.n)
    out = sys.stdout.buffer
    if args.format == "pbm":
        out.write(render_pbm(g, raw=args.raw))
    else:
        out.write((g.to_text() + "\n").encode())
    out.flush()
    return EXIT_OK


def _triple_fields(t, with_bc: bool) -> dict:
    d = {"A": t.A}
    if with_bc:
        d.update(B=t.B, C=t.C)
    return d


def cmd_count(args) -> int:
    n = args.n
    if n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    paths: dict[str, dict] = {}
    notes: dict[str, str] = {}
    wanted = ("brute", "recursion", "closed") if args.method == "all" else (args.method,)
    for method in wanted:
        if method == "brute":
            try:
                paths["brute"] = _triple_fields(brute_force_triple(n), True)
            except (ResourceLimitError, UnverifiedCountError) as exc:
                if args.method != "all":
                    raise
                notes["brute"] = f"unavailable: {exc}"
        elif method == "recursion":
            paths["recursion"] = _triple_fields(recursion_triple(n), True)
        elif method == "closed":
            paths["closed"] = {"A": closed_form_A(n)}
    if args.method == "all":
        paths["simplified"] = {"A": simplified_recursion_A(n)}

    agree = True
    if len(paths) > 1:
        for key in ("A", "B", "C"):
            values = {p[key] for p in paths.values() if key in p}
            agree = agree and len(values) <= 1

    if args.format == "json":
        body = {"n": n, "method": args.method}
        body["paths"] = {k: {f: _json_int(v) for f, v in p.items()} for k, p in paths.items()}
        if notes:
            body["notes"] = notes
        if args.method == "all":
            body["agree"] = agree
        print(_dumps(body))
    else:
        for name, p in paths.items():
            fields = " ".join(f"{k}={v}" for k, v in p.items())
            print(fields if len(wanted) == 1 else f"{name}: {fields}")
        for name, note in notes.items():
            print(f"{name}: {note}")
        if args.method == "all":
            print("all paths agree" if agree else "DISAGREEMENT between paths")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args) -> int:
    results = run_suite(
        args.suite, max_size=args.max_size, brute_max=args.brute_max, seq_max=args.seq_max
    )
    passed = all(r.passed for r in results)
    summary = {
        "suite": args.suite,
        "passed": passed,
        "checks": [r.as_dict() for r in results],
    }
    if args.format == "json":
        print(_dumps(summary))
    else:
        for r in results:
            print(r.line())
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
        print(_dumps(summary))
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as fh:
            fh.write(_dumps(summary))
    return EXIT_OK if passed else EXIT_FAIL


def cmd_sequence(args) -> int:
    if args.max_n < 1:
        print("error: --max-n must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    rows = sequence_table(args.max_n)
    out = sys.stdout
    if args.format == "json":
        out.write(_dumps([{k: _json_int(v) for k, v in t.as_dict().items()} for t in rows]) + "\n")
    else:
        out.write("n,A,B,C\n")
        for t in rows:
            out.write(f"{t.n},{t.A},{t.B},{t.C}\n")
    return EXIT_OK


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("limits")
    g.add_argument("--max-level", type=int, default=None,
                   help="largest supertile level (env SQUIRAL_MAX_LEVEL, default 9, cap 12)")
    g.add_argument("--search-level", type=int, default=None,
                   help="largest level the saturation search enumerates (default 8)")
    g.add_argument("--mem-budget", type=int, default=None,
                   help="byte budget for pattern enumeration (env SQUIRAL_MEM_BUDGET)")
    g.add_argument("--threads", type=int, default=None, help="worker threads, 0 = auto")
    g.add_argument("-v", "--verbose", action="count", default=0)
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squiral",
        description="Exact pattern counts of the squiral tiling.",
    )
    common = _common_options()
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("supertile", parents=[common], help="print the supertile T_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "pbm"), default="text")
    p.add_argument("--raw", action="store_true", help="binary P4 instead of plain P1")
    p.set_defaults(func=cmd_supertile)

    p = sub.add_parser("count", parents=[common], help="count n x n (and rectangular) patterns")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("brute", "recursion", "closed", "all"), default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="run property suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--brute-max", type=int, default=25)
    p.add_argument("--seq-max", type=int, default=100_000)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--summary", help="also write the JSON summary to this file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequence", parents=[common], help="export (n, A, B, C) rows")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sequence)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config.limits = config.RunConfig.from_env(
            max_level=args.max_level,
            search_level=args.search_level,
            memory_budget=args.mem_budget,
            threads=args.threads,
            output_format=getattr(args, "format", None),
            verbosity=args.verbose,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (ResourceLimitError, UnverifiedCountError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
