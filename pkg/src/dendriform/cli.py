"""Command-line front end.

Subcommands: normalize, reduce, count, hilbert, gk, verify-gsb, oracle-dim.
Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Output is deterministic: identical arguments produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gsbcheck, oracle, series
from .poly import Polynomial
from .rewrite import normal_form
from .terms import ParseError, count_normal_lwords, normalize, parse_lword


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _read_expressions(args) -> list[str]:
    if args.stdin and args.expressions:
        raise _UsageError("give expressions either as arguments or on stdin, not both")
    if args.stdin:
        lines = [line.strip() for line in sys.stdin]
        exprs = [line for line in lines if line]
    else:
        exprs = list(args.expressions)
    if not exprs:
        raise _UsageError("no input expressions")
    return exprs


class _UsageError(Exception):
    pass


def _cmd_normalize(args) -> int:
    results = []
    for text in _read_expressions(args):
        word = normalize(parse_lword(text, args.generators))
        results.append({"input": text, "normal": str(word)})
    if args.format == "json":
        _emit_json(results)
    else:
        for row in results:
            print(row["normal"])
    return 0


def _cmd_reduce(args) -> int:
    results = []
    for text in _read_expressions(args):
        word = normalize(parse_lword(text, args.generators))
        n = args.generators
        reduced = normal_form(Polynomial.monomial(word, n=n))
        results.append({"input": text, "normal_form": reduced})
    if args.format == "json":
        _emit_json([{"input": r["input"], "normal_form": r["normal_form"].to_json_dict()} for r in results])
    else:
        for row in results:
            print(str(row["normal_form"]))
    return 0


def _cmd_count(args) -> int:
    rows = []
    mismatch = False
    for m in range(1, args.max_degree + 1):
        lwords = count_normal_lwords(m, args.generators)
        dd = series.dim_closed(m, args.generators)
        row = {"degree": m, "normal_lwords": lwords, "dd_words": dd}
        if args.enumerate:
            enum_l = len(oracle.enumerate_normal_lwords(m, args.generators).words)
            enum_dd = len(oracle.enumerate_dd_words(m, args.generators))
            row["enumerated_lwords"] = enum_l
            row["enumerated_dd_words"] = enum_dd
            if enum_l != lwords or enum_dd != dd:
                mismatch = True
        rows.append(row)
    if args.format == "json":
        _emit_json(rows)
    else:
        for row in rows:
            extra = ""
            if args.enumerate:
                extra = f"  enumerated {row['enumerated_lwords']}/{row['enumerated_dd_words']}"
            print(f"degree {row['degree']:>2}  normal words {row['normal_lwords']:>12}  dd words {row['dd_words']:>12}{extra}")
    if mismatch:
        print("count mismatch between recursion and enumeration", file=sys.stderr)
        return 1
    return 0


def _cmd_hilbert(args) -> int:
    try:
        table = series.dimension_table(args.max_degree, args.generators, args.method)
    except RuntimeError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        payload = table.to_json_dict()
        payload["method"] = args.method
        _emit_json(payload)
    else:
        for row in table.rows:
            print(f"degree {row.degree:>2}  shapes {row.shapes:>14}  dim {row.dim:>18}")
    return 0


def _cmd_gk(args) -> int:
    rows = [series.gk_statistic(d, args.generators) for d in args.degrees]
    if args.format == "json":
        _emit_json([{"degree": s.degree, "value": str(s.value)} for s in rows])
    else:
        for s in rows:
            print(f"degree {s.degree:>8}  log-dim/log-degree {s.value}")
    return 0


def _cmd_verify_gsb(args) -> int:
    if args.max_degree < 3:
        raise _UsageError("verification needs --max-degree at least 3")
    reports = []
    reports += gsbcheck.right_mult_sweep(args.max_degree, args.generators)
    reports += gsbcheck.check_local_confluence(args.max_degree, args.generators)
    if args.named_cases:
        reports += gsbcheck.check_named_cases(args.generators)
    ok = all(r.ok for r in reports)
    if args.format == "json":
        _emit_json([r.to_json_dict() for r in reports])
    else:
        kinds = {}
        for r in reports:
            kinds.setdefault(r.kind, []).append(r)
        for kind in sorted(kinds):
            group = kinds[kind]
            good = sum(1 for r in group if r.ok)
            print(f"{kind}: {good}/{len(group)} ok")
        for r in reports:
            if not r.ok:
                print(f"FAIL {r.kind} at {r.ambiguity_word}: residual {r.residual}")
        print(f"overall: {'ok' if ok else 'FAILED'}")
    return 0 if ok else 1


def _cmd_oracle_dim(args) -> int:
    m, n = args.degree, args.generators
    n_words = len(oracle.enumerate_normal_lwords(m, n).words)
    if m < 3:
        rank = 0
    else:
        rank = oracle.build_relation_matrix(m, n, args.include_f3).rank
    quotient = n_words - rank
    closed = series.dim_closed(m, n)
    payload = {
        "degree": m,
        "n": n,
        "n_words": n_words,
        "rank": rank,
        "quotient_dim": quotient,
        "closed_form": closed,
        "agree": quotient == closed,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        print(
            f"degree {m}  words {n_words}  rank {rank}  quotient {quotient}"
            f"  closed form {closed}  agree {payload['agree']}"
        )
    return 0 if payload["agree"] else 1


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _degree_list(text: str) -> list[int]:
    try:
        degrees = [int(piece) for piece in text.split(",") if piece.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if not degrees or any(d < 2 for d in degrees):
        raise argparse.ArgumentTypeError("degrees must be integers >= 2")
    return degrees


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks (reserved)")

    parser = argparse.ArgumentParser(prog="dendriform", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in (
        ("normalize", _cmd_normalize, "rewrite expressions into the normal-word basis"),
        ("reduce", _cmd_reduce, "reduce expressions to dendriform normal form"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("expressions", nargs="*", help="expressions like '((x1 > x2) < x3)'")
        p.add_argument("--stdin", action="store_true", help="read one expression per line")
        p.add_argument("--generators", type=_positive_int, default=None, help="alphabet size bound")
        p.set_defaults(func=func)

    p = sub.add_parser("count", parents=[common], help="count normal words and dd words per degree")
    p.add_argument("--generators", type=_positive_int, required=True)
    p.add_argument("--max-degree", type=_positive_int, required=True)
    p.add_argument("--enumerate", action="store_true", help="cross-check counts by enumeration")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("hilbert", parents=[common], help="graded dimension table")
    p.add_argument("--generators", type=_positive_int, required=True)
    p.add_argument("--max-degree", type=_positive_int, required=True)
    p.add_argument("--method", choices=series._METHODS, default="all")
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("gk", parents=[common], help="growth statistic log dim / log degree")
    p.add_argument("--generators", type=_positive_int, required=True)
    p.add_argument("--degrees", type=_degree_list, required=True, help="comma-separated degrees")
    p.set_defaults(func=_cmd_gk)

    p = sub.add_parser("verify-gsb", parents=[common], help="verify the rewriting basis at bounded degree")
    p.add_argument("--generators", type=_positive_int, required=True)
    p.add_argument("--max-degree", type=_positive_int, required=True)
    p.add_argument("--named-cases", action="store_true", help="also check the three named overlap shapes")
    p.set_defaults(func=_cmd_verify_gsb)

    p = sub.add_parser("oracle-dim", parents=[common], help="quotient dimension by exact elimination")
    p.add_argument("--generators", type=_positive_int, required=True)
    p.add_argument("--degree", type=_positive_int, required=True)
    p.add_argument("--include-f3", action="store_true", help="also add the redundant F3 rows")
    p.set_defaults(func=_cmd_oracle_dim)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
