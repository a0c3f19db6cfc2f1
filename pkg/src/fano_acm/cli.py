"""Command-line front end.

All subcommands read their inputs from flags and write results to stdout
(diagnostics to stderr) in one of three formats: human (default), json or
csv.  Output is deterministic: identical invocations produce byte-identical
output, so json/csv are safe for golden files.

Exit codes: 0 success, 1 invalid input (bad flags, d outside {3,4,5},
rank < 3), 2 valid query with a negative answer (no matching rank-2 model,
or a non-admissible witness request).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from .acm import (
    BoundExceeded,
    InvalidRank,
    NotAdmissible,
    ORACLE_DEFAULT_BOUND,
    admissible,
    enumerate_admissible,
    oracle_enumerate,
    validate_witness,
    witness,
)
from .catalog import (
    TABLE_EXPORT_COLUMNS,
    UnavailableBlock,
    table_export_rows,
    verify_table1,
)
from .chow import ChernData, FanoThreefold, chi_twist, format_rational, twist
from .rank2 import NoACMBundle, SplitLineBundles, TwistOf, classify_rank2

__all__ = ["run", "main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the contract here is 1
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _chern_str(c: ChernData) -> str:
    return f"(rank={c.rank}, c1={c.c1}, c2={c.c2}, c3={c.c3})"


def _chern_json(c: ChernData) -> dict:
    return {"rank": c.rank, "c1": c.c1, "c2": c.c2, "c3": c.c3}


def _rational_json(q: Fraction) -> int | str:
    return q.numerator if q.denominator == 1 else format_rational(q)


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _triple_row(t) -> list[object]:
    return [t.d, t.rank, t.c1, t.c2, t.c3, t.curve_degree, t.curve_genus]


_TRIPLE_HEADER = ["d", "rank", "c1", "c2", "c3", "curve_degree", "curve_genus"]


def _cmd_chi(args: argparse.Namespace) -> int:
    X = FanoThreefold(args.d)
    c = ChernData(args.rank, args.c1, args.c2, args.c3)
    value = chi_twist(c, X, args.twist)
    if args.format == "json":
        _emit_json(
            {
                "d": X.d,
                "chern": _chern_json(c),
                "twist": args.twist,
                "chi": _rational_json(value),
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["d", "rank", "c1", "c2", "c3", "twist", "chi"],
            [[X.d, c.rank, c.c1, c.c2, c.c3, args.twist, format_rational(value)]],
        )
    else:
        print(f"{X}: F = {_chern_str(c)}")
        print(f"chi(F({args.twist})) = {format_rational(value)}")
    return 0


def _cmd_twist(args: argparse.Namespace) -> int:
    X = FanoThreefold(args.d)
    c = ChernData(args.rank, args.c1, args.c2, args.c3)
    out = twist(c, X, args.t)
    if args.format == "json":
        _emit_json(
            {"d": X.d, "chern": _chern_json(c), "t": args.t, "result": _chern_json(out)}
        )
    elif args.format == "csv":
        _emit_csv(
            ["d", "rank", "c1", "c2", "c3", "t", "rank_out", "c1_out", "c2_out", "c3_out"],
            [[X.d, c.rank, c.c1, c.c2, c.c3, args.t, out.rank, out.c1, out.c2, out.c3]],
        )
    else:
        print(f"{X}: F = {_chern_str(c)}")
        print(f"F({args.t}) = {_chern_str(out)}")
    return 0


def _cmd_classify2(args: argparse.Namespace) -> int:
    X = FanoThreefold(args.d)
    verdict = classify_rank2(X, args.c1, args.c2)
    if args.format == "json":
        _emit_json(
            {"d": X.d, "c1": args.c1, "c2": args.c2, "verdict": verdict.to_json()}
        )
    elif args.format == "csv":
        row: list[object] = [X.d, args.c1, args.c2, verdict.kind, "", "", ""]
        if isinstance(verdict, TwistOf):
            row[4] = verdict.twist
        elif isinstance(verdict, SplitLineBundles):
            row[5], row[6] = verdict.a, verdict.b
        _emit_csv(["d", "c1", "c2", "kind", "twist", "a", "b"], [row])
    else:
        print(f"{X}: rank 2, c1={args.c1}, c2={args.c2}")
        if isinstance(verdict, TwistOf):
            c = verdict.chern(X)
            print(f"verdict: {verdict.kind} t={verdict.twist}, {verdict.render()} = {_chern_str(c)}")
        elif isinstance(verdict, SplitLineBundles):
            c = verdict.chern(X)
            print(f"verdict: split, {verdict.render()} = {_chern_str(c)}")
        else:
            print("verdict: none (no such bundle without intermediate cohomology)")
    if isinstance(verdict, NoACMBundle):
        print(
            f"no rank-2 model on {X} has c1={args.c1}, c2={args.c2}",
            file=sys.stderr,
        )
        return 2
    return 0


def _cmd_admissible(args: argparse.Namespace) -> int:
    X = FanoThreefold(args.d)
    triples = enumerate_admissible(X, args.rank, relaxed=args.relaxed)
    if args.format == "json":
        _emit_json(
            {
                "d": X.d,
                "rank": args.rank,
                "relaxed": args.relaxed,
                "triples": [t.to_json() for t in triples],
            }
        )
    elif args.format == "csv":
        _emit_csv(_TRIPLE_HEADER, [_triple_row(t) for t in triples])
    else:
        mode = "relaxed" if args.relaxed else "strict"
        print(f"{X}: rank {args.rank}, {mode} admissible c1 values: {len(triples)}")
        for t in triples:
            print(
                f"  c1={t.c1}: c2={t.c2}, c3={t.c3}, "
                f"curve degree {t.curve_degree}, genus {t.curve_genus}"
            )
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    X = FanoThreefold(args.d)
    dec = witness(X, args.rank, args.c1)  # NotAdmissible -> exit 2 in run()
    report = validate_witness(X, dec, args.rank, args.c1)
    total = dec.chern(X)
    if args.format == "json":
        _emit_json(
            {
                "d": X.d,
                "rank": args.rank,
                "c1": args.c1,
                "decomposition": dec.to_json(),
                "rendered": dec.render(),
                "chern": _chern_json(total),
                "validation": report.to_json(),
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["d", "rank", "c1", "decomposition", "c2", "c3", "valid"],
            [[X.d, args.rank, args.c1, dec.render(), total.c2, total.c3, report.ok]],
        )
    else:
        print(f"{X}: rank {args.rank}, c1={args.c1}")
        print(f"witness: {dec.render()} = {_chern_str(total)}")
        for check in report.checks:
            print(f"  [{'ok' if check.passed else 'FAIL'}] {check.name}: {check.detail}")
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    X = FanoThreefold(args.d)
    rows = []
    for rank in range(3, args.max_rank + 1):
        for t in enumerate_admissible(X, rank, relaxed=args.relaxed):
            strict = admissible(X, t.rank, t.c1)
            rows.append((t, strict, "witnessed" if strict else "unknown"))
    if args.format == "json":
        _emit_json(
            {
                "d": X.d,
                "max_rank": args.max_rank,
                "relaxed": args.relaxed,
                "triples": [
                    {**t.to_json(), "strict": strict, "existence": existence}
                    for t, strict, existence in rows
                ],
            }
        )
    elif args.format == "csv":
        _emit_csv(
            _TRIPLE_HEADER + ["strict", "existence"],
            [_triple_row(t) + [strict, existence] for t, strict, existence in rows],
        )
    else:
        print(f"{X}: admissible triples for 3 <= rank <= {args.max_rank}")
        for t, strict, existence in rows:
            print(
                f"  r={t.rank} c1={t.c1}: c2={t.c2}, c3={t.c3}, "
                f"degree {t.curve_degree}, genus {t.curve_genus} [{existence}]"
            )
    return 0


def _cmd_verify_table(args: argparse.Namespace) -> int:
    X = FanoThreefold(args.d) if args.d is not None else None
    if args.format == "json":
        _emit_json({"rows": table_export_rows(X)})
    elif args.format == "csv":
        rows = table_export_rows(X)
        _emit_csv(
            TABLE_EXPORT_COLUMNS,
            [[row[col] for col in TABLE_EXPORT_COLUMNS] for row in rows],
        )
    else:
        for d in (3, 4, 5) if X is None else (X.d,):
            Xd = FanoThreefold(d)
            rows = table_export_rows(Xd)
            flagged = {(disc.rank, disc.c1): disc for disc in verify_table1(Xd)}
            print(
                f"V_{d}: {len(rows)} applicable rows, "
                f"{len(rows) - len(flagged)} match, {len(flagged)} mismatch"
            )
            for row in rows:
                disc = flagged.get((row["rank"], row["c1"]))
                if disc is None:
                    print(
                        f"  [ok] rank {row['rank']}, c1={row['c1']}: "
                        f"(c2,c3)=({row['c2_computed']},{row['c3_computed']}), "
                        f"{row['decomposition']}"
                    )
                else:
                    print(
                        f"  [MISMATCH] rank {disc.rank}, c1={disc.c1}: printed "
                        f"(c2,c3)=({disc.printed_c2},{disc.printed_c3}), computed "
                        f"({disc.computed_c2},{disc.computed_c3}), forced "
                        f"({disc.forced_c2},{disc.forced_c3}), {row['decomposition']}"
                    )
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    X = FanoThreefold(args.d)
    decs = oracle_enumerate(X, args.rank, args.c1, bound=args.bound)
    if args.format == "json":
        _emit_json(
            {
                "d": X.d,
                "rank": args.rank,
                "c1": args.c1,
                "decompositions": [
                    {"blocks": dec.to_json(), "rendered": dec.render()} for dec in decs
                ],
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["d", "rank", "c1", "decomposition", "c2", "c3"],
            [
                [X.d, args.rank, args.c1, dec.render(), dec.chern(X).c2, dec.chern(X).c3]
                for dec in decs
            ],
        )
    else:
        print(f"{X}: rank {args.rank}, c1={args.c1}: {len(decs)} decomposition(s)")
        for dec in decs:
            print(f"  {dec.render()} = {_chern_str(dec.chern(X))}")
    return 0


def _add_common(p: argparse.ArgumentParser, *, d_required: bool = True) -> None:
    p.add_argument(
        "--d",
        type=int,
        choices=(3, 4, 5),
        required=d_required,
        default=None,
        help="degree of the ambient Fano threefold V_d",
    )
    p.add_argument(
        "--format",
        choices=("human", "json", "csv"),
        default="human",
        help="output format (default: human)",
    )


def _add_chern_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--c1", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)
    p.add_argument("--c3", type=int, required=True)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="fano-acm",
        description="Exact Chern class / Riemann-Roch calculus and ACM-bundle "
        "invariant classification on V_3, V_4, V_5.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("chi", help="Euler characteristic chi(F(t))")
    _add_common(p)
    _add_chern_flags(p)
    p.add_argument("--twist", type=int, default=0)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("twist", help="Chern data of F(t)")
    _add_common(p)
    _add_chern_flags(p)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_twist)

    p = sub.add_parser("classify2", help="rank-2 model with invariants (c1, c2)")
    _add_common(p)
    p.add_argument("--c1", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)
    p.set_defaults(func=_cmd_classify2)

    p = sub.add_parser("admissible", help="admissible triples at one rank")
    _add_common(p)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--relaxed", action="store_true")
    p.set_defaults(func=_cmd_admissible)

    p = sub.add_parser("witness", help="direct-sum witness for (rank, c1)")
    _add_common(p)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--c1", type=int, required=True)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("census", help="admissible triples for 3 <= rank <= N")
    _add_common(p)
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--relaxed", action="store_true")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify-table", help="recompute the census table rows")
    _add_common(p, d_required=False)
    p.set_defaults(func=_cmd_verify_table)

    p = sub.add_parser("oracle", help="brute-force decompositions for (rank, c1)")
    _add_common(p)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--c1", type=int, required=True)
    p.add_argument("--bound", type=int, default=ORACLE_DEFAULT_BOUND)
    p.set_defaults(func=_cmd_oracle)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except NotAdmissible as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (InvalidRank, BoundExceeded, UnavailableBlock, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
