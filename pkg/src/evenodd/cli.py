"""Command-line harness: verification sweeps, counting, listing, bijection
traces, recurrence tables, series and the refined-counterexample search.

Exit status is 0 exactly when the executed checks report zero violations,
1 when violations were found and 2 on usage errors or infeasible bounds.
Identical invocations produce byte-identical output.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .bijections import BIJECTION_NAMES, trace_bijection
from .partitions import FamilySpec, count_family, counts_by_length, enumerate_family
from .qseries import TruncatedSeries, product_for_A, series_from_counts
from .recurrences import (
    VerificationReport,
    family_count_via_table,
    refined_AB_witness,
    shift_identity_check,
    system1,
    variant_for_min_part,
)

DEFAULT_ORACLE_LIMIT = 60
DEFAULT_DP_MAX_N = 200


@dataclass
class RunConfig:
    command: str
    family: FamilySpec
    k: Optional[int]
    max_n: Optional[int]
    n: Optional[int]
    fixed_length: Optional[int]
    output_format: str
    output_path: Optional[str]
    oracle_limit: int
    refined: bool = False
    bijection: Optional[str] = None


def _family_from_args(parser, args) -> FamilySpec:
    min_part = 1
    if args.command == "bijection":
        # --k names the map's shift here; the domain's minimum part follows
        # from the bijection name, not from flags
        pass
    elif getattr(args, "min_part", None) is not None:
        if getattr(args, "k", None) is not None:
            parser.error("--min-part and --k are mutually exclusive")
        min_part = args.min_part
    elif getattr(args, "k", None) is not None:
        if getattr(args, "parity", None) is None:
            parser.error("--k needs --parity {odd,even}")
        min_part = 2 * args.k + 1 if args.parity == "odd" else 2 * args.k
    try:
        return FamilySpec(args.family, args.i, min_part)
    except ValueError as e:
        parser.error(str(e))


def _config(parser, args) -> RunConfig:
    return RunConfig(
        command=args.command,
        family=_family_from_args(parser, args),
        k=getattr(args, "k", None),
        max_n=getattr(args, "max_n", None),
        n=getattr(args, "n", None),
        fixed_length=getattr(args, "fixed_length", None),
        output_format=args.format,
        output_path=args.out,
        oracle_limit=args.oracle_limit,
        refined=getattr(args, "refined", False),
        bijection=getattr(args, "bijection", None),
    )


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_partition(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _render_report(cfg: RunConfig, report: VerificationReport, rows) -> str:
    if cfg.output_format == "json":
        return _json_text(report.to_dict())
    if cfg.output_format == "csv":
        return _csv_text(
            ["i", "m", "n", "expected", "actual"],
            [
                [v["i"], "" if v["m"] is None else v["m"], v["n"], v["expected"], v["actual"]]
                for v in report.violations
            ],
        )
    lines = ["%s %s max_n=%d" % (report.system, report.family, report.max_n)]
    lines += rows
    lines.append("violations: %d" % len(report.violations))
    for v in report.violations[:50]:
        lines.append(
            "  i=%s m=%s n=%s expected=%s actual=%s"
            % (v["i"], v["m"], v["n"], v["expected"], v["actual"])
        )
    return "\n".join(lines) + "\n"


def cmd_verify(cfg: RunConfig) -> int:
    f = cfg.family
    if f.kind == "A":
        max_n = cfg.max_n if cfg.max_n is not None else DEFAULT_DP_MAX_N
        prod = product_for_A(f.i, max_n)
        table = system1()
        rows = []
        report = VerificationReport(
            "A-product=B-counts" + ("+refined" if cfg.refined else ""),
            f.label(),
            max_n,
        )
        for n in range(0, max_n + 1):
            a = prod[n]
            b = family_count_via_table(table, f.i, n)
            rows.append("n=%d: A=%d B=%d" % (n, a, b))
            if a != b:
                report.violations.append(
                    {"i": f.i, "m": None, "n": n, "expected": b, "actual": a}
                )
        if cfg.refined:
            w = refined_AB_witness(f.i, min(max_n, cfg.oracle_limit))
            if w is not None:
                m, n, ca, cb = w
                report.violations.append(
                    {"i": f.i, "m": m, "n": n, "expected": cb, "actual": ca}
                )
        _emit(cfg, _render_report(cfg, report, rows))
        return 0 if report.ok else 1

    max_n = cfg.max_n if cfg.max_n is not None else cfg.oracle_limit
    if max_n > cfg.oracle_limit:
        print(
            "max_n %d exceeds the oracle limit %d for enumeration sweeps; "
            "raise --oracle-limit if this is intended" % (max_n, cfg.oracle_limit),
            file=sys.stderr,
        )
        return 2
    table = variant_for_min_part(f.min_part)
    system = "P=B+%s" % table.variant
    fP = FamilySpec("P", f.i, f.min_part)
    fB = FamilySpec("B", f.i, f.min_part)
    report = VerificationReport(system, "P+B(i=%d,min_part=%d)" % (f.i, f.min_part), max_n)
    rows = []
    for n in range(0, max_n + 1):
        cP = counts_by_length(n, fP)
        cB = counts_by_length(n, fB)
        rows.append("n=%d: P=%d B=%d" % (n, sum(cP.values()), sum(cB.values())))
        for m in range(0, n + 1):
            p_count, b_count = cP[m], cB[m]
            if p_count != b_count:
                report.violations.append(
                    {"i": f.i, "m": m, "n": n, "expected": b_count, "actual": p_count}
                )
            dp = table.value(f.i, m, n)
            for got in (p_count, b_count):
                if got != dp:
                    report.violations.append(
                        {"i": f.i, "m": m, "n": n, "expected": dp, "actual": got}
                    )
    if f.min_part > 1:
        k = (f.min_part - 1) // 2 if f.min_part % 2 == 1 else f.min_part // 2
        report.violations.extend(shift_identity_check(k, f.i, max_n).violations)
        report.system += "+shift-equations"
    _emit(cfg, _render_report(cfg, report, rows))
    return 0 if report.ok else 1


def cmd_count(cfg: RunConfig) -> int:
    f, n = cfg.family, cfg.n
    if n <= cfg.oracle_limit:
        c = count_family(n, f, cfg.fixed_length)
    elif f.kind == "A":
        if cfg.fixed_length is not None:
            print(
                "fixed-length counts for kind A need enumeration; n exceeds the "
                "oracle limit %d" % cfg.oracle_limit,
                file=sys.stderr,
            )
            return 2
        c = product_for_A(f.i, n)[n]
    else:
        table = variant_for_min_part(f.min_part)
        if cfg.fixed_length is not None:
            c = table.value(f.i, cfg.fixed_length, n)
        else:
            c = family_count_via_table(table, f.i, n)
    if cfg.output_format == "json":
        _emit(cfg, _json_text({"count": c, "n": n}))
    elif cfg.output_format == "csv":
        _emit(cfg, _csv_text(["n", "count"], [[n, c]]))
    else:
        _emit(cfg, "%d\n" % c)
    return 0


def cmd_list(cfg: RunConfig) -> int:
    f, n = cfg.family, cfg.n
    if n > cfg.oracle_limit and f.kind != "B":
        print(
            "listing %s at n=%d exceeds the oracle limit %d (only kind B prunes "
            "well enough); raise --oracle-limit if this is intended"
            % (f.kind, n, cfg.oracle_limit),
            file=sys.stderr,
        )
        return 2
    members = list(enumerate_family(n, f, cfg.fixed_length))
    if cfg.output_format == "json":
        _emit(cfg, _json_text([list(p) for p in members]))
    elif cfg.output_format == "csv":
        _emit(cfg, _csv_text(["parts"], [[" ".join(str(x) for x in p)] for p in members]))
    else:
        _emit(cfg, "".join(_fmt_partition(p) + "\n" for p in members))
    return 0


def cmd_bijection(cfg: RunConfig) -> int:
    n = cfg.n
    if n > cfg.oracle_limit:
        print(
            "bijection traces enumerate the domain; n=%d exceeds the oracle "
            "limit %d" % (n, cfg.oracle_limit),
            file=sys.stderr,
        )
        return 2
    name = cfg.bijection
    if name in ("shift-sub-2k", "shift-add-one") and cfg.k is None:
        print("%s needs --k" % name, file=sys.stderr)
        return 2
    kind = cfg.family.kind if cfg.family.kind in ("P", "B") else "P"
    rows = trace_bijection(name, n, k=cfg.k, kind=kind, i=cfg.family.i)
    ok = all(r.domain_ok and r.codomain_ok and r.roundtrip_ok for r in rows)
    if cfg.output_format == "json":
        _emit(cfg, _json_text([r.to_dict() for r in rows]))
    elif cfg.output_format == "csv":
        _emit(
            cfg,
            _csv_text(
                ["bijection", "input", "case", "output", "domain_ok", "codomain_ok"],
                [
                    [
                        r.bijection,
                        " ".join(str(x) for x in r.input),
                        "" if r.case is None else r.case,
                        "" if r.output is None else " ".join(str(x) for x in r.output),
                        r.domain_ok,
                        r.codomain_ok,
                    ]
                    for r in rows
                ],
            ),
        )
    else:
        lines = []
        for r in rows:
            mid = " -> case %d ->" % r.case if r.case is not None else " ->"
            verdict = "round-trip ok" if r.roundtrip_ok and r.codomain_ok else "FAILED"
            lines.append(
                "%s%s %s %s" % (_fmt_partition(r.input), mid, _fmt_partition(r.output), verdict)
            )
        _emit(cfg, "".join(line + "\n" for line in lines))
    return 0 if ok else 1


def cmd_series(cfg: RunConfig) -> int:
    f = cfg.family
    degree = cfg.max_n if cfg.max_n is not None else DEFAULT_DP_MAX_N
    if f.kind == "A":
        s = product_for_A(f.i, degree)
    elif degree <= cfg.oracle_limit:
        s = series_from_counts(f, degree)
    else:
        table = variant_for_min_part(f.min_part)
        s = TruncatedSeries(
            [family_count_via_table(table, f.i, n) for n in range(degree + 1)]
        )
    if cfg.output_format == "json":
        _emit(cfg, _json_text(s.to_decimal_strings()))
    elif cfg.output_format == "csv":
        _emit(cfg, _csv_text(["degree", "coefficient"], list(enumerate(s.coeffs))))
    else:
        _emit(cfg, "".join("%d: %d\n" % (n, c) for n, c in enumerate(s.coeffs)))
    return 0


def cmd_table(cfg: RunConfig) -> int:
    max_n = cfg.max_n if cfg.max_n is not None else DEFAULT_DP_MAX_N
    table = variant_for_min_part(cfg.family.min_part)
    cells = [
        (i, m, n, table.value(i, m, n))
        for i in (1, 2)
        for n in range(0, max_n + 1)
        for m in range(0, n + 1)
    ]
    if cfg.output_format == "json":
        _emit(cfg, _json_text({"variant": table.variant, "cells": [list(c) for c in cells]}))
    elif cfg.output_format == "csv":
        _emit(cfg, _csv_text(["i", "m", "n", "count"], [list(c) for c in cells]))
    else:
        lines = ["%s cells (i,m,n,count)" % table.variant]
        lines += ["%d,%d,%d,%d" % c for c in cells]
        _emit(cfg, "".join(line + "\n" for line in lines))
    return 0


def cmd_witness(cfg: RunConfig) -> int:
    max_n = cfg.max_n if cfg.max_n is not None else 20
    if max_n > cfg.oracle_limit:
        print(
            "witness search enumerates both families; max_n %d exceeds the "
            "oracle limit %d" % (max_n, cfg.oracle_limit),
            file=sys.stderr,
        )
        return 2
    w = refined_AB_witness(cfg.family.i, max_n)
    if cfg.output_format == "json":
        if w is None:
            _emit(cfg, _json_text({"found": False}))
        else:
            m, n, ca, cb = w
            _emit(cfg, _json_text({"found": True, "m": m, "n": n, "countA": ca, "countB": cb}))
    elif cfg.output_format == "csv":
        rows = [] if w is None else [list(w)]
        _emit(cfg, _csv_text(["m", "n", "countA", "countB"], rows))
    else:
        if w is None:
            _emit(cfg, "no witness up to max_n=%d\n" % max_n)
        else:
            _emit(cfg, "m=%d n=%d countA=%d countB=%d\n" % w)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=("A", "B", "P"), default="P")
    common.add_argument("--i", type=int, choices=(1, 2), default=2)
    common.add_argument("--min-part", type=int, dest="min_part")
    common.add_argument("--k", type=int)
    common.add_argument("--parity", choices=("odd", "even"))
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out")
    common.add_argument("--oracle-limit", type=int, dest="oracle_limit", default=DEFAULT_ORACLE_LIMIT)

    parser = argparse.ArgumentParser(
        prog="evenodd",
        description="verify and explore the even-odd partition identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="identity sweeps")
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--refined", action="store_true",
                   help="for kind A, also search for a fixed-length counterexample")

    p = sub.add_parser("count", parents=[common], help="count one family at one weight")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fixed-length", type=int, dest="fixed_length")

    p = sub.add_parser("list", parents=[common], help="list family members at one weight")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fixed-length", type=int, dest="fixed_length")

    p = sub.add_parser("bijection", parents=[common], help="trace a map over its domain")
    p.add_argument("bijection", choices=BIJECTION_NAMES)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("series", parents=[common], help="generating function coefficients")
    p.add_argument("--max-n", type=int, dest="max_n")

    p = sub.add_parser("table", parents=[common], help="recurrence table cells")
    p.add_argument("--max-n", type=int, dest="max_n")

    p = sub.add_parser("witness", parents=[common], help="fixed-length A vs B counterexample")
    p.add_argument("--max-n", type=int, dest="max_n")
    return parser


_COMMANDS = {
    "verify": cmd_verify,
    "count": cmd_count,
    "list": cmd_list,
    "bijection": cmd_bijection,
    "series": cmd_series,
    "table": cmd_table,
    "witness": cmd_witness,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for bound in ("max_n", "n"):
        v = getattr(args, bound, None)
        if v is not None and v < 0:
            parser.error("%s must be >= 0" % bound)
    if getattr(args, "oracle_limit", 0) < 0:
        parser.error("oracle limit must be >= 0")
    cfg = _config(parser, args)
    return _COMMANDS[cfg.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
