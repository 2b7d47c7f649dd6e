"""Command-line front end.

Commands: lucas-test, pell-test, enumerate, bridge, reproduce.  Output
formats: a human table (default), line-delimited JSON records
(``--format jsonl``, one record per line, schema version 1) and CSV.

Exit codes: 0 = command executed (whatever the mathematical verdict),
2 = usage/validation error, 3 = fixture mismatch in ``reproduce``.
"""

import argparse
import csv
import io
import json
import sys

from . import __version__
from .bridge import from_pell, roundtrip
from .conic import ConicPoint, PellParams, pell_test, strong_pell_test
from .errors import DegenerateDError, NotOnConicError, ZeroPError
from .fixtures import reproduce
from .lucas import LucasParams, lucas_test, strong_lucas_test
from .modring import Modulus
from .search import SearchSpec, enumerate_range

SCHEMA_VERSION = 1


def _record(command, **payload):
    rec = {"schema": SCHEMA_VERSION, "command": command}
    rec.update(payload)
    return rec


def _print_jsonl(records):
    for rec in records:
        print(json.dumps(rec, separators=(", ", ": ")))


def _flatten(value):
    if isinstance(value, dict):
        return ";".join(f"{k}={v}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return ";".join(str(v) for v in value)
    return value


def _print_csv(records):
    if not records:
        return
    columns = []
    for rec in records:
        for key in rec:
            if key not in columns:
                columns.append(key)
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=columns)
    writer.writeheader()
    for rec in records:
        writer.writerow({k: _flatten(v) for k, v in rec.items()})
    print(out.getvalue(), end="")


def _emit(records, fmt, table_lines):
    if fmt == "jsonl":
        _print_jsonl(records)
    elif fmt == "csv":
        _print_csv(records)
    else:
        for line in table_lines:
            print(line)


def _witness_text(witnesses):
    return " ".join(f"{k}={v}" for k, v in witnesses.items())


def _parse_modulus(parser, n):
    try:
        return Modulus(n)
    except ValueError as err:
        parser.error(str(err))


def _pell_params(parser, args):
    explicit = args.x is not None or args.y is not None
    if explicit and args.a is not None:
        parser.error("give either --x/--y or --a, not both")
    if explicit and (args.x is None or args.y is None):
        parser.error("--x and --y must be given together")
    if not explicit and args.a is None:
        parser.error("a point (--x --y) or a seed (--a) is required")
    try:
        if explicit:
            return PellParams.from_point(args.d, args.x, args.y)
        return PellParams.from_seed(args.d, args.a)
    except ValueError as err:
        parser.error(str(err))


def cmd_lucas_test(parser, args):
    n = _parse_modulus(parser, args.n)
    try:
        params = LucasParams(args.p, args.q)
    except ValueError as err:
        parser.error(str(err))
    test = strong_lucas_test if args.strong else lucas_test
    verdict = test(n, params)
    rec = _record(
        "lucas-test",
        n=args.n,
        p=args.p,
        q=args.q,
        strong=args.strong,
        **verdict.to_dict(),
    )
    line = (
        f"n={args.n} P={args.p} Q={args.q}"
        f"{' strong' if args.strong else ''} -> {verdict.status.value}"
        f" ({verdict.reason}) {_witness_text(verdict.witnesses)}"
    )
    _emit([rec], args.format, [line.rstrip()])
    return 0


def cmd_pell_test(parser, args):
    n = _parse_modulus(parser, args.n)
    params = _pell_params(parser, args)
    test = strong_pell_test if args.strong else pell_test
    verdict = test(n, params)
    source = {"x": args.x, "y": args.y} if args.a is None else {"a": args.a}
    rec = _record(
        "pell-test",
        n=args.n,
        d=args.d,
        **source,
        strong=args.strong,
        **verdict.to_dict(),
    )
    src = f"x={args.x} y={args.y}" if args.a is None else f"a={args.a}"
    line = (
        f"n={args.n} D={args.d} {src}"
        f"{' strong' if args.strong else ''} -> {verdict.status.value}"
        f" ({verdict.reason}) {_witness_text(verdict.witnesses)}"
    )
    _emit([rec], args.format, [line.rstrip()])
    return 0


def cmd_enumerate(parser, args):
    if args.kind == "lucas":
        if args.p is None:
            parser.error("lucas enumeration needs --p (and optionally --q)")
        try:
            params = LucasParams(args.p, args.q)
        except ValueError as err:
            parser.error(str(err))
        shown = {"p": args.p, "q": args.q}
    else:
        if args.d is None:
            parser.error("pell enumeration needs --d plus --x/--y or --a")
        params = _pell_params(parser, args)
        shown = {"d": args.d}
        shown.update({"x": args.x, "y": args.y} if args.a is None else {"a": args.a})
    try:
        spec = SearchSpec(args.kind, params, args.lo, args.to, args.strong)
    except ValueError as err:
        parser.error(str(err))
    report = enumerate_range(spec, workers=args.workers)
    rec = _record(
        "enumerate",
        kind=args.kind,
        **shown,
        strong=args.strong,
        **{"from": args.lo, "to": args.to},
        pseudoprimes=list(report.pseudoprimes),
        skipped=[
            {"n": s.n, "reason": s.reason, "factor": s.factor} for s in report.skipped
        ],
        counts=report.counts,
    )
    lines = [
        f"{args.kind} pseudoprimes in [{args.lo}, {args.to}] "
        + " ".join(f"{k}={v}" for k, v in shown.items())
        + (" strong" if args.strong else ""),
        "  " + (", ".join(map(str, report.pseudoprimes)) or "(none)"),
        "counts: " + " ".join(f"{k}={v}" for k, v in report.counts.items()),
    ]
    reasons = {}
    for skip in report.skipped:
        reasons[skip.reason] = reasons.get(skip.reason, 0) + 1
    if reasons:
        lines.append(
            "skipped: " + " ".join(f"{k}={v}" for k, v in sorted(reasons.items()))
        )
    if args.format == "csv":
        rows = [
            _record("enumerate", kind=args.kind, **shown, n=n)
            for n in report.pseudoprimes
        ]
        _print_csv(rows)
        return 0
    _emit([rec], args.format, lines)
    return 0


def cmd_bridge(parser, args):
    n = _parse_modulus(parser, args.n)
    try:
        if args.from_lucas:
            if args.p is None:
                parser.error("--from-lucas needs --p")
            report = roundtrip(n, args.p, strong=args.strong)
        else:
            if args.d is None or args.x is None or args.y is None:
                parser.error("--from-pell needs --d, --x and --y")
            point = ConicPoint(args.x, args.y, args.d, n)
            report = from_pell(n, point, strong=args.strong)
    except (DegenerateDError, ZeroPError, NotOnConicError, ValueError) as err:
        parser.error(str(err))
    pp = report.pell_params
    rec = _record(
        "bridge",
        direction=report.direction,
        n=report.n,
        p=report.lucas_params.p,
        q=report.lucas_params.q,
        d=pp.d,
        x=pp.x,
        y=pp.y,
        lucas_status=report.lucas_verdict.status.value,
        lucas_reason=report.lucas_verdict.reason,
        pell_status=report.pell_verdict.status.value,
        pell_reason=report.pell_verdict.reason,
        recovered_p=report.recovered_p,
        agreement=report.agreement,
    )
    lines = [
        f"{report.direction} n={report.n}",
        f"  lucas P={report.lucas_params.p} Q={report.lucas_params.q}"
        f" -> {report.lucas_verdict.status.value} ({report.lucas_verdict.reason})",
        f"  pell D={pp.d} x={pp.x} y={pp.y}"
        f" -> {report.pell_verdict.status.value} ({report.pell_verdict.reason})",
        f"  recovered P={report.recovered_p} agreement={report.agreement}",
    ]
    _emit([rec], args.format, lines)
    return 0


def cmd_reproduce(parser, args):
    results = reproduce(only=args.only, workers=args.workers)
    if not results:
        parser.error(f"no fixtures match --only {args.only}")
    records = []
    lines = []
    for res in results:
        records.append(
            _record(
                "reproduce",
                fixture=res.fixture.label,
                kind=res.fixture.kind,
                passed=res.passed,
                expected=list(res.fixture.expected),
                actual=list(res.actual),
                note=res.note,
            )
        )
        status = "PASS" if res.passed else "FAIL"
        line = f"{status} {res.fixture.label} ({len(res.actual)} values)"
        if res.note:
            line += f" -- {res.note}"
        lines.append(line)
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} fixtures passed")
    _emit(records, args.format, lines)
    return 3 if failed else 0


def _add_format(sub):
    sub.add_argument(
        "--format",
        choices=("table", "jsonl", "csv"),
        default="table",
        help="output format (default: table)",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pellucas",
        description="Lucas and Pell-conic pseudoprimality toolkit",
    )
    parser.add_argument("--version", action="version", version=f"pellucas {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    lucas = commands.add_parser("lucas-test", help="Lucas test for one odd n")
    lucas.add_argument("n", type=int)
    lucas.add_argument("--p", type=int, required=True, help="sequence parameter P > 0")
    lucas.add_argument("--q", type=int, default=1, help="sequence parameter Q (default 1)")
    lucas.add_argument("--strong", action="store_true", help="also require U_{k+1} = 1")
    _add_format(lucas)
    lucas.set_defaults(func=cmd_lucas_test)

    pell = commands.add_parser("pell-test", help="Pell conic test for one odd n")
    pell.add_argument("n", type=int)
    pell.add_argument("--d", type=int, required=True, help="conic parameter D != 0")
    pell.add_argument("--x", type=int, help="explicit point x-coordinate")
    pell.add_argument("--y", type=int, help="explicit point y-coordinate")
    pell.add_argument("--a", type=int, help="parametrization seed")
    pell.add_argument("--strong", action="store_true", help="require the full identity point")
    _add_format(pell)
    pell.set_defaults(func=cmd_pell_test)

    enum = commands.add_parser("enumerate", help="search a range for pseudoprimes")
    enum.add_argument("kind", choices=("lucas", "pell"))
    enum.add_argument("--p", type=int)
    enum.add_argument("--q", type=int, default=1)
    enum.add_argument("--d", type=int)
    enum.add_argument("--x", type=int)
    enum.add_argument("--y", type=int)
    enum.add_argument("--a", type=int)
    enum.add_argument("--from", dest="lo", type=int, default=3, help="range start (default 3)")
    enum.add_argument("--to", type=int, required=True, help="range end, inclusive")
    enum.add_argument("--strong", action="store_true")
    enum.add_argument("--workers", type=int, default=None, help="parallel workers (default: cores)")
    _add_format(enum)
    enum.set_defaults(func=cmd_enumerate)

    bridge = commands.add_parser("bridge", help="translate parameters across the correspondence")
    bridge.add_argument("n", type=int)
    direction = bridge.add_mutually_exclusive_group(required=True)
    direction.add_argument("--from-lucas", action="store_true")
    direction.add_argument("--from-pell", action="store_true")
    bridge.add_argument("--p", type=int)
    bridge.add_argument("--d", type=int)
    bridge.add_argument("--x", type=int)
    bridge.add_argument("--y", type=int)
    bridge.add_argument("--strong", action="store_true")
    _add_format(bridge)
    bridge.set_defaults(func=cmd_bridge)

    repro = commands.add_parser("reproduce", help="check the bundled golden fixtures")
    repro.add_argument(
        "--only",
        choices=("lucas", "pell", "pell-membership", "lucas-value", "pell-value"),
        help="restrict to one fixture kind",
    )
    repro.add_argument("--workers", type=int, default=None)
    _add_format(repro)
    repro.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(parser, args)
    except SystemExit as exc:
        code = exc.code
        return 0 if code is None else int(code)


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
