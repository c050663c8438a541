"""Command-line interface.

A thin layer over the library: every subcommand parses arguments, calls
the core functions, renders text, and returns.  Exit codes: 0 success,
1 verification failure (a gap outside the allowed set, or a failed
self-check), 2 usage error.  All regular output goes to stdout, errors
to stderr; ``--out FILE`` redirects the rendered text verbatim into a
file.  There is no configuration through environment variables and no
network access.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .analysis import (
    OccurrenceReport,
    count_by_millennium,
    gap_sequence,
    scan_range,
    verify_gap_set,
)
from .claims import render_claim_checks, run_claim_checks
from .daycount import weekday
from .festivals import Festival, FestivalKind, Predicate, coincides, festival_span
from .gregorian import fixed_to_gregorian, gregorian_to_fixed, parse_gregorian
from .hebrew import fixed_to_hebrew, hebrew_to_fixed, month_name, parse_hebrew
from .render import (
    OutputFormat,
    format_hebrew_date,
    format_percent,
    render_gap_table,
    render_report,
)

_ALL_KINDS = tuple(FestivalKind)


def _festival_from_args(args: argparse.Namespace) -> Festival:
    return Festival(
        FestivalKind(args.festival),
        include_shemini_atzeret=getattr(args, "shemini_atzeret", False),
        diaspora=getattr(args, "diaspora", False),
    )


def _festival_hits(day: int) -> list[tuple[Festival, int]]:
    """All default-option festivals containing the given fixed day."""
    hebrew_year = fixed_to_hebrew(day).year
    hits = []
    for kind in _ALL_KINDS:
        festival = Festival(kind)
        span = festival_span(festival, hebrew_year)
        if day in span:
            hits.append((festival, day - span.first + 1))
    return hits


def _cmd_convert(args: argparse.Namespace) -> tuple[int, str]:
    if (args.gregorian is None) == (args.hebrew is None):
        raise _UsageError("convert needs exactly one of --gregorian or --hebrew")
    if args.gregorian is not None:
        gdate = parse_gregorian(args.gregorian)
        day = gregorian_to_fixed(gdate)
        hdate = fixed_to_hebrew(day)
        primary = f"{format_hebrew_date(hdate)} ({weekday(day)})"
    else:
        hdate = parse_hebrew(args.hebrew)
        day = hebrew_to_fixed(hdate)
        gdate = fixed_to_gregorian(day)
        primary = f"{gdate} ({weekday(day)})"
    hits = _festival_hits(day)

    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.PLAIN:
        suffix = "".join(f"; {festival.kind} day {index}" for festival, index in hits)
        return 0, primary + suffix + "\n"
    if fmt is OutputFormat.CSV:
        header = "gregorian,fixed_day,weekday,hebrew_year,hebrew_month,hebrew_day,festival,festival_day_index"
        festival_cell = str(hits[0][0].kind) if hits else ""
        index_cell = str(hits[0][1]) if hits else ""
        row = (
            f"{gdate},{day},{weekday(day)},{hdate.year},"
            f"{month_name(hdate.year, hdate.month)},{hdate.day},{festival_cell},{index_cell}"
        )
        return 0, header + "\n" + row + "\n"
    payload = {
        "fixed_day": day,
        "weekday": str(weekday(day)),
        "gregorian": {"year": gdate.year, "month": gdate.month, "day": gdate.day, "iso": str(gdate)},
        "hebrew": {
            "year": hdate.year,
            "month": hdate.month,
            "month_name": month_name(hdate.year, hdate.month),
            "day": hdate.day,
        },
        "festivals": [
            {"kind": festival.kind.value, "day_index": index} for festival, index in hits
        ],
    }
    return 0, json.dumps(payload, indent=2) + "\n"


def _cmd_festival(args: argparse.Namespace) -> tuple[int, str]:
    festival = _festival_from_args(args)
    span = festival_span(festival, args.hebrew_year)
    first, last = fixed_to_gregorian(span.first), fixed_to_gregorian(span.last)

    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.PLAIN:
        return 0, (
            f"{festival.kind} {span.hebrew_year}: {first}..{last} ({span.length} days)\n"
        )
    if fmt is OutputFormat.CSV:
        header = "festival,hebrew_year,first_gregorian,last_gregorian,first_day,last_day,length"
        row = f"{festival.kind},{span.hebrew_year},{first},{last},{span.first},{span.last},{span.length}"
        return 0, header + "\n" + row + "\n"
    payload = {
        "festival": festival.kind.value,
        "hebrew_year": span.hebrew_year,
        "first_gregorian": str(first),
        "last_gregorian": str(last),
        "first_day": span.first,
        "last_day": span.last,
        "length": span.length,
    }
    return 0, json.dumps(payload, indent=2) + "\n"


def _scan_report(args: argparse.Namespace):
    return scan_range(
        args.from_year,
        args.to_year,
        _festival_from_args(args),
        Predicate(args.predicate_offset),
        workers=args.workers,
    )


def _cmd_scan(args: argparse.Namespace) -> tuple[int, str]:
    return 0, render_report(_scan_report(args), OutputFormat(args.format))


def _cmd_gaps(args: argparse.Namespace) -> tuple[int, str]:
    allowed = _parse_allowed_set(args.allowed_set)
    if args.years is not None:
        try:
            years = [int(piece) for piece in args.years.split(",") if piece.strip()]
        except ValueError:
            raise _UsageError(f"--years must be a comma list of integers, got {args.years!r}")
        # Container for rendering only; the festival is not consulted.
        report = OccurrenceReport(
            Festival(FestivalKind(args.festival)) if args.festival else Festival(FestivalKind.HANUKKAH),
            Predicate(args.predicate_offset),
            years[0] if years else 1,
            years[-1] if years else 1,
            tuple(years),
        )
    else:
        if args.from_year is None or args.to_year is None or args.festival is None:
            raise _UsageError("gaps needs --from, --to and --festival (or an explicit --years list)")
        report = _scan_report(args)
    gaps = gap_sequence(report.years)
    verdict = verify_gap_set(gaps, allowed, report.years)
    text = render_gap_table(report, verdict, OutputFormat(args.format))
    return (0 if verdict.ok else 1), text


def _cmd_count(args: argparse.Namespace) -> tuple[int, str]:
    report = _scan_report(args)
    buckets = count_by_millennium(report)
    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.PLAIN:
        lines = [
            f"{b.start}-{b.end} {b.count} {format_percent(b.count, b.covered)}"
            for b in buckets
        ]
        return 0, "\n".join(lines) + "\n"
    if fmt is OutputFormat.CSV:
        lines = ["millennium_start,millennium_end,count,covered_years,percent"]
        for b in buckets:
            lines.append(
                f"{b.start},{b.end},{b.count},{b.covered},{format_percent(b.count, b.covered)}"
            )
        return 0, "\n".join(lines) + "\n"
    payload = {
        "range": [report.from_year, report.to_year],
        "total": len(report.years),
        "buckets": [
            {
                "start": b.start,
                "end": b.end,
                "count": b.count,
                "covered_years": b.covered,
                "percent": format_percent(b.count, b.covered),
            }
            for b in buckets
        ],
    }
    return 0, json.dumps(payload, indent=2) + "\n"


def _cmd_verify(args: argparse.Namespace) -> tuple[int, str]:
    results = run_claim_checks()
    return (0 if all(r.passed for r in results) else 1), render_claim_checks(results)


def _parse_allowed_set(text: str) -> frozenset[int]:
    try:
        values = frozenset(int(piece) for piece in text.split(",") if piece.strip())
    except ValueError:
        raise _UsageError(f"--allowed-set must be a comma list of integers, got {text!r}")
    if not values:
        raise _UsageError("--allowed-set must not be empty")
    return values


class _UsageError(Exception):
    pass


def _add_format_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default="plain",
        help="output format (default: plain)",
    )
    parser.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")


def _add_scan_flags(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--from", dest="from_year", type=int, required=required,
                        metavar="YEAR", help="first Gregorian year of the range")
    parser.add_argument("--to", dest="to_year", type=int, required=required,
                        metavar="YEAR", help="last Gregorian year of the range")
    _add_festival_flags(parser, required=required)
    parser.add_argument("--predicate-offset", type=int, choices=(-1, 0, 1), default=0,
                        help="test Christmas day + offset (default 0)")
    parser.add_argument("--workers", type=int, default=1,
                        help="worker threads for the scan (results are identical)")


def _add_festival_flags(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--festival", required=required,
                        choices=[k.value for k in FestivalKind])
    parser.add_argument("--shemini-atzeret", action="store_true",
                        help="extend Sukkot to 8 days")
    parser.add_argument("--diaspora", action="store_true",
                        help="extra day of Pesach/Shavuot")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="festcal",
        description="Hebrew/Gregorian calendar conversions and festival-coincidence analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert a date between the two calendars")
    p.add_argument("--gregorian", metavar="YYYY-MM-DD")
    p.add_argument("--hebrew", metavar="'YEAR MONTH DAY'")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_convert)

    p = sub.add_parser("festival", help="Gregorian span of a festival in a Hebrew year")
    _add_festival_flags(p)
    p.add_argument("--hebrew-year", type=int, required=True)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_festival)

    p = sub.add_parser("scan", help="years in a range whose Christmas falls in the festival")
    _add_scan_flags(p)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_scan)

    p = sub.add_parser("gaps", help="gap sequence between coincidence years, with verdict")
    _add_scan_flags(p, required=False)
    p.add_argument("--years", metavar="Y1,Y2,...",
                   help="check an explicit year list instead of scanning")
    p.add_argument("--allowed-set", default="2,3,5,8", metavar="N,N,...",
                   help="allowed gap values (default 2,3,5,8)")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_gaps)

    p = sub.add_parser("count", help="scan bucketed by millennium")
    _add_scan_flags(p)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("verify", help="recompute the documented reference results")
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Parse and execute; returns (exit_code, stdout_text).

    Usage problems exit 2 with a message on stderr; gap-verdict and
    self-check failures exit 1 with normal output.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        code, text = args.handler(args)
    except (_UsageError, ValueError) as exc:
        print(f"festcal: error: {exc}", file=sys.stderr)
        return 2, ""
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        return code, ""
    return code, text


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
