"""Deterministic text rendering for reports and verdicts.

Output is byte-identical for identical inputs: no timestamps, no locale
lookups, one trailing newline per document (none for an empty plain
list).  Plain format is bare values, one per line; csv is a header row
plus comma-separated rows; json is a single document.
"""

from __future__ import annotations

import json
from enum import Enum

from .analysis import GapVerdict, OccurrenceReport, is_fibonacci
from .festivals import coincides
from .hebrew import HebrewDate, month_name


class OutputFormat(str, Enum):
    PLAIN = "plain"
    CSV = "csv"
    JSON = "json"


def format_hebrew_date(date: HebrewDate) -> str:
    """Render with the month name, e.g. ``5772 Kislev 29``."""
    return f"{date.year} {month_name(date.year, date.month)} {date.day}"


def format_percent(count: int, years: int) -> str:
    """Exact percentage of years that hit, e.g. 270 of 1000 -> ``27%``."""
    if years <= 0:
        raise ValueError(f"years must be positive, got {years}")
    whole, remainder = divmod(100 * count, years)
    if remainder == 0:
        return f"{whole}%"
    return f"{100 * count / years:g}%"


def render_report(report: OccurrenceReport, fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.PLAIN:
        return "".join(f"{year}\n" for year in report.years)
    if fmt is OutputFormat.CSV:
        lines = ["year,hebrew_date,festival_day_index"]
        for year in report.years:
            hit = coincides(year, report.festival, report.predicate)
            lines.append(
                f"{year},{format_hebrew_date(hit.hebrew_date_of_christmas)},{hit.festival_day_index}"
            )
        return "\n".join(lines) + "\n"
    payload = {
        "festival": {
            "kind": report.festival.kind.value,
            "include_shemini_atzeret": report.festival.include_shemini_atzeret,
            "diaspora": report.festival.diaspora,
        },
        "predicate": {"offset_days": report.predicate.offset_days},
        "range": [report.from_year, report.to_year],
        "years": list(report.years),
        "gaps": list(report.gaps),
        "first": report.first,
        "last": report.last,
    }
    return json.dumps(payload, indent=2) + "\n"


def render_verdict(verdict: GapVerdict, fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.PLAIN:
        if verdict.ok:
            return "ok\n"
        lines = [
            f"violation index={v.index} gap={v.gap}"
            + (f" years={v.year_pair[0]}..{v.year_pair[1]}" if v.year_pair else "")
            for v in verdict.violations
        ]
        return "\n".join(lines) + "\n"
    if fmt is OutputFormat.CSV:
        lines = ["index,gap,year_from,year_to"]
        for v in verdict.violations:
            year_from = v.year_pair[0] if v.year_pair else ""
            year_to = v.year_pair[1] if v.year_pair else ""
            lines.append(f"{v.index},{v.gap},{year_from},{year_to}")
        return "\n".join(lines) + "\n"
    payload = {
        "allowed_set": sorted(verdict.allowed_set),
        "ok": verdict.ok,
        "violations": [
            {
                "index": v.index,
                "gap": v.gap,
                "year_pair": list(v.year_pair) if v.year_pair else None,
            }
            for v in verdict.violations
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def render_gap_table(report: OccurrenceReport, verdict: GapVerdict, fmt: OutputFormat) -> str:
    """Gap sequence with Fibonacci and allowed-set flags, plus the verdict.

    Used by the ``gaps`` subcommand, which pairs each gap with its year
    pair and flags; the bare verdict renderings above stay available
    for verdict-only output.
    """
    fmt = OutputFormat(fmt)
    years, gaps = report.years, report.gaps
    rows = [
        (i, years[i], years[i + 1], gap, is_fibonacci(gap), gap in verdict.allowed_set)
        for i, gap in enumerate(gaps)
    ]
    if fmt is OutputFormat.PLAIN:
        lines = [
            f"{a}..{b} {gap} {'fibonacci' if fib else 'not-fibonacci'}"
            + ("" if allowed else " OUTSIDE-ALLOWED-SET")
            for _i, a, b, gap, fib, allowed in rows
        ]
        lines.append("ok" if verdict.ok else f"violations: {len(verdict.violations)}")
        return "\n".join(lines) + "\n"
    if fmt is OutputFormat.CSV:
        lines = ["index,year_from,year_to,gap,is_fibonacci,in_allowed_set"]
        for i, a, b, gap, fib, allowed in rows:
            lines.append(f"{i},{a},{b},{gap},{str(fib).lower()},{str(allowed).lower()}")
        return "\n".join(lines) + "\n"
    payload = {
        "allowed_set": sorted(verdict.allowed_set),
        "ok": verdict.ok,
        "gaps": [
            {
                "index": i,
                "year_from": a,
                "year_to": b,
                "gap": gap,
                "is_fibonacci": fib,
                "in_allowed_set": allowed,
            }
            for i, a, b, gap, fib, allowed in rows
        ],
        "violations": [
            {
                "index": v.index,
                "gap": v.gap,
                "year_pair": list(v.year_pair) if v.year_pair else None,
            }
            for v in verdict.violations
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def render(obj, fmt: OutputFormat) -> str:
    """Render an OccurrenceReport or GapVerdict in the requested format."""
    if isinstance(obj, OccurrenceReport):
        return render_report(obj, fmt)
    if isinstance(obj, GapVerdict):
        return render_verdict(obj, fmt)
    raise TypeError(f"cannot render {type(obj).__name__}")
