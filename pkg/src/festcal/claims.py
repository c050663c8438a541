"""Reference results the engine reproduces, with a self-check runner.

These are the headline facts this package computes (see the README for
the narrative): how often December 25 falls during Hanukkah in each
millennium-long window, when that stops, the Fibonacci structure of the
gaps between such years, and the far-future era when Christmas starts
landing in Sukkot instead.

Two conventions deserve care:

* The millennium windows below start at the round thousand (2000-2999,
  5000-5999, ...).  Under windows shifted up by one (2001-3000, ...)
  the counts differ by one in several places; both variants are listed
  so either bucketing can be checked.

* The default predicate (offset 0) makes the last Christmas-in-Hanukkah
  year 8473, a day-1 coincidence (first candle on the evening of
  December 24).  No exposed predicate offset yields 8478 as the final
  year: December 25 of 8478 is 19 Kislev, six days before Hanukkah
  begins (December 31), so a one-day shift cannot bridge it.  The
  per-offset endpoints are recorded here so the discrepancy between
  the two circulating endpoint figures stays visible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import is_fibonacci, scan_range, verify_gap_set
from .festivals import Festival, FestivalKind, Predicate, coincides
from .hebrew import month_name
from .render import format_hebrew_date, format_percent

#: Christmas-in-Hanukkah counts per round-thousand window, default predicate.
HANUKKAH_WINDOW_COUNTS = {
    (2000, 2999): 270,
    (3000, 3999): 266,
    (4000, 4999): 266,
    (5000, 5999): 263,
    (6000, 6999): 258,
    (7000, 7999): 134,
    (8000, 8999): 15,
}

#: The same counts under windows shifted to [1000k+1, 1000(k+1)].
HANUKKAH_SHIFTED_WINDOW_COUNTS = {
    (2001, 3000): 269,
    (3001, 4000): 266,
    (4001, 5000): 266,
    (5001, 6000): 264,
    (6001, 7000): 257,
    (7001, 8000): 134,
    (8001, 9000): 15,
}

#: Last Christmas-in-Hanukkah year up to 20000, per predicate offset.
LAST_HANUKKAH_YEAR_BY_OFFSET = {-1: 8093, 0: 8473, 1: 8872}

#: Window in which every Hanukkah gap is in {2,3,5,8} (all Fibonacci).
HANUKKAH_GAP_WINDOW = (1801, 7390)

#: Christmas-in-Sukkot counts per round-thousand window, default predicate.
SUKKOT_WINDOW_COUNTS = {
    (16000, 16999): 68,
    (17000, 17999): 207,
    (18000, 18999): 239,
    (19000, 19999): 235,
}

FIRST_SUKKOT_YEAR = 16103

#: Window in which every Sukkot gap is in {2,3,5,8}.
SUKKOT_GAP_WINDOW = (17064, 20000)

FIBONACCI_GAP_SET = frozenset({2, 3, 5, 8})


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    expected: str
    actual: str


def _check(name: str, expected, actual) -> ClaimResult:
    return ClaimResult(name, expected == actual, str(expected), str(actual))


def run_claim_checks() -> list[ClaimResult]:
    """Recompute every reference result and compare; order is fixed."""
    results: list[ClaimResult] = []
    hanukkah = Festival(FestivalKind.HANUKKAH)
    sukkot = Festival(FestivalKind.SUKKOT)
    default = Predicate(0)

    hit_2011 = coincides(2011, hanukkah, default)
    results.append(
        _check(
            "christmas-2011-hebrew-date",
            "5772 Kislev 29, Hanukkah day 5",
            f"{format_hebrew_date(hit_2011.hebrew_date_of_christmas)}, "
            f"Hanukkah day {hit_2011.festival_day_index}",
        )
    )

    for (lo, hi), want in HANUKKAH_WINDOW_COUNTS.items():
        got = len(scan_range(lo, hi, hanukkah, default).years)
        results.append(_check(f"hanukkah-count-{lo}-{hi}", want, got))

    results.append(
        _check(
            "hanukkah-share-2000-2999",
            "27%",
            format_percent(len(scan_range(2000, 2999, hanukkah, default).years), 1000),
        )
    )

    for offset, want in sorted(LAST_HANUKKAH_YEAR_BY_OFFSET.items()):
        got = scan_range(1801, 20000, hanukkah, Predicate(offset)).last
        results.append(_check(f"hanukkah-last-year-offset{offset:+d}", want, got))

    lo, hi = HANUKKAH_GAP_WINDOW
    report = scan_range(lo, hi, hanukkah, default)
    verdict = verify_gap_set(report.gaps, FIBONACCI_GAP_SET, report.years)
    results.append(_check(f"hanukkah-gaps-{lo}-{hi}-in-2-3-5-8", True, verdict.ok))
    results.append(
        _check(
            f"hanukkah-gaps-{lo}-{hi}-all-fibonacci",
            True,
            all(is_fibonacci(g) for g in report.gaps),
        )
    )

    first_sukkot = coincides(FIRST_SUKKOT_YEAR, sukkot, default)
    results.append(
        _check(
            "sukkot-first-year",
            FIRST_SUKKOT_YEAR,
            scan_range(1801, 20000, sukkot, default).first,
        )
    )
    first_hd = first_sukkot.hebrew_date_of_christmas
    results.append(
        _check(
            "sukkot-first-hebrew-date",
            "Tishrei 20, Sukkot day 6",
            f"{month_name(first_hd.year, first_hd.month)} {first_hd.day}, "
            f"Sukkot day {first_sukkot.festival_day_index}",
        )
    )

    for (lo, hi), want in SUKKOT_WINDOW_COUNTS.items():
        got = len(scan_range(lo, hi, sukkot, default).years)
        results.append(_check(f"sukkot-count-{lo}-{hi}", want, got))

    lo, hi = SUKKOT_GAP_WINDOW
    report = scan_range(lo, hi, sukkot, default)
    verdict = verify_gap_set(report.gaps, FIBONACCI_GAP_SET, report.years)
    results.append(_check(f"sukkot-gaps-{lo}-{hi}-in-2-3-5-8", True, verdict.ok))
    results.append(
        _check(
            f"sukkot-gaps-{lo}-{hi}-all-fibonacci",
            True,
            all(is_fibonacci(g) for g in report.gaps),
        )
    )

    return results


def render_claim_checks(results: list[ClaimResult]) -> str:
    """One PASS/FAIL line per check plus a summary line."""
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = r.actual if r.passed else f"expected {r.expected}, got {r.actual}"
        lines.append(f"{status} {r.name}: {detail}")
    failed = sum(1 for r in results if not r.passed)
    if failed:
        lines.append(f"{failed} of {len(results)} checks failed")
    else:
        lines.append(f"all {len(results)} checks passed")
    return "\n".join(lines) + "\n"
