"""Acceptance suite: every headline result at its exact tolerance.

Each test prints one PASS line (past pytest's capture, so it shows in
any mode) once its assertions hold.  Windowing note: the documented
millennium counts correspond to windows that start at the round
thousand (2000-2999, ..., 19000-19999).  Under windows shifted up by
one (2001-3000, ...) several counts differ by one; criterion 2 asserts
both variants so the discrepancy stays pinned.
"""

from datetime import date

import pytest

from festcal.analysis import is_fibonacci, scan_range, verify_gap_set
from festcal.claims import (
    HANUKKAH_SHIFTED_WINDOW_COUNTS,
    HANUKKAH_WINDOW_COUNTS,
    LAST_HANUKKAH_YEAR_BY_OFFSET,
    SUKKOT_WINDOW_COUNTS,
    run_claim_checks,
)
from festcal.cli import run
from festcal.daycount import LUNATION_PARTS, Weekday, weekday
from festcal.festivals import (
    CoincidenceResult,
    Festival,
    FestivalKind,
    Predicate,
    christmas,
    coincides,
    festival_span,
)
from festcal.gregorian import fixed_to_gregorian, gregorian_to_fixed
from festcal.hebrew import (
    KISLEV,
    TISHREI,
    HebrewDate,
    fixed_to_hebrew,
    hebrew_new_year,
    hebrew_to_fixed,
    hebrew_year_length,
    is_hebrew_leap,
    molad_tishrei,
    months_in_year,
)
from festcal.render import format_percent, render_report

HANUKKAH = Festival(FestivalKind.HANUKKAH)
SUKKOT = Festival(FestivalKind.SUKKOT)
DEFAULT = Predicate(0)


@pytest.fixture
def announce(capfd):
    def _announce(line: str) -> None:
        with capfd.disabled():
            print(line, flush=True)

    return _announce


def test_criterion_1_anchor_date(announce):
    hit = coincides(2011, HANUKKAH, DEFAULT)
    assert hit.coincides
    assert hit.hebrew_date_of_christmas == HebrewDate(5772, KISLEV, 29)
    assert hit.festival_day_index == 5
    code, text = run(["convert", "--gregorian", "2011-12-25"])
    assert code == 0
    assert text == "5772 Kislev 29 (Sunday); Hanukkah day 5\n"
    announce("PASS criterion 1: 2011-12-25 = 29 Kislev 5772, Hanukkah day 5 (exact)")


def test_criterion_2_hanukkah_millennium_counts(announce):
    # All seven counts, simultaneously, under the single default predicate.
    for (lo, hi), expected in HANUKKAH_WINDOW_COUNTS.items():
        got = len(scan_range(lo, hi, HANUKKAH, DEFAULT).years)
        assert got == expected, f"{lo}-{hi}: expected {expected}, got {got}"
    # No other exposed offset reproduces all seven.
    for offset in (-1, 1):
        counts = [
            len(scan_range(lo, hi, HANUKKAH, Predicate(offset)).years)
            for (lo, hi) in HANUKKAH_WINDOW_COUNTS
        ]
        assert counts != list(HANUKKAH_WINDOW_COUNTS.values()), offset
    # Windows shifted to [1000k+1, 1000(k+1)] give the documented alternates.
    for (lo, hi), expected in HANUKKAH_SHIFTED_WINDOW_COUNTS.items():
        got = len(scan_range(lo, hi, HANUKKAH, DEFAULT).years)
        assert got == expected, f"{lo}-{hi}: expected {expected}, got {got}"
    announce(
        "PASS criterion 2: Hanukkah counts 270/266/266/263/258/134/15 under the "
        "default predicate (round-thousand windows; shifted windows give "
        "269/266/266/264/257/134/15 as documented)"
    )


def test_criterion_3_last_hanukkah_coincidence(announce):
    report = scan_range(1801, 20000, HANUKKAH, DEFAULT)
    assert report.last in (8473, 8478)
    assert report.last == 8473
    # The final coincidence is a day-1 hit: first candle on the evening
    # of December 24.
    final = coincides(8473, HANUKKAH, DEFAULT)
    assert final.festival_day_index == 1
    # Endpoint per exposed variant; 8478 is reproduced by none of them
    # (December 25 of 8478 is 19 Kislev, six days before Hanukkah).
    endpoints = {}
    for offset in (-1, 0, 1):
        endpoints[offset] = scan_range(1801, 20000, HANUKKAH, Predicate(offset)).last
    assert endpoints == LAST_HANUKKAH_YEAR_BY_OFFSET
    assert 8478 not in endpoints.values()
    assert fixed_to_hebrew(christmas(8478)) == HebrewDate(12239, KISLEV, 19)
    announce(
        "PASS criterion 3: last coincidence 8473 (day 1), in {8473, 8478}; "
        f"per-offset endpoints {endpoints}; 8478 unattained by any exposed "
        "variant (documented discrepancy)"
    )


def test_criterion_4_gap_set_theorem(announce):
    report = scan_range(1801, 7390, HANUKKAH, DEFAULT)
    verdict = verify_gap_set(report.gaps, {2, 3, 5, 8}, report.years)
    assert verdict.ok
    assert verdict.violations == ()
    assert all(is_fibonacci(gap) for gap in report.gaps)
    # 7390 is itself an occurrence year, so the two readings of the
    # window edge (last occurrence vs bare bound) coincide.
    assert report.last == 7390
    announce(
        f"PASS criterion 4: all {len(report.gaps)} Hanukkah gaps in [1801, 7390] "
        "lie in {2,3,5,8} and are Fibonacci (7390 itself an occurrence year)"
    )


def test_criterion_5_sukkot_claims(announce):
    full = scan_range(1801, 20000, SUKKOT, DEFAULT)
    assert full.first == 16103
    first = coincides(16103, SUKKOT, DEFAULT)
    assert first.coincides
    hd = first.hebrew_date_of_christmas
    assert (hd.month, hd.day) == (TISHREI, 20)
    assert first.festival_day_index == 6
    for (lo, hi), expected in SUKKOT_WINDOW_COUNTS.items():
        got = len(scan_range(lo, hi, SUKKOT, DEFAULT).years)
        assert got == expected, f"{lo}-{hi}: expected {expected}, got {got}"
    window = scan_range(17064, 20000, SUKKOT, DEFAULT)
    assert window.first == 17064  # the phenomenon starts at an occurrence year
    verdict = verify_gap_set(window.gaps, {2, 3, 5, 8}, window.years)
    assert verdict.ok
    assert all(is_fibonacci(gap) for gap in window.gaps)
    announce(
        "PASS criterion 5: first Sukkot coincidence 16103 (20 Tishrei, day 6); "
        "counts 68/207/239/235; gaps in [17064, 20000] all in {2,3,5,8}"
    )


def test_criterion_6_percentage(announce):
    assert format_percent(270, 1000) == "27%"
    count = len(scan_range(2000, 2999, HANUKKAH, DEFAULT).years)
    assert format_percent(count, 1000) == "27%"
    announce("PASS criterion 6: 270 of 1000 years reported as 27%")


def test_criterion_7a_gregorian_round_trip_full_range(announce):
    for day in range(1, 9_000_001):
        if gregorian_to_fixed(fixed_to_gregorian(day)) != day:
            raise AssertionError(f"gregorian round trip failed at day {day}")
    announce("PASS criterion 7a: Gregorian round trip exact on [1, 9000000]")


def test_criterion_7b_hebrew_round_trip_full_range(announce):
    for day in range(-1_373_427, 9_000_001):
        if hebrew_to_fixed(fixed_to_hebrew(day)) != day:
            raise AssertionError(f"hebrew round trip failed at day {day}")
    announce("PASS criterion 7b: Hebrew round trip exact on [-1373427, 9000000]")


def test_criterion_7c_year_lengths(announce):
    for year in range(1, 23763):
        t = hebrew_year_length(year)
        assert t.length in (353, 354, 355, 383, 384, 385), year
        assert t.leap is is_hebrew_leap(year)
    announce("PASS criterion 7c: year lengths in {353,354,355,383,384,385} for 1..23762")


def test_criterion_7d_new_year_weekday(announce):
    banned = {Weekday.SUNDAY, Weekday.WEDNESDAY, Weekday.FRIDAY}
    for year in range(1, 23763):
        assert weekday(hebrew_new_year(year)) not in banned, year
    announce("PASS criterion 7d: Rosh Hashanah never on Sunday/Wednesday/Friday")


def test_criterion_7e_molad_linearity(announce):
    for year in range(1, 23763):
        delta = molad_tishrei(year + 1).parts - molad_tishrei(year).parts
        assert delta == LUNATION_PARTS * months_in_year(year), year
    announce("PASS criterion 7e: molad linearity for 1..23762")


def test_criterion_7f_epoch_and_5772_anchors(announce):
    assert hebrew_new_year(1) == -1373427
    hand_count = 365 * 2010 + 2010 // 4 - 2010 // 100 + 2010 // 400 + 272
    assert hand_count == 734409
    assert hebrew_new_year(5772) == hand_count
    assert date(2011, 9, 29).toordinal() == hand_count
    announce("PASS criterion 7f: epoch day -1373427 derived; 1 Tishrei 5772 = 2011-09-29")


def _brute_force(gregorian_year, festival, predicate) -> CoincidenceResult:
    target = christmas(gregorian_year) + predicate.offset_days
    hebrew = fixed_to_hebrew(target)
    span = festival_span(festival, hebrew.year)
    for index, day in enumerate(range(span.first, span.last + 1), start=1):
        if day == target:
            return CoincidenceResult(True, hebrew, index)
    return CoincidenceResult(False, hebrew)


def test_criterion_7g_coincidence_brute_force_equivalence(announce):
    for kind in FestivalKind:
        festival = Festival(kind)
        for year in range(1801, 2201):
            for offset in (-1, 0, 1):
                predicate = Predicate(offset)
                assert coincides(year, festival, predicate) == _brute_force(
                    year, festival, predicate
                ), (kind, year, offset)
    announce("PASS criterion 7g: predicate equals brute force over 1801-2200, all festivals")


def test_criterion_8_determinism(announce):
    reports = [
        scan_range(1801, 20000, HANUKKAH, DEFAULT, workers=workers)
        for workers in (1, 2, 4)
    ]
    assert reports[0] == reports[1] == reports[2]
    rendered = {render_report(r, "plain") for r in reports}
    rendered.add(render_report(scan_range(1801, 20000, HANUKKAH, DEFAULT), "plain"))
    assert len(rendered) == 1
    announce("PASS criterion 8: scan output byte-identical across runs and worker counts")


def test_all_claim_checks_green(announce):
    results = run_claim_checks()
    failed = [r for r in results if not r.passed]
    assert not failed, failed
    announce(f"PASS claims: all {len(results)} documented reference checks hold")
