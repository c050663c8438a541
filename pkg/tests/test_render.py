"""Rendering determinism and format tests."""

import json

import pytest

from festcal.analysis import scan_range, verify_gap_set
from festcal.festivals import Festival, FestivalKind
from festcal.hebrew import HebrewDate
from festcal.render import (
    OutputFormat,
    format_hebrew_date,
    format_percent,
    render,
    render_gap_table,
    render_report,
    render_verdict,
)

HANUKKAH = Festival(FestivalKind.HANUKKAH)


def _report(from_year=2001, to_year=2020):
    return scan_range(from_year, to_year, HANUKKAH)


def test_plain_is_bare_years_one_per_line():
    report = scan_range(2003, 2008, HANUKKAH)
    assert report.years == (2003, 2008)
    assert render_report(report, OutputFormat.PLAIN) == "2003\n2008\n"


def test_plain_empty_report_is_empty_string():
    assert render_report(scan_range(2012, 2013, HANUKKAH), OutputFormat.PLAIN) == ""


def test_csv_shape():
    text = render_report(_report(), OutputFormat.CSV)
    lines = text.splitlines()
    assert lines[0] == "year,hebrew_date,festival_day_index"
    assert lines[1] == "2003,5764 Kislev 30,6"
    assert text.endswith("\n") and not text.endswith("\n\n")


def test_json_document():
    report = _report()
    doc = json.loads(render_report(report, OutputFormat.JSON))
    assert doc["festival"]["kind"] == "hanukkah"
    assert doc["predicate"]["offset_days"] == 0
    assert doc["range"] == [2001, 2020]
    assert doc["years"] == list(report.years)
    assert doc["gaps"] == list(report.gaps)
    assert doc["first"] == report.first and doc["last"] == report.last


def test_formats_carry_same_year_multiset():
    report = scan_range(1801, 2200, HANUKKAH)
    plain_years = [int(line) for line in render_report(report, OutputFormat.PLAIN).splitlines()]
    csv_years = [
        int(line.split(",")[0])
        for line in render_report(report, OutputFormat.CSV).splitlines()[1:]
    ]
    json_years = json.loads(render_report(report, OutputFormat.JSON))["years"]
    assert plain_years == csv_years == json_years == list(report.years)


def test_verdict_renderings():
    ok = verify_gap_set([2, 3], {2, 3, 5, 8})
    assert render_verdict(ok, OutputFormat.PLAIN) == "ok\n"
    doc = json.loads(render_verdict(ok, OutputFormat.JSON))
    assert doc == {"allowed_set": [2, 3, 5, 8], "ok": True, "violations": []}

    bad = verify_gap_set([2, 4], {2, 3, 5, 8}, years=[10, 12, 16])
    plain = render_verdict(bad, OutputFormat.PLAIN)
    assert plain == "violation index=1 gap=4 years=12..16\n"
    csv = render_verdict(bad, OutputFormat.CSV).splitlines()
    assert csv == ["index,gap,year_from,year_to", "1,4,12,16"]
    doc = json.loads(render_verdict(bad, OutputFormat.JSON))
    assert doc["ok"] is False
    assert doc["violations"] == [{"index": 1, "gap": 4, "year_pair": [12, 16]}]


def test_gap_table():
    report = scan_range(2010, 2020, HANUKKAH)  # years 2011, 2016, 2019
    verdict = verify_gap_set(report.gaps, {2, 3, 5, 8}, report.years)
    plain = render_gap_table(report, verdict, OutputFormat.PLAIN)
    assert plain == "2011..2016 5 fibonacci\n2016..2019 3 fibonacci\nok\n"
    doc = json.loads(render_gap_table(report, verdict, OutputFormat.JSON))
    assert doc["ok"] is True
    assert doc["gaps"][0] == {
        "index": 0,
        "year_from": 2011,
        "year_to": 2016,
        "gap": 5,
        "is_fibonacci": True,
        "in_allowed_set": True,
    }


def test_render_dispatch():
    report = _report()
    assert render(report, OutputFormat.PLAIN) == render_report(report, OutputFormat.PLAIN)
    verdict = verify_gap_set([2], {2})
    assert render(verdict, "json") == render_verdict(verdict, OutputFormat.JSON)
    with pytest.raises(TypeError):
        render(42, OutputFormat.PLAIN)


def test_render_is_deterministic():
    report = scan_range(1801, 2500, HANUKKAH)
    for fmt in OutputFormat:
        assert render_report(report, fmt) == render_report(report, fmt)


def test_format_hebrew_date():
    assert format_hebrew_date(HebrewDate(5772, 9, 29)) == "5772 Kislev 29"
    assert format_hebrew_date(HebrewDate(5774, 12, 1)) == "5774 Adar I 1"


def test_format_percent():
    assert format_percent(270, 1000) == "27%"
    assert format_percent(266, 1000) == "26.6%"
    assert format_percent(0, 500) == "0%"
    assert format_percent(500, 500) == "100%"
    assert format_percent(1, 3) == f"{100/3:g}%"
    with pytest.raises(ValueError):
        format_percent(1, 0)
