"""FastAPI service wrapping the core package.

Every endpoint is a stateless call into the pure library functions, so
the service scales trivially and responses are fully deterministic.
Run it with::

    uvicorn festcal.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query

from .. import __version__
from ..analysis import count_by_millennium, is_fibonacci, scan_range, verify_gap_set
from ..claims import run_claim_checks
from ..daycount import weekday
from ..festivals import Festival, FestivalKind, Predicate, festival_span
from ..gregorian import fixed_to_gregorian, gregorian_to_fixed, parse_gregorian
from ..hebrew import fixed_to_hebrew, hebrew_to_fixed, month_name, parse_hebrew
from ..render import format_percent
from .schemas import (
    CheckOut,
    ConvertResponse,
    CountResponse,
    FestivalHit,
    FestivalSpanOut,
    GapRow,
    GapsRequest,
    GapsResponse,
    GapViolationOut,
    GregorianDateOut,
    HebrewDateOut,
    MillenniumBucket,
    ScanRequest,
    ScanResponse,
    VerifyResponse,
)

app = FastAPI(
    title="festcal",
    version=__version__,
    description=(
        "Exact-arithmetic Hebrew/Gregorian calendar conversions and "
        "festival-coincidence analysis."
    ),
)


def _festival(request: ScanRequest) -> Festival:
    try:
        return Festival(
            request.festival,
            include_shemini_atzeret=request.shemini_atzeret,
            diaspora=request.diaspora,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok", "version": __version__}


@app.get("/convert", response_model=ConvertResponse)
def convert(
    gregorian: str | None = Query(default=None, description="YYYY-MM-DD"),
    hebrew: str | None = Query(default=None, description="e.g. '5772 Kislev 29'"),
) -> ConvertResponse:
    if (gregorian is None) == (hebrew is None):
        raise HTTPException(status_code=400, detail="pass exactly one of gregorian/hebrew")
    try:
        if gregorian is not None:
            gdate = parse_gregorian(gregorian)
            day = gregorian_to_fixed(gdate)
            hdate = fixed_to_hebrew(day)
        else:
            hdate = parse_hebrew(hebrew)
            day = hebrew_to_fixed(hdate)
            gdate = fixed_to_gregorian(day)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))

    hits = []
    for kind in FestivalKind:
        span = festival_span(Festival(kind), hdate.year)
        if day in span:
            hits.append(FestivalHit(festival=kind, day_index=day - span.first + 1))
    return ConvertResponse(
        fixed_day=day,
        weekday=str(weekday(day)),
        gregorian=GregorianDateOut(
            year=gdate.year, month=gdate.month, day=gdate.day, iso=str(gdate)
        ),
        hebrew=HebrewDateOut(
            year=hdate.year,
            month=hdate.month,
            month_name=month_name(hdate.year, hdate.month),
            day=hdate.day,
        ),
        festivals=hits,
    )


@app.get("/festival/{kind}/{hebrew_year}", response_model=FestivalSpanOut)
def festival_endpoint(
    kind: FestivalKind,
    hebrew_year: int,
    shemini_atzeret: bool = False,
    diaspora: bool = False,
) -> FestivalSpanOut:
    try:
        festival = Festival(kind, include_shemini_atzeret=shemini_atzeret, diaspora=diaspora)
        span = festival_span(festival, hebrew_year)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return FestivalSpanOut(
        festival=kind,
        hebrew_year=span.hebrew_year,
        first_day=span.first,
        last_day=span.last,
        first_gregorian=str(fixed_to_gregorian(span.first)),
        last_gregorian=str(fixed_to_gregorian(span.last)),
        length=span.length,
    )


@app.post("/scan", response_model=ScanResponse)
def scan(request: ScanRequest) -> ScanResponse:
    try:
        report = scan_range(
            request.from_year,
            request.to_year,
            _festival(request),
            Predicate(request.predicate_offset),
            workers=request.workers,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return ScanResponse(
        festival=request.festival,
        predicate_offset=request.predicate_offset,
        from_year=report.from_year,
        to_year=report.to_year,
        count=len(report.years),
        years=list(report.years),
        gaps=list(report.gaps),
        first=report.first,
        last=report.last,
    )


@app.post("/gaps", response_model=GapsResponse)
def gaps(request: GapsRequest) -> GapsResponse:
    try:
        report = scan_range(
            request.from_year,
            request.to_year,
            _festival(request),
            Predicate(request.predicate_offset),
            workers=request.workers,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    allowed = frozenset(request.allowed_set)
    verdict = verify_gap_set(report.gaps, allowed, report.years)
    rows = [
        GapRow(
            index=i,
            year_from=report.years[i],
            year_to=report.years[i + 1],
            gap=gap,
            is_fibonacci=is_fibonacci(gap),
            in_allowed_set=gap in allowed,
        )
        for i, gap in enumerate(report.gaps)
    ]
    return GapsResponse(
        allowed_set=sorted(allowed),
        ok=verdict.ok,
        gaps=rows,
        violations=[
            GapViolationOut(index=v.index, gap=v.gap, year_pair=v.year_pair)
            for v in verdict.violations
        ],
    )


@app.post("/count", response_model=CountResponse)
def count(request: ScanRequest) -> CountResponse:
    try:
        report = scan_range(
            request.from_year,
            request.to_year,
            _festival(request),
            Predicate(request.predicate_offset),
            workers=request.workers,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    buckets = [
        MillenniumBucket(
            start=b.start,
            end=b.end,
            count=b.count,
            covered_years=b.covered,
            percent=format_percent(b.count, b.covered),
        )
        for b in count_by_millennium(report)
    ]
    return CountResponse(
        from_year=report.from_year,
        to_year=report.to_year,
        total=len(report.years),
        buckets=buckets,
    )


@app.get("/verify", response_model=VerifyResponse)
def verify() -> VerifyResponse:
    checks = run_claim_checks()
    return VerifyResponse(
        ok=all(c.passed for c in checks),
        checks=[
            CheckOut(name=c.name, passed=c.passed, expected=c.expected, actual=c.actual)
            for c in checks
        ],
    )
