"""Range scanning, millennium counting, gap sequences and Fibonacci tests.

A scan walks a Gregorian year range, records every year whose Christmas
coincides with the chosen festival, and derives the gap sequence of
consecutive occurrence years.  Scans may be split into chunks evaluated
on worker threads; every year's test is a pure function, so the merged
result is bit-identical whatever the degree of parallelism.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import isqrt

from .festivals import Festival, Predicate, coincides

#: Largest Gregorian year a scan may touch; the arithmetic is validated
#: well past this, but nothing beyond is ever needed.
MAX_SCAN_YEAR = 25000

_CHUNK_YEARS = 512


@dataclass(frozen=True)
class OccurrenceReport:
    """Sorted coincidence years over an inclusive Gregorian range."""

    festival: Festival
    predicate: Predicate
    from_year: int
    to_year: int
    years: tuple[int, ...]

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(gap_sequence(self.years))

    @property
    def first(self) -> int | None:
        return self.years[0] if self.years else None

    @property
    def last(self) -> int | None:
        return self.years[-1] if self.years else None


@dataclass(frozen=True)
class MillenniumCount:
    """Occurrences inside one bucket [1000k+1, 1000(k+1)] of a report."""

    start: int
    end: int
    count: int
    covered: int  # report years falling in this bucket's range


@dataclass(frozen=True)
class GapViolation:
    index: int
    gap: int
    year_pair: tuple[int, int] | None = None


@dataclass(frozen=True)
class GapVerdict:
    """Result of checking every gap against an allowed set."""

    allowed_set: frozenset[int]
    ok: bool
    violations: tuple[GapViolation, ...] = field(default_factory=tuple)


def scan_range(
    from_year: int,
    to_year: int,
    festival: Festival,
    predicate: Predicate = Predicate(),
    workers: int = 1,
) -> OccurrenceReport:
    """Collect every year in [from_year, to_year] whose Christmas coincides.

    ``workers`` > 1 spreads the range over a thread pool in fixed
    chunks; chunk results are concatenated in range order, so output is
    identical for any worker count.
    """
    if not 1 <= from_year <= to_year <= MAX_SCAN_YEAR:
        raise ValueError(
            f"scan range must satisfy 1 <= from <= to <= {MAX_SCAN_YEAR}, "
            f"got {from_year}..{to_year}"
        )
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    chunks = [
        range(start, min(start + _CHUNK_YEARS, to_year + 1))
        for start in range(from_year, to_year + 1, _CHUNK_YEARS)
    ]

    def scan_chunk(years: range) -> list[int]:
        return [y for y in years if coincides(y, festival, predicate).coincides]

    if workers == 1 or len(chunks) == 1:
        pieces = [scan_chunk(chunk) for chunk in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pieces = list(pool.map(scan_chunk, chunks))

    years = tuple(y for piece in pieces for y in piece)
    return OccurrenceReport(festival, predicate, from_year, to_year, years)


def count_by_millennium(report: OccurrenceReport) -> list[MillenniumCount]:
    """Bucket a report's years into millennia [1000k+1, 1000(k+1)].

    Every bucket overlapping the report range is emitted, including
    empty ones; counts always sum to the report's total.
    """
    buckets = []
    for k in range((report.from_year - 1) // 1000, (report.to_year - 1) // 1000 + 1):
        start, end = 1000 * k + 1, 1000 * (k + 1)
        count = sum(1 for y in report.years if start <= y <= end)
        covered = min(end, report.to_year) - max(start, report.from_year) + 1
        buckets.append(MillenniumCount(start, end, count, covered))
    return buckets


def gap_sequence(years) -> list[int]:
    """Successive differences of a strictly increasing year list."""
    years = list(years)
    for a, b in zip(years, years[1:]):
        if b <= a:
            raise ValueError(f"years must be strictly increasing ({a} before {b})")
    return [b - a for a, b in zip(years, years[1:])]


def verify_gap_set(gaps, allowed, years=None) -> GapVerdict:
    """Check that every gap is a member of the allowed set.

    When the originating ``years`` list is supplied, each violation
    carries the offending pair of years.
    """
    allowed_set = frozenset(allowed)
    years = list(years) if years is not None else None
    violations = []
    for index, gap in enumerate(gaps):
        if gap not in allowed_set:
            pair = (years[index], years[index + 1]) if years else None
            violations.append(GapViolation(index, gap, pair))
    return GapVerdict(allowed_set, not violations, tuple(violations))


def is_fibonacci(n: int) -> bool:
    """True iff n is a Fibonacci number (n >= 1).

    Uses the perfect-square characterization: n is Fibonacci exactly
    when 5n^2 + 4 or 5n^2 - 4 is a perfect square.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    for candidate in (5 * n * n + 4, 5 * n * n - 4):
        root = isqrt(candidate)
        if root * root == candidate:
            return True
    return False
