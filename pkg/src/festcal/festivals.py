"""Festival spans and the Christmas-coincidence predicate.

A festival occupies an inclusive interval of fixed days within one
Hebrew year, so "December 25 falls during Hanukkah" reduces to an
integer comparison.  A Hebrew day is labeled here by the Gregorian
civil day that shares its daylight portion; under that convention the
default predicate (offset 0) asks whether December 25 is one of the
festival's days, which for Hanukkah is the same as lighting a candle
on the evening of December 24.  Offsets -1 and +1 shift the tested
civil day, exposing the "tree daytime on December 24" and "candle on
Christmas night" variants.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .daycount import FixedDay
from .gregorian import GregorianDate, gregorian_to_fixed
from .hebrew import (
    KISLEV,
    NISAN,
    SIVAN,
    TISHREI,
    HebrewDate,
    fixed_to_hebrew,
    hebrew_to_fixed,
)


class FestivalKind(str, Enum):
    HANUKKAH = "hanukkah"
    SUKKOT = "sukkot"
    ROSH_HASHANAH = "rosh-hashanah"
    PESACH = "pesach"
    SHAVUOT = "shavuot"

    def __str__(self) -> str:
        return {"rosh-hashanah": "Rosh Hashanah"}.get(self.value, self.value.capitalize())


# (anchor month, anchor day, base length) per kind.
_ANCHORS = {
    FestivalKind.HANUKKAH: (KISLEV, 25, 8),
    FestivalKind.SUKKOT: (TISHREI, 15, 7),
    FestivalKind.ROSH_HASHANAH: (TISHREI, 1, 2),
    FestivalKind.PESACH: (NISAN, 15, 7),
    FestivalKind.SHAVUOT: (SIVAN, 6, 1),
}


@dataclass(frozen=True)
class Festival:
    """A festival kind plus its length options.

    ``include_shemini_atzeret`` extends Sukkot to 8 days; ``diaspora``
    adds the extra day of Pesach and Shavuot.  Either flag on any other
    kind is meaningless and rejected.
    """

    kind: FestivalKind
    include_shemini_atzeret: bool = False
    diaspora: bool = False

    def __post_init__(self) -> None:
        if self.include_shemini_atzeret and self.kind is not FestivalKind.SUKKOT:
            raise ValueError("include_shemini_atzeret only applies to Sukkot")
        if self.diaspora and self.kind not in (FestivalKind.PESACH, FestivalKind.SHAVUOT):
            raise ValueError("diaspora only applies to Pesach and Shavuot")

    @property
    def length(self) -> int:
        base = _ANCHORS[self.kind][2]
        if self.include_shemini_atzeret or self.diaspora:
            base += 1
        return base


@dataclass(frozen=True)
class FestivalSpan:
    """Inclusive fixed-day interval of one festival in one Hebrew year."""

    hebrew_year: int
    first: FixedDay
    last: FixedDay

    @property
    def length(self) -> int:
        return self.last - self.first + 1

    def __contains__(self, day: FixedDay) -> bool:
        return self.first <= day <= self.last


@dataclass(frozen=True)
class Predicate:
    """Coincidence test: does Christmas day + offset land inside the span?

    Offset 0 tests December 25 itself; -1 and +1 test the neighbouring
    civil days.  Only these three variants are exposed.
    """

    offset_days: int = 0

    def __post_init__(self) -> None:
        if self.offset_days not in (-1, 0, 1):
            raise ValueError(f"predicate offset must be -1, 0 or +1, got {self.offset_days}")


@dataclass(frozen=True)
class CoincidenceResult:
    """Outcome of one year's test, with the Hebrew date of the tested day."""

    coincides: bool
    hebrew_date_of_christmas: HebrewDate
    festival_day_index: int | None = None


def festival_span(festival: Festival, hebrew_year: int) -> FestivalSpan:
    """The festival's inclusive fixed-day interval in the given Hebrew year."""
    month, day, _base = _ANCHORS[festival.kind]
    first = hebrew_to_fixed(HebrewDate(hebrew_year, month, day))
    return FestivalSpan(hebrew_year, first, first + festival.length - 1)


def christmas(gregorian_year: int) -> FixedDay:
    """Fixed day number of December 25 of the given Gregorian year."""
    return gregorian_to_fixed(GregorianDate(gregorian_year, 12, 25))


def coincides(
    gregorian_year: int,
    festival: Festival,
    predicate: Predicate = Predicate(),
) -> CoincidenceResult:
    """Test whether Christmas (shifted by the predicate offset) falls in the festival.

    The relevant Hebrew year is found by converting the tested day, not
    by any fixed year-offset formula, so the test stays correct however
    far Christmas drifts through the Hebrew year.
    """
    day = christmas(gregorian_year) + predicate.offset_days
    hebrew = fixed_to_hebrew(day)
    span = festival_span(festival, hebrew.year)
    if day in span:
        return CoincidenceResult(True, hebrew, day - span.first + 1)
    return CoincidenceResult(False, hebrew)
