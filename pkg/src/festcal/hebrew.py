"""The fixed arithmetic Hebrew calendar.

Implements the classical rabbinic reckoning: 19-year leap cycle, mean
conjunction (molad) of Tishrei, the four postponement rules (dechiyot),
the six year shapes, month lengths, and exact conversion to and from
fixed day numbers.

Month numbering follows the religious convention, Nisan = 1 through
Adar = 12 (Adar II = 13 in leap years), so Tishrei is month 7 even
though the year number changes there.  Day accumulation inside a year
runs in civil order, Tishrei first, which is how the month tables
below are laid out.

New-year computation
--------------------
Rosh Hashanah of year ``y`` provisionally falls on the day containing
the molad of Tishrei.  Four postponements apply:

1. *Molad zaken*: a conjunction at or after 18 hours (noon) pushes the
   new year to the next day.
2. *Lo ADU*: the new year may not fall on Sunday, Wednesday or Friday;
   such a day is skipped.  Checked after the other rules.
3. *GaTaRaD*: in a common year, a Tuesday conjunction at or after
   9h 204p forces Thursday.
4. *BeTUTaKPaT*: in a year following a leap year, a Monday conjunction
   at or after 15h 589p forces Tuesday.

Rules 3 and 4 examine the original, pre-postponement conjunction; with
rule 2 applied last this reproduces the forced weekdays exactly.

The resulting day count is pinned to the fixed-day scale through
``_MOLAD_DAY_INDEX_OFFSET`` below; the traditional epoch alignment
(1 Tishrei of year 1 on fixed day -1373427) is *derived* from the
machinery and asserted in the test suite, not hardcoded anywhere.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from .daycount import (
    EPOCH_MOLAD_PARTS,
    LUNATION_PARTS,
    PARTS_PER_DAY,
    PARTS_PER_HOUR,
    FixedDay,
    MoladInstant,
)

# Month numbers (religious convention).
NISAN = 1
IYYAR = 2
SIVAN = 3
TAMMUZ = 4
AV = 5
ELUL = 6
TISHREI = 7
CHESHVAN = 8
KISLEV = 9
TEVET = 10
SHEVAT = 11
ADAR = 12  # Adar I in leap years
ADAR_II = 13  # leap years only

#: Civil-order month numbers for common and leap years (Tishrei first).
_CIVIL_ORDER_COMMON = (7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6)
_CIVIL_ORDER_LEAP = (7, 8, 9, 10, 11, 12, 13, 1, 2, 3, 4, 5, 6)

_MONTH_NAMES = (
    "Nisan", "Iyyar", "Sivan", "Tammuz", "Av", "Elul",
    "Tishrei", "Cheshvan", "Kislev", "Tevet", "Shevat", "Adar", "Adar II",
)

# Dechiya thresholds, in parts into the molad's day.
_MOLAD_ZAKEN_PARTS = 18 * PARTS_PER_HOUR  # 19440
_GATARAD_PARTS = 9 * PARTS_PER_HOUR + 204  # 9924
_BETUTAKPAT_PARTS = 15 * PARTS_PER_HOUR + 589  # 16789

# Fixed day number of "day 0" of the molad week scale: molad day-index 1
# (the origin Sunday) is fixed day -1373428, which keeps the 0=Sunday
# weekday convention of both scales aligned.
_MOLAD_DAY_INDEX_OFFSET = -1373429


class YearShape(str, Enum):
    """Cheshvan/Kislev pattern: 29+29, 29+30 or 30+30 days."""

    DEFICIENT = "deficient"
    REGULAR = "regular"
    COMPLETE = "complete"


class YearType(NamedTuple):
    """Length, shape and leap flag of one Hebrew year."""

    length: int
    classification: YearShape
    leap: bool


class HebrewDate(NamedTuple):
    """A (year, month, day) triple; year is Anno Mundi, month 1 = Nisan."""

    year: int
    month: int
    day: int

    def __str__(self) -> str:
        return f"{self.year} {month_name(self.year, self.month)} {self.day}"


def is_hebrew_leap(year: int) -> bool:
    """True in years 3, 6, 8, 11, 14, 17 and 19 of each 19-year cycle."""
    return (7 * year + 1) % 19 < 7


def months_in_year(year: int) -> int:
    return 13 if is_hebrew_leap(year) else 12


def month_name(year: int, month: int) -> str:
    """English month name; month 12 is "Adar I" in leap years."""
    if month == ADAR and is_hebrew_leap(year):
        return "Adar I"
    return _MONTH_NAMES[month - 1]


def _months_before_tishrei(year: int) -> int:
    # Count of lunations from the epoch conjunction to the Tishrei
    # conjunction of `year`: 235 months per completed 19-year cycle.
    return (235 * year - 234) // 19


def molad_tishrei(year: int) -> MoladInstant:
    """Mean conjunction starting Tishrei of the given year."""
    if year < 1:
        raise ValueError(f"Hebrew year must be >= 1, got {year}")
    return MoladInstant(EPOCH_MOLAD_PARTS + LUNATION_PARTS * _months_before_tishrei(year))


@lru_cache(maxsize=None)
def hebrew_new_year(year: int) -> FixedDay:
    """Fixed day number of 1 Tishrei (Rosh Hashanah) of the given year."""
    parts = molad_tishrei(year).parts
    day_index, time_of_day = divmod(parts, PARTS_PER_DAY)
    day_index += 1
    molad_weekday = (day_index - 1) % 7  # 0=Sunday

    if time_of_day >= _MOLAD_ZAKEN_PARTS:
        day_index += 1
    elif (
        molad_weekday == 2  # Tuesday
        and not is_hebrew_leap(year)
        and time_of_day >= _GATARAD_PARTS
    ):
        day_index += 1
    elif (
        molad_weekday == 1  # Monday
        and year > 1
        and is_hebrew_leap(year - 1)
        and time_of_day >= _BETUTAKPAT_PARTS
    ):
        day_index += 1

    if (day_index - 1) % 7 in (0, 3, 5):  # Sunday, Wednesday, Friday
        day_index += 1

    return day_index + _MOLAD_DAY_INDEX_OFFSET


def hebrew_year_length(year: int) -> YearType:
    """Length and shape of a Hebrew year.

    The postponement rules guarantee a length in {353, 354, 355, 383,
    384, 385}; anything else would mean the arithmetic above is broken,
    so it is asserted here rather than assumed.
    """
    length = hebrew_new_year(year + 1) - hebrew_new_year(year)
    leap = is_hebrew_leap(year)
    if length not in (353, 354, 355, 383, 384, 385):
        raise AssertionError(f"impossible year length {length} for year {year}")
    shape = YearShape(("deficient", "regular", "complete")[length % 10 - 3])
    return YearType(length, shape, leap)


def hebrew_month_length(year: int, month: int) -> int:
    """Days in the given month (religious numbering)."""
    if not 1 <= month <= months_in_year(year):
        raise ValueError(f"invalid month {month} for Hebrew year {year}")
    if month in (NISAN, SIVAN, AV, TISHREI, SHEVAT):
        return 30
    if month in (IYYAR, TAMMUZ, ELUL, TEVET, ADAR_II):
        return 29
    if month == ADAR:
        # Adar I (30 days) in leap years, the final Adar (29) otherwise.
        return 30 if is_hebrew_leap(year) else 29
    shape = hebrew_year_length(year).classification
    if month == CHESHVAN:
        return 30 if shape is YearShape.COMPLETE else 29
    # Kislev
    return 29 if shape is YearShape.DEFICIENT else 30


@lru_cache(maxsize=None)
def _civil_month_table(year: int) -> tuple[tuple[int, int, int], ...]:
    # (month, days_before_month, month_length) in civil order.
    order = _CIVIL_ORDER_LEAP if is_hebrew_leap(year) else _CIVIL_ORDER_COMMON
    table = []
    elapsed = 0
    for month in order:
        length = hebrew_month_length(year, month)
        table.append((month, elapsed, length))
        elapsed += length
    return tuple(table)


def check_hebrew_date(date: HebrewDate) -> HebrewDate:
    """Validate a Hebrew date, returning it unchanged."""
    year, month, day = date
    if year < 1:
        raise ValueError(f"Hebrew year must be >= 1, got {year}")
    if not 1 <= month <= months_in_year(year):
        raise ValueError(f"invalid month {month} for Hebrew year {year}")
    if not 1 <= day <= hebrew_month_length(year, month):
        raise ValueError(f"invalid Hebrew date {year}-{month}-{day}")
    return date


def hebrew_to_fixed(date: HebrewDate) -> FixedDay:
    """Fixed day number of a Hebrew date."""
    year, month, day = check_hebrew_date(date)
    for m, days_before, _length in _civil_month_table(year):
        if m == month:
            return hebrew_new_year(year) + days_before + day - 1
    raise AssertionError("unreachable: validated month missing from table")


# Mean Hebrew year over a 19-year cycle, as an exact rational in days:
# 235 lunations / 19 years = 35975351/98496 days (~365.2468).
MEAN_YEAR_NUMERATOR = 235 * LUNATION_PARTS // 5  # 35975351
MEAN_YEAR_DENOMINATOR = 19 * PARTS_PER_DAY // 5  # 98496


def fixed_to_hebrew(day: FixedDay) -> HebrewDate:
    """Hebrew date of a fixed day number; exact inverse of hebrew_to_fixed.

    Days before the Hebrew epoch (1 Tishrei of year 1) are rejected.
    The year is located by an arithmetic estimate from the mean year
    length and then adjusted; the month by scanning the civil-order
    table of that year.
    """
    epoch = hebrew_new_year(1)
    if day < epoch:
        raise ValueError(f"day {day} is before the Hebrew epoch ({epoch})")
    year = (day - epoch) * MEAN_YEAR_DENOMINATOR // MEAN_YEAR_NUMERATOR + 1
    while hebrew_new_year(year + 1) <= day:
        year += 1
    while hebrew_new_year(year) > day:
        year -= 1
    offset = day - hebrew_new_year(year)
    for month, days_before, length in _civil_month_table(year):
        if offset < days_before + length:
            return HebrewDate(year, month, offset - days_before + 1)
    raise AssertionError(f"day {day} beyond year {year} table")


def parse_hebrew(text: str) -> HebrewDate:
    """Parse a Hebrew date written as ``YEAR MONTH DAY``, e.g. ``5772 Kislev 29``.

    The month may be a name (case-insensitive; "Adar I"/"Adar II"
    accepted, "Iyar" tolerated for Iyyar) or a 1..13 month number.
    """
    pieces = text.strip().split()
    if len(pieces) == 4 and pieces[1].lower() == "adar":
        pieces = [pieces[0], f"{pieces[1]} {pieces[2]}", pieces[3]]
    if len(pieces) != 3:
        raise ValueError(f"expected 'YEAR MONTH DAY', got {text!r}")
    year_text, month_text, day_text = pieces
    try:
        year = int(year_text)
        day = int(day_text)
    except ValueError:
        raise ValueError(f"expected numeric year and day in {text!r}") from None
    month = _parse_month(month_text, year)
    return check_hebrew_date(HebrewDate(year, month, day))


def _parse_month(text: str, year: int) -> int:
    lowered = text.strip().lower()
    aliases = {
        "iyar": IYYAR,
        "adar i": ADAR,
        "adar 1": ADAR,
        "adar ii": ADAR_II,
        "adar 2": ADAR_II,
    }
    if lowered in aliases:
        return aliases[lowered]
    for number, name in enumerate(_MONTH_NAMES, start=1):
        if lowered == name.lower():
            return number
    try:
        return int(lowered)
    except ValueError:
        raise ValueError(f"unknown Hebrew month {text!r} (year {year})") from None
