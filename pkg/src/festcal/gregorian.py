"""Proleptic Gregorian calendar and its fixed-day conversions.

The Gregorian rules are applied to all years from 1 on, including the
centuries before the calendar's historical adoption; there is no
Julian transition.  Conversions are exact integer arithmetic and are
the inverse of one another over the whole supported range.
"""

from __future__ import annotations

from typing import NamedTuple

from .daycount import FixedDay

_DAYS_IN_MONTH = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)

# Cumulative days before each month in a common year.
_DAYS_BEFORE_MONTH = (0, 31, 59, 90, 120, 151, 181, 212, 243, 273, 304, 334)

_DAYS_PER_400_YEARS = 146097
_DAYS_PER_100_YEARS = 36524
_DAYS_PER_4_YEARS = 1461

MONTH_NAMES = (
    "January", "February", "March", "April", "May", "June",
    "July", "August", "September", "October", "November", "December",
)


class GregorianDate(NamedTuple):
    """A (year, month, day) triple in the proleptic Gregorian calendar."""

    year: int
    month: int
    day: int

    def __str__(self) -> str:
        return f"{self.year:04d}-{self.month:02d}-{self.day:02d}"


def is_gregorian_leap(year: int) -> bool:
    """True for years divisible by 4, except centuries not divisible by 400."""
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


def gregorian_month_length(year: int, month: int) -> int:
    if not 1 <= month <= 12:
        raise ValueError(f"Gregorian month must be 1..12, got {month}")
    if month == 2 and is_gregorian_leap(year):
        return 29
    return _DAYS_IN_MONTH[month - 1]


def check_gregorian_date(date: GregorianDate) -> GregorianDate:
    """Validate a Gregorian date, returning it unchanged."""
    year, month, day = date
    if year < 1:
        raise ValueError(f"Gregorian year must be >= 1, got {year}")
    if not 1 <= day <= gregorian_month_length(year, month):
        raise ValueError(f"invalid Gregorian date {year}-{month}-{day}")
    return date


def gregorian_to_fixed(date: GregorianDate) -> FixedDay:
    """Fixed day number of a Gregorian date (1 January of year 1 is day 1)."""
    year, month, day = check_gregorian_date(date)
    prior = year - 1
    day_of_year = _DAYS_BEFORE_MONTH[month - 1] + day
    if month > 2 and is_gregorian_leap(year):
        day_of_year += 1
    return 365 * prior + prior // 4 - prior // 100 + prior // 400 + day_of_year


def fixed_to_gregorian(day: FixedDay) -> GregorianDate:
    """Gregorian date of a fixed day number; exact inverse of gregorian_to_fixed.

    Day numbers before 1 (before the supported year range) are rejected.
    """
    if day < 1:
        raise ValueError(f"fixed day must be >= 1, got {day}")
    # Peel off whole 400/100/4/1-year cycles.  The 100- and 1-year
    # quotients can reach 4 exactly on the last day of a leap cycle,
    # which the final clamp turns back into 31 December.
    n = day - 1
    n400, n = divmod(n, _DAYS_PER_400_YEARS)
    n100, n = divmod(n, _DAYS_PER_100_YEARS)
    n4, n = divmod(n, _DAYS_PER_4_YEARS)
    n1, n = divmod(n, 365)
    year = 400 * n400 + 100 * n100 + 4 * n4 + n1 + 1
    if n1 == 4 or n100 == 4:
        return GregorianDate(year - 1, 12, 31)
    leap = is_gregorian_leap(year)
    month = 1
    while True:
        length = _DAYS_IN_MONTH[month - 1] + (1 if month == 2 and leap else 0)
        if n < length:
            return GregorianDate(year, month, n + 1)
        n -= length
        month += 1


def parse_gregorian(text: str) -> GregorianDate:
    """Parse ``YYYY-MM-DD`` (years may exceed four digits, e.g. 16103-12-25)."""
    pieces = text.strip().split("-")
    if len(pieces) != 3:
        raise ValueError(f"expected YYYY-MM-DD, got {text!r}")
    try:
        year, month, day = (int(p) for p in pieces)
    except ValueError:
        raise ValueError(f"expected numeric YYYY-MM-DD, got {text!r}") from None
    return check_gregorian_date(GregorianDate(year, month, day))
