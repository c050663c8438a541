"""Linear day count and exact lunar-time arithmetic.

Everything else in the package is built on two integer scales:

* **Fixed day numbers** -- a single linear count of civil days in which
  day 1 is 1 January of year 1 (proleptic Gregorian).  Differences of
  fixed days are exact day counts, and the weekday is a bare ``mod 7``
  (day 1 is a Monday, so residue 0 means Sunday).

* **Molad parts (halakim)** -- lunar conjunction timestamps counted in
  1/1080ths of an hour from the calendrical origin, the instant 18:00
  beginning the Sunday of the epoch week.  One day is 25920 parts and a
  mean lunation is 29d 12h 793p = 765433 parts.  With this origin the
  traditional epoch conjunction lands at day 2, 5 hours, 204 parts,
  i.e. exactly 31524 parts.

All arithmetic is plain integer arithmetic; nothing here rounds.
Values stay comfortably inside 64 bits through year 25000 of the
lunar count (about 2.4e11 parts).
"""

from __future__ import annotations

from enum import IntEnum
from typing import NamedTuple

FixedDay = int
"""Alias for the linear day count (day 1 = 1 January of year 1)."""

PARTS_PER_HOUR = 1080
HOURS_PER_DAY = 24
PARTS_PER_DAY = PARTS_PER_HOUR * HOURS_PER_DAY  # 25920

#: Mean lunation: 29 days, 12 hours, 793 parts.
LUNATION_PARTS = 29 * PARTS_PER_DAY + 12 * PARTS_PER_HOUR + 793  # 765433

#: The epoch conjunction (day 2, 5 hours, 204 parts of the origin week).
EPOCH_MOLAD_PARTS = PARTS_PER_DAY + 5 * PARTS_PER_HOUR + 204  # 31524


class Weekday(IntEnum):
    """Days of the week, indexed 0=Sunday through 6=Saturday."""

    SUNDAY = 0
    MONDAY = 1
    TUESDAY = 2
    WEDNESDAY = 3
    THURSDAY = 4
    FRIDAY = 5
    SATURDAY = 6

    def __str__(self) -> str:
        return self.name.capitalize()


def weekday(day: FixedDay) -> Weekday:
    """Weekday of a fixed day number.

    Uses the mathematical modulus, so negative day numbers work: day 0
    is a Sunday, day -1 a Saturday.
    """
    return Weekday(day % 7)


class MoladInstant(NamedTuple):
    """A conjunction timestamp: total parts elapsed since the origin."""

    parts: int

    def __add__(self, extra_parts: int) -> "MoladInstant":  # type: ignore[override]
        return MoladInstant(self.parts + extra_parts)


def decompose_molad(m: MoladInstant) -> tuple[int, int, int]:
    """Split an instant into ``(day_index, hour, part)``.

    ``day_index`` counts days of the molad week scale starting at 1
    (day 1 is the origin Sunday); ``0 <= hour < 24`` and
    ``0 <= part < 1080``.  The decomposition is unique, and
    ``25920*(day_index-1) + 1080*hour + part`` recovers the input.

    Negative instants are rejected: nothing predates the origin.
    """
    if m.parts < 0:
        raise ValueError(f"molad instant must be non-negative, got {m.parts}")
    day_index, time_of_day = divmod(m.parts, PARTS_PER_DAY)
    hour, part = divmod(time_of_day, PARTS_PER_HOUR)
    return day_index + 1, hour, part
