"""Request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator

from ..festivals import FestivalKind


class GregorianDateOut(BaseModel):
    year: int
    month: int
    day: int
    iso: str


class HebrewDateOut(BaseModel):
    year: int
    month: int
    month_name: str
    day: int


class FestivalHit(BaseModel):
    festival: FestivalKind
    day_index: int


class ConvertResponse(BaseModel):
    fixed_day: int
    weekday: str
    gregorian: GregorianDateOut
    hebrew: HebrewDateOut
    festivals: list[FestivalHit]


class FestivalSpanOut(BaseModel):
    festival: FestivalKind
    hebrew_year: int
    first_day: int
    last_day: int
    first_gregorian: str
    last_gregorian: str
    length: int


class ScanRequest(BaseModel):
    from_year: int = Field(ge=1, le=25000)
    to_year: int = Field(ge=1, le=25000)
    festival: FestivalKind
    predicate_offset: int = 0
    shemini_atzeret: bool = False
    diaspora: bool = False
    workers: int = Field(default=1, ge=1, le=64)

    @field_validator("predicate_offset")
    @classmethod
    def _offset_exposed(cls, value: int) -> int:
        if value not in (-1, 0, 1):
            raise ValueError("predicate_offset must be -1, 0 or 1")
        return value


class ScanResponse(BaseModel):
    festival: FestivalKind
    predicate_offset: int
    from_year: int
    to_year: int
    count: int
    years: list[int]
    gaps: list[int]
    first: int | None
    last: int | None


class GapsRequest(ScanRequest):
    allowed_set: list[int] = Field(default=[2, 3, 5, 8], min_length=1)


class GapRow(BaseModel):
    index: int
    year_from: int
    year_to: int
    gap: int
    is_fibonacci: bool
    in_allowed_set: bool


class GapViolationOut(BaseModel):
    index: int
    gap: int
    year_pair: tuple[int, int] | None


class GapsResponse(BaseModel):
    allowed_set: list[int]
    ok: bool
    gaps: list[GapRow]
    violations: list[GapViolationOut]


class MillenniumBucket(BaseModel):
    start: int
    end: int
    count: int
    covered_years: int
    percent: str


class CountResponse(BaseModel):
    from_year: int
    to_year: int
    total: int
    buckets: list[MillenniumBucket]


class CheckOut(BaseModel):
    name: str
    passed: bool
    expected: str
    actual: str


class VerifyResponse(BaseModel):
    ok: bool
    checks: list[CheckOut]
