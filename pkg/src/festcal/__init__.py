"""festcal: exact-arithmetic Hebrew/Gregorian calendars and festival overlap analysis.

The package is organized in layers: integer day-count and lunar-part
arithmetic (:mod:`festcal.daycount`), the two calendars
(:mod:`festcal.gregorian`, :mod:`festcal.hebrew`), festival spans and
the Christmas-coincidence predicate (:mod:`festcal.festivals`), range
scanning and gap analysis (:mod:`festcal.analysis`), deterministic
rendering (:mod:`festcal.render`), and self-checkable reference results
(:mod:`festcal.claims`).  A CLI (:mod:`festcal.cli`) and a FastAPI
service (:mod:`festcal.service`) are thin layers over the same
functions.
"""

from .analysis import (
    GapVerdict,
    GapViolation,
    MillenniumCount,
    OccurrenceReport,
    count_by_millennium,
    gap_sequence,
    is_fibonacci,
    scan_range,
    verify_gap_set,
)
from .daycount import FixedDay, MoladInstant, Weekday, decompose_molad, weekday
from .festivals import (
    CoincidenceResult,
    Festival,
    FestivalKind,
    FestivalSpan,
    Predicate,
    christmas,
    coincides,
    festival_span,
)
from .gregorian import (
    GregorianDate,
    fixed_to_gregorian,
    gregorian_to_fixed,
    is_gregorian_leap,
    parse_gregorian,
)
from .hebrew import (
    HebrewDate,
    YearShape,
    YearType,
    fixed_to_hebrew,
    hebrew_month_length,
    hebrew_new_year,
    hebrew_to_fixed,
    hebrew_year_length,
    is_hebrew_leap,
    molad_tishrei,
    month_name,
    months_in_year,
    parse_hebrew,
)
from .render import OutputFormat, format_hebrew_date, format_percent, render

__version__ = "0.1.0"

__all__ = [
    "FixedDay",
    "MoladInstant",
    "Weekday",
    "weekday",
    "decompose_molad",
    "GregorianDate",
    "is_gregorian_leap",
    "gregorian_to_fixed",
    "fixed_to_gregorian",
    "parse_gregorian",
    "HebrewDate",
    "YearShape",
    "YearType",
    "is_hebrew_leap",
    "months_in_year",
    "month_name",
    "molad_tishrei",
    "hebrew_new_year",
    "hebrew_year_length",
    "hebrew_month_length",
    "hebrew_to_fixed",
    "fixed_to_hebrew",
    "parse_hebrew",
    "Festival",
    "FestivalKind",
    "FestivalSpan",
    "Predicate",
    "CoincidenceResult",
    "festival_span",
    "christmas",
    "coincides",
    "OccurrenceReport",
    "MillenniumCount",
    "GapVerdict",
    "GapViolation",
    "scan_range",
    "count_by_millennium",
    "gap_sequence",
    "verify_gap_set",
    "is_fibonacci",
    "OutputFormat",
    "render",
    "format_hebrew_date",
    "format_percent",
    "__version__",
]
