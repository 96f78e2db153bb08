"""Counting pattern-avoiding inversion sequences.

Patterns are digit strings ("010"); pattern sets are comma-separated
("010,120"). Counts are Python ints of arbitrary size.
"""

from ._core import (
    NoRecurrenceError,
    NoReferenceDataError,
    ResourceLimitError,
    avoids,
    check,
    contains,
    count,
    count_a,
    count_c,
    count_e,
    count_f,
    enumerate,
    forb,
    forb_110,
    forb_210,
    is_inversion_sequence,
    normalize_patterns,
    reference_rows,
    refined,
    sequence_table,
    solved_family,
    stirling1,
)

__all__ = [
    "NoRecurrenceError",
    "NoReferenceDataError",
    "ResourceLimitError",
    "avoids",
    "check",
    "contains",
    "count",
    "count_a",
    "count_c",
    "count_e",
    "count_f",
    "enumerate",
    "forb",
    "forb_110",
    "forb_210",
    "is_inversion_sequence",
    "normalize_patterns",
    "reference_rows",
    "refined",
    "sequence_table",
    "solved_family",
    "stirling1",
]
