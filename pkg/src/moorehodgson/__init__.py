"""Minimize the number of late jobs on a single machine (Moore-Hodgson)."""

from ._backend import ACTIVE as BACKEND
from .algorithm import Trace, TraceRow, is_oppositely_ordered, solve, solve_fast, solve_weighted_opposite
from .errors import (
    InstanceError,
    OracleCapError,
    ParseError,
    PreconditionError,
    SchedulingError,
    SequenceError,
)
from .model import (
    Instance,
    Job,
    Sequence,
    Solution,
    completion_times,
    count_late,
    edd_order,
    first_late_index,
    weighted_late_sum,
)

__all__ = [
    "BACKEND",
    "Instance",
    "InstanceError",
    "Job",
    "OracleCapError",
    "ParseError",
    "PreconditionError",
    "SchedulingError",
    "Sequence",
    "SequenceError",
    "Solution",
    "Trace",
    "TraceRow",
    "completion_times",
    "count_late",
    "edd_order",
    "first_late_index",
    "is_oppositely_ordered",
    "solve",
    "solve_fast",
    "solve_weighted_opposite",
    "weighted_late_sum",
]
