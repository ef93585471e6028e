"""Jobs, instances, sequences and the elementary scheduling quantities.

All times are exact non-negative integers. The total processing time of an
instance must fit in an unsigned 64-bit integer, which keeps every prefix sum
representable in the compiled kernels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from .errors import InstanceError, SequenceError

UINT64_MAX = 2**64 - 1


def _check_uint64(name: str, value: object) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise InstanceError(f"{name} must be an integer, got {value!r}")
    if not 0 <= value <= UINT64_MAX:
        raise InstanceError(f"{name}={value} is outside [0, 2**64 - 1]")


@dataclass(frozen=True, slots=True)
class Job:
    id: int
    p: int
    d: int
    w: int = 1

    def __post_init__(self) -> None:
        _check_uint64("p", self.p)
        _check_uint64("d", self.d)
        _check_uint64("w", self.w)
        if isinstance(self.id, bool) or not isinstance(self.id, (int, np.integer)) or self.id < 1:
            raise InstanceError(f"job id must be a positive integer, got {self.id!r}")


@dataclass(frozen=True)
class Instance:
    """A set of jobs, stored in ascending id order.

    ``weighted_format`` only records that the instance came from a 4-column
    file so that writing it back keeps the weight column; it does not take
    part in equality.
    """

    jobs: tuple[Job, ...]
    weighted_format: bool = field(default=False, compare=False)

    def __init__(self, jobs: Iterable[Job] = (), weighted_format: bool = False):
        jobs = tuple(sorted(jobs, key=lambda j: j.id))
        for a, b in zip(jobs, jobs[1:]):
            if a.id == b.id:
                raise InstanceError(f"duplicate job id {a.id}")
        total = sum(j.p for j in jobs)
        if total > UINT64_MAX:
            raise InstanceError(f"total processing time {total} overflows 64 bits")
        object.__setattr__(self, "jobs", jobs)
        object.__setattr__(self, "weighted_format", weighted_format)

    @classmethod
    def from_columns(cls, p: Iterable[int], d: Iterable[int], w: Iterable[int] | None = None) -> Instance:
        """Build an instance with ids 1..n from parallel value lists."""
        p, d = list(p), list(d)
        w = [1] * len(p) if w is None else list(w)
        if not len(p) == len(d) == len(w):
            raise InstanceError("column lengths differ")
        return cls(Job(i + 1, pi, di, wi) for i, (pi, di, wi) in enumerate(zip(p, d, w)))

    @property
    def n(self) -> int:
        return len(self.jobs)

    def __len__(self) -> int:
        return len(self.jobs)

    @cached_property
    def by_id(self) -> dict[int, Job]:
        return {j.id: j for j in self.jobs}

    @cached_property
    def columns(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """``(ids, p, d, w)`` as read-only uint64 arrays in id order."""
        n = len(self.jobs)
        cols = tuple(
            np.fromiter((getattr(j, name) for j in self.jobs), dtype=np.uint64, count=n)
            for name in ("id", "p", "d", "w")
        )
        for c in cols:
            c.flags.writeable = False
        return cols

    @property
    def total_processing(self) -> int:
        return sum(j.p for j in self.jobs)

    @property
    def total_weight(self) -> int:
        return sum(j.w for j in self.jobs)

    def without(self, job_id: int) -> Instance:
        """The sub-instance with ``job_id`` deleted."""
        if job_id not in self.by_id:
            raise SequenceError(f"unknown job id {job_id}")
        return Instance((j for j in self.jobs if j.id != job_id), self.weighted_format)

    def restricted_to(self, ids: Iterable[int]) -> Instance:
        keep = set(ids)
        unknown = keep - self.by_id.keys()
        if unknown:
            raise SequenceError(f"unknown job ids {sorted(unknown)}")
        return Instance((j for j in self.jobs if j.id in keep), self.weighted_format)


class Sequence(tuple):
    """An ordered tuple of distinct job ids (a schedule, or part of one)."""

    __slots__ = ()

    def __new__(cls, order: Iterable[int] = ()):
        return super().__new__(cls, order)

    def __repr__(self) -> str:
        return f"Sequence({tuple(self)!r})"


@dataclass(frozen=True)
class Solution:
    on_time: Sequence
    rejected: tuple[int, ...]
    completion_times: Mapping[int, int]
    num_late: int
    weighted_late: int

    @property
    def schedule(self) -> Sequence:
        """The full schedule: on-time jobs in EDD order, then rejected jobs."""
        return Sequence(self.on_time + self.rejected)


def check_sequence(instance: Instance, seq: Iterable[int], *, full: bool = False) -> Sequence:
    seq = Sequence(seq)
    by_id = instance.by_id
    seen: set[int] = set()
    for job_id in seq:
        if job_id not in by_id:
            raise SequenceError(f"unknown job id {job_id}")
        if job_id in seen:
            raise SequenceError(f"job id {job_id} repeated")
        seen.add(job_id)
    if full and len(seen) != instance.n:
        missing = sorted(by_id.keys() - seen)
        raise SequenceError(f"not a full schedule; missing {missing}")
    return seq


def edd_order(instance: Instance) -> Sequence:
    """All job ids by non-decreasing due date, ties by ascending id."""
    return Sequence(j.id for j in sorted(instance.jobs, key=lambda j: (j.d, j.id)))


def completion_times(instance: Instance, seq: Iterable[int]) -> dict[int, int]:
    seq = check_sequence(instance, seq)
    by_id = instance.by_id
    out: dict[int, int] = {}
    load = 0
    for job_id in seq:
        load += by_id[job_id].p
        out[job_id] = load
    return out


def first_late_index(instance: Instance, seq: Iterable[int]) -> int | None:
    """1-based position of the first job with C > d in ``seq``, or None."""
    seq = check_sequence(instance, seq)
    by_id = instance.by_id
    load = 0
    for pos, job_id in enumerate(seq, start=1):
        job = by_id[job_id]
        load += job.p
        if load > job.d:
            return pos
    return None


def late_jobs(instance: Instance, seq: Iterable[int]) -> list[int]:
    by_id = instance.by_id
    return [j for j, c in completion_times(instance, seq).items() if c > by_id[j].d]


def count_late(instance: Instance, seq: Iterable[int]) -> int:
    return len(late_jobs(instance, check_sequence(instance, seq, full=True)))


def weighted_late_sum(instance: Instance, seq: Iterable[int]) -> int:
    by_id = instance.by_id
    return sum(by_id[j].w for j in late_jobs(instance, check_sequence(instance, seq, full=True)))
