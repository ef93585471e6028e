"""The Moore-Hodgson rejection algorithm for minimizing the number of late jobs.

Starting from the EDD sequence, each iteration finds the first late job and
rejects the longest job among those up to it (the first such job on ties),
until nothing is late. Rejected jobs go to the end of the schedule in
rejection order.

``solve`` runs this loop literally and records a trace; ``solve_fast`` gets the
same answer from one EDD pass with a max-heap. Both delegate their inner loop
to the active kernel backend.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Literal

import numpy as np

from . import _backend
from .errors import PreconditionError
from .model import Instance, Sequence, Solution


@dataclass(frozen=True)
class TraceRow:
    """One line of the iteration table.

    ``scanned_positions`` counts EDD columns (original EDD positions, rejected
    ones included) covered by the row; ``completions`` holds the completion
    time of every still-scheduled job among them.
    """

    kind: Literal["scan", "reject", "final"]
    scanned_positions: int
    completions: dict[int, int]
    rejected_so_far: tuple[int, ...]


@dataclass(frozen=True)
class Trace:
    """Iteration record of ``solve``; rows are rebuilt on first access.

    ``events`` holds one ``(first_late, rejected)`` pair of 0-based EDD
    positions per iteration that rejected a job.
    """

    edd: tuple[int, ...]
    processing: tuple[int, ...]
    events: tuple[tuple[int, int], ...]

    @cached_property
    def rows(self) -> tuple[TraceRow, ...]:
        n = len(self.edd)
        alive = [True] * n
        rejected: list[int] = []
        rows = []

        def completions(upto: int) -> dict[int, int]:
            out, load = {}, 0
            for pos in range(upto):
                if alive[pos]:
                    load += self.processing[pos]
                    out[self.edd[pos]] = load
            return out

        for k, m in self.events:
            rows.append(TraceRow("scan", k + 1, completions(k + 1), tuple(rejected)))
            alive[m] = False
            rejected.append(self.edd[m])
            rows.append(TraceRow("reject", k + 1, completions(k + 1), tuple(rejected)))
        rows.append(TraceRow("final", n, completions(n), tuple(rejected)))
        return tuple(rows)


def _edd_columns(instance: Instance) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    ids, p, d, w = instance.columns
    order = np.lexsort((ids, d))
    return ids[order], np.ascontiguousarray(p[order]), np.ascontiguousarray(d[order]), w[order]


def _build_solution(ids, p, w, rejected_pos) -> Solution:
    rejected_pos = np.asarray(rejected_pos, dtype=np.int64)
    keep = np.ones(len(ids), dtype=bool)
    keep[rejected_pos] = False
    on_time = ids[keep].tolist()
    completions = np.cumsum(p[keep], dtype=np.uint64).tolist()
    rejected = tuple(ids[rejected_pos].tolist())
    return Solution(
        on_time=Sequence(on_time),
        rejected=rejected,
        completion_times=dict(zip(on_time, completions)),
        num_late=len(rejected),
        weighted_late=sum(w[rejected_pos].tolist()),
    )


def solve(instance: Instance, *, backend: str | None = None) -> tuple[Solution, Trace]:
    """Reject the longest job of the first late prefix until the EDD sequence has no late job."""
    kernels = _backend.get(backend)
    ids, p, d, w = _edd_columns(instance)
    events = kernels.naive_events(p, d)
    events = tuple((int(k), int(m)) for k, m in events)
    solution = _build_solution(ids, p, w, [m for _, m in events])
    trace = Trace(tuple(ids.tolist()), tuple(p.tolist()), events)
    return solution, trace


def solve_fast(instance: Instance, *, backend: str | None = None) -> Solution:
    """O(n log n) variant of :func:`solve`; returns an identical Solution and no trace."""
    kernels = _backend.get(backend)
    ids, p, d, w = _edd_columns(instance)
    return _build_solution(ids, p, w, kernels.fast_rejections(p, d))


def is_oppositely_ordered(instance: Instance) -> bool:
    """True iff ``p_i <= p_j`` implies ``w_i >= w_j`` for every pair of jobs.

    Applied in both directions this forces equal weights on equal processing
    times, so after sorting by (p, w) the weights must be non-increasing
    across distinct p values and constant within each.
    """
    pairs = sorted((j.p, j.w) for j in instance.jobs)
    for (pa, wa), (pb, wb) in zip(pairs, pairs[1:]):
        if wa < wb or (pa == pb and wa != wb):
            return False
    return True


def solve_weighted_opposite(
    instance: Instance, *, backend: str | None = None
) -> tuple[Solution, Trace]:
    """Minimize the total weight of late jobs when p and w are oppositely ordered.

    The rejection rule is unchanged; with opposite ordering the longest job in
    the late prefix is also one of the lightest, so it remains optimal.

    Raises:
        PreconditionError: if the instance is not oppositely ordered.
    """
    if not is_oppositely_ordered(instance):
        raise PreconditionError(
            "processing times and weights are not oppositely ordered; "
            "the rejection rule is not optimal for this instance"
        )
    return solve(instance, backend=backend)
