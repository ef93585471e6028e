"""Exact brute-force optimum and machine checks of the correctness argument.

A set of jobs can all be on time in some order iff they are all on time in
EDD order, so the optimum is found by testing every subset with one EDD pass
and keeping the best feasible one. That is O(2**n * n), which is why ``n`` is
capped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _backend
from .errors import OracleCapError, PreconditionError, SequenceError
from .model import Instance, edd_order, first_late_index

DEFAULT_CAP = 20


@dataclass(frozen=True)
class OracleResult:
    min_objective: int
    witness_on_time: frozenset[int]
    all_optimal_on_time_sets: tuple[frozenset[int], ...] | None = None


def feasible_on_time(instance: Instance, subset: Iterable[int]) -> bool:
    """Can every job of ``subset`` finish by its due date (in EDD order)?"""
    subset = set(subset)
    unknown = subset - instance.by_id.keys()
    if unknown:
        raise SequenceError(f"unknown job ids {sorted(unknown)}")
    seq = [j for j in edd_order(instance) if j in subset]
    return first_late_index(instance, seq) is None


def _subset_values(values: list[int], size: int) -> np.ndarray:
    """Sum of ``values`` over each subset mask, bit i selecting ``values[i]``."""
    dtype = np.int64 if sum(values) < 2**63 else object
    out = np.zeros(size, dtype=dtype)
    masks = np.arange(size, dtype=np.int64)
    for i, v in enumerate(values):
        if v:
            out += ((masks >> i) & 1).astype(dtype) * v
    return out


def brute_force(
    instance: Instance,
    weighted: bool = False,
    *,
    all_optimal: bool = False,
    cap: int = DEFAULT_CAP,
    backend: str | None = None,
) -> OracleResult:
    """Minimum number (or total weight) of late jobs over all schedules, by exhaustion.

    The witness is the optimal on-time set with the smallest subset index
    (bit i = i-th job in EDD order), so results are deterministic.
    """
    if instance.n > cap:
        raise OracleCapError(f"{instance.n} jobs exceeds the oracle cap of {cap}")
    kernels = _backend.get(backend)
    order = sorted(instance.jobs, key=lambda j: (j.d, j.id))
    p = np.array([j.p for j in order], dtype=np.uint64)
    d = np.array([j.d for j in order], dtype=np.uint64)
    feasible = np.asarray(kernels.feasible_masks(p, d), dtype=bool)

    size = 1 << instance.n
    weights = [j.w if weighted else 1 for j in order]
    kept = _subset_values(weights, size)
    best_kept = kept[feasible].max()
    optimal = np.flatnonzero(feasible & (kept == best_kept))

    def as_set(mask) -> frozenset[int]:
        mask = int(mask)
        return frozenset(job.id for i, job in enumerate(order) if mask >> i & 1)

    return OracleResult(
        min_objective=int(sum(weights) - best_kept),
        witness_on_time=as_set(optimal[0]),
        all_optimal_on_time_sets=tuple(as_set(m) for m in optimal) if all_optimal else None,
    )


def rejection_choice(instance: Instance) -> tuple[int, int] | None:
    """``(k, m)`` for the first iteration: 1-based first late EDD position and the
    id of the first maximum-p job among positions 1..k. None if EDD has no late job.
    """
    edd = edd_order(instance)
    k = first_late_index(instance, edd)
    if k is None:
        return None
    by_id = instance.by_id
    prefix = edd[:k]
    longest = max(by_id[j].p for j in prefix)
    m = next(j for j in prefix if by_id[j].p == longest)
    return k, m


def check_prop1(instance: Instance, *, cap: int = DEFAULT_CAP) -> bool:
    """EDD has a late job exactly when the optimum is at least one."""
    edd_late = first_late_index(instance, edd_order(instance)) is not None
    return edd_late == (brute_force(instance, cap=cap).min_objective >= 1)


def _require_late(instance: Instance) -> tuple[int, int]:
    choice = rejection_choice(instance)
    if choice is None:
        raise PreconditionError("the EDD sequence has no late job")
    return choice


def check_lemma1(instance: Instance, *, cap: int = DEFAULT_CAP) -> bool:
    """Some optimal on-time set leaves out the job the algorithm rejects first."""
    _, m = _require_late(instance)
    result = brute_force(instance, all_optimal=True, cap=cap)
    return any(m not in s for s in result.all_optimal_on_time_sets)


def check_induction_step(instance: Instance, *, cap: int = DEFAULT_CAP) -> bool:
    """Deleting the first rejected job lowers the optimum by exactly one."""
    _, m = _require_late(instance)
    before = brute_force(instance, cap=cap).min_objective
    after = brute_force(instance.without(m), cap=cap).min_objective
    return after == before - 1
