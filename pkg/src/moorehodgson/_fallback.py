"""Pure-Python kernels, used when the compiled extension is unavailable.

Every kernel takes processing times and due dates as uint64 arrays already in
EDD order and speaks in EDD positions (0-based). The compiled module
``_kernels`` implements the same three functions with the same results.
"""

from __future__ import annotations

import heapq

import numpy as np


def naive_events(p: np.ndarray, d: np.ndarray) -> list[tuple[int, int]]:
    """Run the rejection loop literally, rescanning the sequence every iteration.

    Returns one ``(first_late, rejected)`` pair of EDD positions per rejection.
    The rejected job is the first maximum-p job among the scheduled jobs up to
    and including the first late one.
    """
    p, d = p.tolist(), d.tolist()
    alive = list(range(len(p)))
    events = []
    while True:
        load = 0
        k = -1
        for pos, j in enumerate(alive):
            load += p[j]
            if load > d[j]:
                k = pos
                break
        if k < 0:
            return events
        m = 0
        for pos in range(1, k + 1):
            if p[alive[pos]] > p[alive[m]]:
                m = pos
        events.append((alive[k], alive[m]))
        del alive[m]


def fast_rejections(p: np.ndarray, d: np.ndarray) -> list[int]:
    """Single EDD pass with a max-heap on (p, -position); returns rejected positions."""
    heap: list[tuple[int, int]] = []
    push, pop = heapq.heappush, heapq.heappop
    rejected = []
    load = 0
    for j, (pj, dj) in enumerate(zip(p.tolist(), d.tolist())):
        push(heap, (-pj, j))
        load += pj
        if load > dj:
            neg_p, m = pop(heap)
            load += neg_p
            rejected.append(m)
    return rejected


def feasible_masks(p: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Boolean array over all 2**n subsets; bit i of the index selects EDD position i.

    A subset is feasible when running it in EDD order leaves no job late.
    """
    n = len(p)
    masks = np.arange(1 << n, dtype=np.uint64)
    load = np.zeros(1 << n, dtype=np.uint64)
    ok = np.ones(1 << n, dtype=bool)
    for i in range(n):
        chosen = ((masks >> np.uint64(i)) & np.uint64(1)).astype(bool)
        load += np.where(chosen, p[i], np.uint64(0))
        ok &= ~chosen | (load <= d[i])
    return ok
