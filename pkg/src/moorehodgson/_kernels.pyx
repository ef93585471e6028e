# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``moorehodgson._fallback``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t, uint8_t

cnp.import_array()


def naive_events(const uint64_t[::1] p, const uint64_t[::1] d):
    cdef Py_ssize_t n = p.shape[0]
    cdef int64_t[::1] alive = np.arange(n, dtype=np.int64)
    cdef Py_ssize_t size = n, pos, k, m
    cdef uint64_t load
    cdef int64_t j
    events = []
    while True:
        load = 0
        k = -1
        for pos in range(size):
            j = alive[pos]
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
        for pos in range(m, size - 1):
            alive[pos] = alive[pos + 1]
        size -= 1


cdef inline bint _above(uint64_t pa, int64_t ja, uint64_t pb, int64_t jb) nogil:
    # heap order: larger p first, then smaller position
    return pa > pb or (pa == pb and ja < jb)


def fast_rejections(const uint64_t[::1] p, const uint64_t[::1] d):
    cdef Py_ssize_t n = p.shape[0]
    cdef uint64_t[::1] hp = np.empty(n, dtype=np.uint64)
    cdef int64_t[::1] hj = np.empty(n, dtype=np.int64)
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] rej = out
    cdef Py_ssize_t size = 0, nrej = 0, i, parent, child
    cdef int64_t j, top_j, last_j
    cdef uint64_t load = 0, last_p, top_p
    with nogil:
        for j in range(n):
            # sift up
            i = size
            size += 1
            while i > 0:
                parent = (i - 1) >> 1
                if not _above(p[j], j, hp[parent], hj[parent]):
                    break
                hp[i] = hp[parent]
                hj[i] = hj[parent]
                i = parent
            hp[i] = p[j]
            hj[i] = j
            load += p[j]
            if load > d[j]:
                top_p = hp[0]
                top_j = hj[0]
                load -= top_p
                rej[nrej] = top_j
                nrej += 1
                size -= 1
                last_p = hp[size]
                last_j = hj[size]
                # sift down
                i = 0
                while True:
                    child = 2 * i + 1
                    if child >= size:
                        break
                    if child + 1 < size and _above(hp[child + 1], hj[child + 1], hp[child], hj[child]):
                        child += 1
                    if not _above(hp[child], hj[child], last_p, last_j):
                        break
                    hp[i] = hp[child]
                    hj[i] = hj[child]
                    i = child
                if size > 0:
                    hp[i] = last_p
                    hj[i] = last_j
    return out[:nrej]


def feasible_masks(const uint64_t[::1] p, const uint64_t[::1] d):
    cdef Py_ssize_t n = p.shape[0]
    if n > 40:
        raise ValueError("subset enumeration limited to 40 jobs")
    cdef uint64_t total = (<uint64_t>1) << n
    out = np.empty(total, dtype=np.bool_)
    cdef uint8_t[::1] ok = out.view(np.uint8)
    cdef uint64_t mask, load
    cdef Py_ssize_t i
    cdef uint8_t good
    with nogil:
        for mask in range(total):
            load = 0
            good = 1
            for i in range(n):
                if (mask >> i) & 1:
                    load += p[i]
                    if load > d[i]:
                        good = 0
                        break
            ok[mask] = good
    return out
