# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled labeling search kernel.

The reference loop, with the shared invariants documented, lives in
_oracle_py; the two must stay behaviorally identical (status, witness,
and node count).
"""

from libc.stdlib cimport calloc, free

NON_MEMBER = 0
MEMBER = 1
BUDGET_EXCEEDED = 2


def search_labeling(int h, long long budget, int n,
                    int[::1] eu, int[::1] ev,
                    signed char[::1] closes_u, signed char[::1] closes_v):
    """See _oracle_py.search_labeling; same contract, compiled loop."""
    cdef Py_ssize_t m = eu.shape[0]
    cdef long long* sums = <long long*> calloc(n if n > 0 else 1, sizeof(long long))
    cdef int* cur = <int*> calloc(m if m > 0 else 1, sizeof(int))
    if sums == NULL or cur == NULL:
        if sums != NULL:
            free(sums)
        if cur != NULL:
            free(cur)
        raise MemoryError()

    cdef long long nodes = 0
    cdef Py_ssize_t pos = 0
    cdef int val, a, b
    cdef long long sa, sb
    cdef int status = NON_MEMBER
    cdef Py_ssize_t i
    found = None
    try:
        while True:
            val = cur[pos] + 1
            if val >= h:
                cur[pos] = 0
                pos -= 1
                if pos < 0:
                    status = NON_MEMBER
                    break
                sums[eu[pos]] -= cur[pos]
                sums[ev[pos]] -= cur[pos]
                continue
            nodes += 1
            if nodes > budget:
                status = BUDGET_EXCEEDED
                break
            cur[pos] = val
            a = eu[pos]
            b = ev[pos]
            sa = sums[a] + val
            sb = sums[b] + val
            if (closes_u[pos] and sa % h != 0) or (closes_v[pos] and sb % h != 0):
                continue
            sums[a] = sa
            sums[b] = sb
            if pos == m - 1:
                status = MEMBER
                found = [cur[i] for i in range(m)]
                break
            pos += 1
        return status, found, nodes
    finally:
        free(sums)
        free(cur)
