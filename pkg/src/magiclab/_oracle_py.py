"""Pure-Python fallback for the labeling search kernel.

Mirrors the compiled extension exactly: same decision order contract, same
node accounting, same first witness.  magiclab.magic selects between the
two at import time.
"""

from __future__ import annotations

NON_MEMBER = 0
MEMBER = 1
BUDGET_EXCEEDED = 2


def search_labeling(h, budget, n, eu, ev, closes_u, closes_v):
    """Depth-first search for an edge labeling with all vertex sums 0 mod h.

    Positions follow the caller's edge order; eu[pos] and ev[pos] are the
    endpoints of the edge decided at pos, and closes_u/closes_v flag the
    position at which that endpoint's incident sum becomes complete and is
    tested against 0.  Labels are tried ascending from 1 to h - 1, one
    budget node per trial, so the first witness found is the
    lexicographically least along the given order.

    Returns (status, labels_by_position or None, nodes_used) with at least
    one edge assumed (the caller short-circuits empty graphs).
    """
    m = len(eu)
    sums = [0] * n
    cur = [0] * m
    nodes = 0
    pos = 0
    # Invariant at the top of the loop: positions < pos are applied to
    # sums, position pos is not, and cur[pos] is the last value tried
    # there (0 when the position is fresh).
    while True:
        val = cur[pos] + 1
        if val >= h:
            cur[pos] = 0
            pos -= 1
            if pos < 0:
                return NON_MEMBER, None, nodes
            sums[eu[pos]] -= cur[pos]
            sums[ev[pos]] -= cur[pos]
            continue
        nodes += 1
        if nodes > budget:
            return BUDGET_EXCEEDED, None, nodes
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
            return MEMBER, list(cur), nodes
        pos += 1
