"""Maximum matching in general graphs.

The main routine grows alternating BFS forests and contracts odd cycles
(blossoms) so that augmenting paths through them are still found; this is
the standard O(n^3) contraction scheme with parent pointers rewired along
the cycle.  A small exhaustive search doubles as an independent oracle for
validating it.  Both scan vertices and neighbors in ascending order, so
results are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NoPerfectMatchingError, TooLargeError
from .graph import Graph

#: Edge-count cap for the exhaustive oracle.
BRUTE_FORCE_EDGE_CAP = 24


@dataclass(frozen=True)
class Matching:
    """Pairwise vertex-disjoint edge indices into a graph's edge list."""

    edge_indices: frozenset[int]

    def __len__(self) -> int:
        return len(self.edge_indices)

    def vertices(self, g: Graph) -> frozenset[int]:
        """Vertices saturated by this matching in g."""
        return frozenset(v for i in self.edge_indices for v in g.edges[i])


@dataclass(frozen=True)
class MatchingReport:
    """A matching plus whether it saturates every vertex."""

    matching: Matching
    is_perfect: bool


def _lowest_common_base(match, parent, base, a, b):
    # Walk even vertices from a to the tree root, then from b until the
    # first marked base: that is the contraction point of the new blossom.
    seen = set()
    v = base[a]
    while True:
        seen.add(v)
        if match[v] == -1:
            break
        v = base[parent[match[v]]]
    v = base[b]
    while v not in seen:
        v = base[parent[match[v]]]
    return v


def _mark_blossom_path(match, parent, base, blossom, v, stop, child):
    # Flag every base on the even path from v to the contraction point and
    # rewire parents so the odd cycle can later be walked in either
    # direction during augmentation.
    while base[v] != stop:
        blossom[base[v]] = True
        blossom[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def _augmenting_path_end(adj, match, root, n):
    """BFS an alternating tree from root; return (free endpoint, parents).

    The endpoint is -1 when no augmenting path exists from this root.
    """
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # to is an even vertex of the same tree: contract the cycle.
                stop = _lowest_common_base(match, parent, base, v, to)
                blossom = [False] * n
                _mark_blossom_path(match, parent, base, blossom, v, stop, to)
                _mark_blossom_path(match, parent, base, blossom, to, stop, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = stop
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def max_matching(g: Graph) -> MatchingReport:
    """Maximum-cardinality matching of g.

    Deterministic: roots, neighbors, and therefore augmentations are taken
    in ascending index order, so repeated runs return the same matching.
    """
    n = g.n
    adj = g.adjacency
    match = [-1] * n
    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = _augmenting_path_end(adj, match, root, n)
        while end != -1:  # flip matched/unmatched along the path
            prev = parent[end]
            nxt = match[prev]
            match[end] = prev
            match[prev] = end
            end = nxt
    index = g.edge_index
    chosen = frozenset(index[(v, match[v])] for v in range(n) if match[v] > v)
    return MatchingReport(
        matching=Matching(chosen), is_perfect=2 * len(chosen) == n
    )


def perfect_matching(g: Graph) -> Matching:
    """A perfect matching of g, if one exists.

    Raises:
        NoPerfectMatchingError: the maximum matching leaves some vertex
            unsaturated (always the case for odd n).
    """
    report = max_matching(g)
    if not report.is_perfect:
        raise NoPerfectMatchingError(
            f"maximum matching covers {2 * len(report.matching)} of {g.n} vertices"
        )
    return report.matching


def brute_force_max_matching(g: Graph) -> MatchingReport:
    """Exhaustive maximum matching, used only to validate :func:`max_matching`.

    Branches on the lowest-index unsaturated vertex (leave it free, or
    match it to each free higher neighbor), which enumerates every matching
    exactly once while never extending a dependent edge set.

    Raises:
        TooLargeError: more than BRUTE_FORCE_EDGE_CAP edges.
    """
    if g.m > BRUTE_FORCE_EDGE_CAP:
        raise TooLargeError(
            f"{g.m} edges exceeds the brute-force cap of {BRUTE_FORCE_EDGE_CAP}"
        )
    n = g.n
    adj = g.adjacency
    index = g.edge_index
    saturated = [False] * n
    chosen: list[int] = []
    best: list[int] = []

    def descend(v: int) -> None:
        nonlocal best
        while v < n and saturated[v]:
            v += 1
        free = sum(1 for w in range(v, n) if not saturated[w])
        if len(chosen) + free // 2 <= len(best):
            return  # cannot strictly beat the incumbent
        if v >= n:
            best = chosen.copy()
            return
        descend(v + 1)  # v stays unsaturated
        saturated[v] = True
        for u in adj[v]:
            if u > v and not saturated[u]:
                saturated[u] = True
                chosen.append(index[(v, u)])
                descend(v + 1)
                chosen.pop()
                saturated[u] = False
        saturated[v] = False

    descend(0)
    matching = Matching(frozenset(best))
    return MatchingReport(matching=matching, is_perfect=2 * len(best) == n)
