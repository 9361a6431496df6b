"""Canonical simple-graph representation and basic structural predicates.

Vertices are the dense integers 0..n-1.  Edges are kept as a tuple of
(u, v) pairs with u < v, sorted lexicographically, so equal graphs have
identical representations and every edge is addressable by its index in
that tuple.  Edge-indexed data (labelings, matchings) relies on this
stable order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DuplicateEdgeError, LoopEdgeError, VertexOutOfRangeError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph in canonical form.

    Use :func:`build_graph` to construct one from raw vertex pairs; this
    constructor validates but does not normalize, so it rejects anything
    that is not already canonical.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise VertexOutOfRangeError("vertex count must be nonnegative")
        prev = None
        for u, v in self.edges:
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}")
            if not 0 <= u < v < self.n:
                raise VertexOutOfRangeError(
                    f"edge ({u}, {v}) out of range for n={self.n}"
                )
            if prev is not None and (u, v) <= prev:
                if (u, v) == prev:
                    raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
                raise ValueError("edge list not sorted; use build_graph")
            prev = (u, v)

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists in ascending order, one per vertex."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(ix) for ix in inc)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        """Map from canonical (u, v) pair to its index in the edge list."""
        return {e: i for i, e in enumerate(self.edges)}


def build_graph(n: int, edge_pairs: Iterable[tuple[int, int]]) -> Graph:
    """Validate and canonicalize raw vertex pairs into a :class:`Graph`.

    Pairs are normalized to u < v and sorted lexicographically, so the
    input order never matters.

    Raises:
        LoopEdgeError: some pair has equal endpoints.
        DuplicateEdgeError: the same unordered pair appears twice.
        VertexOutOfRangeError: an endpoint is not in 0..n-1.
    """
    normalized: list[Edge] = []
    for a, b in edge_pairs:
        if a == b:
            raise LoopEdgeError(f"loop at vertex {a}")
        u, v = (a, b) if a < b else (b, a)
        if u < 0 or v >= n:
            raise VertexOutOfRangeError(f"edge ({a}, {b}) out of range for n={n}")
        normalized.append((u, v))
    normalized.sort()
    for prev, cur in zip(normalized, normalized[1:]):
        if prev == cur:
            raise DuplicateEdgeError(f"duplicate edge {cur}")
    return Graph(n, tuple(normalized))


def degrees(g: Graph) -> tuple[int, ...]:
    """Per-vertex incident edge counts; sums to twice the edge count."""
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return tuple(deg)


def is_regular(g: Graph, r: int) -> bool:
    """True iff every vertex has degree exactly r.

    The edgeless graph is 0-regular; a graph with no vertices is r-regular
    for every r, vacuously.
    """
    return all(d == r for d in degrees(g))


def is_two_edge_connected(g: Graph) -> bool:
    """True iff g is connected, has at least two vertices, and no bridge.

    Bridges are found by a single iterative depth-first traversal over the
    adjacency lists (lowpoint rule: a tree edge is a bridge iff the child's
    lowpoint lies strictly below the parent on the discovery clock).
    """
    n = g.n
    if n < 2:
        return False
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    timer = 0
    disc[0] = low[0] = timer
    timer += 1
    # Frames are (vertex, parent, next neighbor slot).  The parent skip is
    # exact because simple graphs carry no parallel edges.
    stack: list[tuple[int, int, int]] = [(0, -1, 0)]
    while stack:
        v, parent, i = stack.pop()
        if i < len(adj[v]):
            stack.append((v, parent, i + 1))
            to = adj[v][i]
            if to == parent:
                continue
            if disc[to] != -1:
                low[v] = min(low[v], disc[to])
            else:
                disc[to] = low[to] = timer
                timer += 1
                stack.append((to, v, 0))
        elif parent != -1:
            low[parent] = min(low[parent], low[v])
            if low[v] > disc[parent]:
                return False  # the tree edge parent-v is a bridge
    return timer == n
