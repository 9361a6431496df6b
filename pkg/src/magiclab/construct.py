"""Regular-graph constructions.

The inductive builder grows an r-regular graph (r in {4, 5}) two vertices
at a time: pick two edge-disjoint two-edge matchings, delete their four
edges, and wire the freed endpoints to the two new vertices (joining the
new pair by an extra edge when r is odd).  The seeded pairing model
supplies random regular graphs for property testing.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import (
    InvalidPlanError,
    NoPlanFoundError,
    ParityViolationError,
    RetryLimitExceededError,
    UnsupportedParametersError,
)
from .graph import Graph, build_graph

#: Rejection-sampling attempts before the pairing model gives up.
RETRY_CAP = 1000


@dataclass(frozen=True)
class SurgeryPlan:
    """Two two-edge matchings, named by edge index, sharing no edge.

    Each pair must be vertex-disjoint internally.  The two pairs may share
    vertices with each other, only edge overlap is forbidden; the degree
    bookkeeping of :func:`expand_two` stays correct either way.
    """

    m1: tuple[int, int]
    m2: tuple[int, int]


def base_k6() -> Graph:
    """Complete graph on six vertices, the 5-regular base of the induction."""
    return build_graph(6, itertools.combinations(range(6), 2))


def base_octahedron() -> Graph:
    """K6 minus the perfect matching {(0,3), (1,4), (2,5)}.

    The octahedron is the 4-regular base of the induction: 6 vertices,
    12 edges, every degree 4.
    """
    removed = {(0, 3), (1, 4), (2, 5)}
    kept = (e for e in itertools.combinations(range(6), 2) if e not in removed)
    return build_graph(6, kept)


def _greedy_pair(g: Graph, skip: tuple[int, ...]) -> tuple[int, int] | None:
    """First two vertex-disjoint edges in index order, ignoring `skip`."""
    first = None
    for i, (u, v) in enumerate(g.edges):
        if i in skip:
            continue
        if first is None:
            first = i
            continue
        a, b = g.edges[first]
        if u != a and u != b and v != a and v != b:
            return first, i
    return None


def find_surgery_plan(g: Graph) -> SurgeryPlan:
    """Deterministic greedy scan for a surgery plan.

    m1 is the first pair of vertex-disjoint edges in index order; m2 is the
    first such pair among the remaining edges.  m2 may reuse vertices of m1
    but not its edges.

    Raises:
        NoPlanFoundError: the scan failed, which signals the caller broke
            the builder's preconditions (an r-regular graph with r >= 4 and
            even order >= 6 always admits a plan).
    """
    m1 = _greedy_pair(g, ())
    if m1 is None:
        raise NoPlanFoundError("no two vertex-disjoint edges found")
    m2 = _greedy_pair(g, m1)
    if m2 is None:
        raise NoPlanFoundError("no second pair of vertex-disjoint edges found")
    return SurgeryPlan(m1=m1, m2=m2)


def validate_plan(g: Graph, plan: SurgeryPlan) -> None:
    """Check the plan invariants against g.

    Raises:
        InvalidPlanError: repeated or out-of-range edge indices, or a pair
            whose two edges share a vertex.
    """
    indices = (*plan.m1, *plan.m2)
    for i in indices:
        if not 0 <= i < g.m:
            raise InvalidPlanError(f"edge index {i} out of range for {g.m} edges")
    if len(set(indices)) != 4:
        raise InvalidPlanError("plan must name four distinct edges")
    for name, pair in (("m1", plan.m1), ("m2", plan.m2)):
        (a, b), (c, d) = g.edges[pair[0]], g.edges[pair[1]]
        if len({a, b, c, d}) != 4:
            raise InvalidPlanError(f"{name} edges share a vertex")


def expand_two(g: Graph, plan: SurgeryPlan, r: int) -> Graph:
    """Grow g by two vertices while preserving r-regularity.

    The four plan edges are deleted; the endpoints of m1 are wired to the
    first new vertex, the endpoints of m2 to the second.  For r = 5 the two
    new vertices are also joined, which tops their degree up from 4 to 5.

    Raises:
        UnsupportedParametersError: r is not 4 or 5.
        InvalidPlanError: the plan fails its invariants against g.
    """
    if r not in (4, 5):
        raise UnsupportedParametersError(f"r must be 4 or 5, got {r}")
    validate_plan(g, plan)
    a, b = g.n, g.n + 1
    dropped = set(plan.m1) | set(plan.m2)
    new_edges = [e for i, e in enumerate(g.edges) if i not in dropped]
    for i in plan.m1:
        u, v = g.edges[i]
        new_edges += [(u, a), (v, a)]
    for i in plan.m2:
        u, v = g.edges[i]
        new_edges += [(u, b), (v, b)]
    if r == 5:
        new_edges.append((a, b))
    return build_graph(g.n + 2, new_edges)


def build_regular(n: int, r: int) -> Graph:
    """r-regular simple graph on n vertices by repeated two-vertex expansion.

    Supports r in {4, 5} with even n >= 6; the base graphs are K6 and the
    octahedron.

    Raises:
        UnsupportedParametersError: r outside {4, 5}, n odd, or n < 6.
    """
    if r not in (4, 5) or n % 2 != 0 or n < 6:
        raise UnsupportedParametersError(f"unsupported parameters n={n}, r={r}")
    g = base_k6() if r == 5 else base_octahedron()
    while g.n < n:
        g = expand_two(g, find_surgery_plan(g), r)
    return g


def random_regular(n: int, r: int, seed: int) -> Graph:
    """Seeded random r-regular simple graph via the pairing model.

    Each attempt shuffles the multiset of degree stubs and pairs them off
    consecutively; a draw containing a loop or a repeated pair is rejected
    wholesale.  Deterministic for a fixed seed.

    Raises:
        ParityViolationError: n * r is odd, so no r-regular graph exists.
        RetryLimitExceededError: no simple pairing within RETRY_CAP attempts
            (pathological parameters such as r >= n, or an unlucky seed on
            very small dense cases).
    """
    if n < 0 or r < 0:
        raise UnsupportedParametersError("n and r must be nonnegative")
    if (n * r) % 2 != 0:
        raise ParityViolationError(f"n*r must be even, got n={n}, r={r}")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(r)]
    for _ in range(RETRY_CAP):
        rng.shuffle(stubs)
        seen: set[tuple[int, int]] = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            e = (u, v) if u < v else (v, u)
            if e in seen:
                ok = False
                break
            seen.add(e)
        if ok:
            return build_graph(n, seen)
    raise RetryLimitExceededError(
        f"no simple pairing found in {RETRY_CAP} attempts for n={n}, r={r}"
    )
