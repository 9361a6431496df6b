"""Degree-sequence machinery: graphicality tests and a deterministic realizer."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import NotGraphicalError
from .graph import Graph, build_graph, degrees


class DegreeSequence:
    """Nonincreasing sequence of nonnegative integers.

    Input order does not matter; the constructor sorts, treating the input
    as a multiset of degrees.
    """

    __slots__ = ("d",)

    def __init__(self, values: Iterable[int]) -> None:
        d = tuple(sorted((int(x) for x in values), reverse=True))
        if d and d[-1] < 0:
            raise ValueError(f"degrees must be nonnegative, got {d[-1]}")
        self.d = d

    @classmethod
    def of_graph(cls, g: Graph) -> "DegreeSequence":
        return cls(degrees(g))

    def __len__(self) -> int:
        return len(self.d)

    def __iter__(self) -> Iterator[int]:
        return iter(self.d)

    def __getitem__(self, i: int) -> int:
        return self.d[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DegreeSequence):
            return self.d == other.d
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.d)

    def __repr__(self) -> str:
        return f"DegreeSequence({list(self.d)!r})"


def necessary_conditions(d: DegreeSequence) -> bool:
    """Largest entry at most n - 1 and even degree sum.

    Necessary but not sufficient for realizability by a simple graph.
    """
    n = len(d)
    if n == 0:
        return True
    return d[0] <= n - 1 and sum(d.d) % 2 == 0


def is_graphical(d: DegreeSequence) -> bool:
    """Decide whether some simple graph has degree sequence d.

    Checks the Erdos-Gallai inequality family: the sum must be even and,
    for every k = 1..n, the k largest degrees must be absorbable,

        sum(d[:k])  <=  k*(k-1) + sum(min(d_i, k) for i > k).
    """
    seq = d.d
    n = len(seq)
    if n == 0:
        return True
    if sum(seq) % 2 != 0:
        return False
    for k in range(1, n + 1):
        lhs = sum(seq[:k])
        rhs = k * (k - 1) + sum(min(x, k) for x in seq[k:])
        if lhs > rhs:
            return False
    return True


def realize(d: DegreeSequence) -> Graph:
    """Construct a graph whose sorted degree sequence equals d.

    Classic highest-degree-first construction: the vertex with the largest
    remaining degree is wired to the next-highest candidates, and ties are
    always broken toward the lowest vertex index, so the output is
    deterministic.

    Raises:
        NotGraphicalError: d is not graphical.
    """
    if not is_graphical(d):
        raise NotGraphicalError(f"sequence {list(d.d)} is not graphical")
    n = len(d)
    rem = list(d.d)
    active = set(range(n))
    edges: list[tuple[int, int]] = []
    while active:
        center = max(active, key=lambda v: (rem[v], -v))
        k = rem[center]
        if k == 0:
            break
        active.remove(center)
        candidates = sorted(active, key=lambda v: (-rem[v], v))[:k]
        if len(candidates) < k or rem[candidates[-1]] < 1:
            # Unreachable once the graphicality check has passed.
            raise NotGraphicalError(f"sequence {list(d.d)} is not graphical")
        for u in candidates:
            rem[u] -= 1
            edges.append((center, u))
        rem[center] = 0
    return build_graph(n, edges)


def one_factor_condition(g: Graph) -> bool:
    """Sufficient condition for a perfect matching.

    True iff the order is even and the sequence obtained by lowering every
    degree by one is still a (nonnegative) graphical sequence.  A True
    verdict guarantees a 1-factor exists; False says nothing either way.
    """
    if g.n % 2 != 0:
        return False
    deg = degrees(g)
    if any(x < 1 for x in deg):
        return False
    return is_graphical(DegreeSequence(x - 1 for x in deg))
