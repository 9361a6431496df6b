"""Zero-sum magic labelings.

An edge labeling into {1, .., h-1} is zero-sum h-magic when every vertex's
incident labels add to 0 mod h.  This module provides the matching-based
constructors for odd-regular graphs, the verifier, and an exhaustive
per-modulus membership search with an explicit node budget.

The search loop runs in a compiled kernel when the extension module built
from _oracle.pyx is available, and otherwise in the pure-Python twin
_oracle_py; set MAGICLAB_PURE_PYTHON=1 to force the fallback.
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass

from .errors import (
    LengthMismatchError,
    NotFiveRegularError,
    PreconditionViolatedError,
)
from .graph import Graph, degrees, is_regular
from .matching import perfect_matching

#: Default search-node budget for the membership search.
DEFAULT_BUDGET = 10**8

_MEMBER = 1
_BUDGET_EXCEEDED = 2


def _kernel_module(name: str | None = None):
    if name is None:
        return _DEFAULT_KERNEL
    if name == "python":
        from . import _oracle_py

        return _oracle_py
    if name == "cython":
        from . import _oracle

        return _oracle
    raise ValueError(f"unknown kernel {name!r}, expected 'python' or 'cython'")


def _select_default_kernel():
    if os.environ.get("MAGICLAB_PURE_PYTHON"):
        return _kernel_module("python"), "python"
    try:
        return _kernel_module("cython"), "cython"
    except ImportError:
        return _kernel_module("python"), "python"


_DEFAULT_KERNEL, _DEFAULT_KERNEL_NAME = _select_default_kernel()


def oracle_backend() -> str:
    """Name of the search kernel selected at import: 'cython' or 'python'."""
    return _DEFAULT_KERNEL_NAME


@dataclass(frozen=True)
class Labeling:
    """Modulus h >= 2 plus one label in 1..h-1 per edge index."""

    h: int
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.h < 2:
            raise ValueError(f"modulus must be at least 2, got {self.h}")
        for x in self.labels:
            if not 1 <= x <= self.h - 1:
                raise ValueError(f"label {x} outside 1..{self.h - 1}")


def vertex_sums(g: Graph, labeling: Labeling) -> tuple[int, ...]:
    """Sum of incident edge labels at each vertex, reduced mod h.

    Raises:
        LengthMismatchError: the labeling does not cover g's edges.
    """
    if len(labeling.labels) != g.m:
        raise LengthMismatchError(
            f"{len(labeling.labels)} labels for {g.m} edges"
        )
    sums = [0] * g.n
    for (u, v), x in zip(g.edges, labeling.labels):
        sums[u] += x
        sums[v] += x
    return tuple(s % labeling.h for s in sums)


def is_zero_sum(g: Graph, labeling: Labeling) -> bool:
    """True iff every vertex sum is 0 mod h and every label is nonzero mod h."""
    sums = vertex_sums(g, labeling)
    if any(x % labeling.h == 0 for x in labeling.labels):
        return False
    return all(s == 0 for s in sums)


def _factor_labeling(g: Graph, h: int) -> Labeling:
    factor = perfect_matching(g)
    labels = tuple(2 if i in factor.edge_indices else 1 for i in range(g.m))
    return Labeling(h=h, labels=labels)


def label_five_regular(g: Graph) -> Labeling:
    """Zero-sum 3-magic labeling of a 5-regular graph.

    The edges of a perfect matching get label 2 and every other edge gets
    label 1, so each vertex sees 2 + 4*1 = 6 = 0 (mod 3).  Every 5-regular
    simple graph has even order and admits such a matching, because
    lowering all its degrees to 4 leaves a graphical sequence.

    Raises:
        NotFiveRegularError: some vertex degree differs from 5.
        NoPerfectMatchingError: no 1-factor was found; cannot happen for a
            5-regular simple graph, so this guards against matching bugs.
    """
    if not is_regular(g, 5):
        raise NotFiveRegularError("graph is not 5-regular")
    return _factor_labeling(g, 3)


def label_odd_regular_via_factor(g: Graph, h: int) -> Labeling:
    """Zero-sum h-magic labeling of an odd-regular graph with h | r + 1.

    Same 1-factor construction generalized beyond the 5-regular, h = 3
    case: matching edges get 2, the rest get 1, so every vertex sums to
    2 + (r - 1) = r + 1 = 0 (mod h).  Needs h >= 3 so that label 2 stays
    nonzero mod h.  Unlike the 5-regular case, the perfect matching is a
    genuine precondition here; odd-regular graphs in general need not
    have one.

    Raises:
        PreconditionViolatedError: not regular, even degree, h < 3, or h
            does not divide r + 1 (the message names the clause).
        NoPerfectMatchingError: the graph has no 1-factor.
    """
    deg = degrees(g)
    r = deg[0] if deg else 0
    if any(d != r for d in deg):
        raise PreconditionViolatedError("graph is not regular")
    if r % 2 == 0:
        raise PreconditionViolatedError(f"degree {r} is even")
    if h < 3:
        raise PreconditionViolatedError(
            f"modulus {h} is below 3, label 2 would vanish"
        )
    if (r + 1) % h != 0:
        raise PreconditionViolatedError(f"{h} does not divide r + 1 = {r + 1}")
    return _factor_labeling(g, h)


def h2_membership(g: Graph) -> bool:
    """Analytic membership test at h = 2.

    The only nonzero label mod 2 is 1, so s(v) = deg(v) mod 2 for any
    admissible labeling: membership holds iff every degree is even.  Must
    agree with the exhaustive search at h = 2 on every graph.
    """
    return all(d % 2 == 0 for d in degrees(g))


@dataclass(frozen=True)
class NullSetReport:
    """Per-modulus membership verdicts over an inclusive range.

    member[h] is True, False, or None; None means the node budget ran out
    before modulus h was decided, which is never conflated with a False
    verdict.  Every True verdict carries its witness labeling, and nodes[h]
    records the search effort spent.
    """

    h_min: int
    h_max: int
    member: dict[int, bool | None]
    witness: dict[int, Labeling]
    nodes: dict[int, int]

    def members(self) -> list[int]:
        return [h for h in range(self.h_min, self.h_max + 1) if self.member[h]]

    def undecided(self) -> list[int]:
        return [
            h for h in range(self.h_min, self.h_max + 1) if self.member[h] is None
        ]


def _decision_order(g: Graph) -> list[int]:
    """Edge order for the exhaustive search.

    Repeatedly peel the vertex of lowest remaining degree (ties toward the
    lowest index) and emit its not-yet-emitted incident edges in index
    order, so each vertex's edges are decided contiguously as far as
    possible and closure pruning fires early.
    """
    rem = list(degrees(g))
    alive = [True] * g.n
    emitted = [False] * g.m
    order: list[int] = []
    for _ in range(g.n):
        v = min(
            (w for w in range(g.n) if alive[w]), key=lambda w: (rem[w], w)
        )
        alive[v] = False
        for ei in g.incident[v]:
            if not emitted[ei]:
                emitted[ei] = True
                order.append(ei)
                a, b = g.edges[ei]
                rem[a if b == v else b] -= 1
        rem[v] = 0
    return order


def _search_arrays(g: Graph, order: list[int]):
    eu = array("i", (g.edges[ei][0] for ei in order))
    ev = array("i", (g.edges[ei][1] for ei in order))
    last_pos = [-1] * g.n
    for pos, ei in enumerate(order):
        u, v = g.edges[ei]
        last_pos[u] = pos
        last_pos[v] = pos
    closes_u = array("b", (1 if last_pos[eu[p]] == p else 0 for p in range(g.m)))
    closes_v = array("b", (1 if last_pos[ev[p]] == p else 0 for p in range(g.m)))
    return eu, ev, closes_u, closes_v


def null_set_oracle(
    g: Graph,
    h_min: int,
    h_max: int,
    budget: int = DEFAULT_BUDGET,
    kernel: str | None = None,
) -> NullSetReport:
    """Decide zero-sum h-magic membership for each h in [h_min, h_max].

    Exhaustive backtracking over raw edge labels in {1, .., h-1} along a
    fixed vertex-elimination edge order; as soon as all edges at a vertex
    are decided, branches with a nonzero sum there are pruned.  Label
    values are tried ascending, so the witness returned for a member h is
    the first one in that fixed order and repeated runs agree exactly.

    Every label trial costs one node from the budget.  A modulus whose
    search exhausts the budget is reported as undecided (member None).
    The searches for distinct h are independent.

    `kernel` forces the 'cython' or 'python' search loop; None uses the
    backend selected at import.
    """
    if not 2 <= h_min <= h_max:
        raise ValueError(f"need 2 <= h_min <= h_max, got [{h_min}, {h_max}]")
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    backend = _kernel_module(kernel)
    order = _decision_order(g)
    eu, ev, closes_u, closes_v = _search_arrays(g, order)
    member: dict[int, bool | None] = {}
    witness: dict[int, Labeling] = {}
    nodes: dict[int, int] = {}
    for h in range(h_min, h_max + 1):
        if g.m == 0:
            # The empty labeling leaves every (isolated) vertex at sum 0.
            member[h] = True
            witness[h] = Labeling(h=h, labels=())
            nodes[h] = 0
            continue
        status, found, used = backend.search_labeling(
            h, budget, g.n, eu, ev, closes_u, closes_v
        )
        nodes[h] = used
        if status == _MEMBER:
            labels = [0] * g.m
            for pos, ei in enumerate(order):
                labels[ei] = found[pos]
            member[h] = True
            witness[h] = Labeling(h=h, labels=tuple(labels))
        elif status == _BUDGET_EXCEEDED:
            member[h] = None
        else:
            member[h] = False
    return NullSetReport(
        h_min=h_min, h_max=h_max, member=member, witness=witness, nodes=nodes
    )
