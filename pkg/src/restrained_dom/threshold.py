"""Closed-form minimum restrained dominating sets of threshold graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, RdsResult, is_connected

__all__ = ["NotThresholdError", "ThresholdOrdering", "recognize_threshold", "solve_threshold"]


class NotThresholdError(ValueError):
    pass


@dataclass(frozen=True)
class ThresholdOrdering:
    """Split partition with nested neighbourhoods.

    ``clique_order`` grows closed neighbourhoods, ``independent_order``
    shrinks open ones.
    """

    clique_order: tuple[int, ...]
    independent_order: tuple[int, ...]


def recognize_threshold(g: Graph) -> ThresholdOrdering:
    """Peel isolated or universal vertices until none remain.

    Isolated vertices are peeled before universal ones (lowest id first), so
    the last survivor always lands on the independent side. The graph is
    threshold iff the peel finishes.
    """
    if g.n < 2 or not is_connected(g):
        raise NotThresholdError("expected a connected graph with at least two vertices")
    alive = set(range(g.n))
    deg = [g.degree(v) for v in range(g.n)]
    clique, indep = [], []
    while alive:
        size = len(alive)
        isolated = [v for v in alive if deg[v] == 0]
        if isolated:
            v = min(isolated)
            indep.append(v)
        else:
            universal = [v for v in alive if deg[v] == size - 1]
            if not universal:
                raise NotThresholdError("no isolated or universal vertex left; graph is not threshold")
            v = min(universal)
            clique.append(v)
        alive.remove(v)
        for u in g.neighbors(v):
            if u in alive:
                deg[u] -= 1
    clique.sort(key=lambda v: (g.degree(v), v))
    indep.sort(key=lambda v: (-g.degree(v), v))
    return ThresholdOrdering(tuple(clique), tuple(indep))


def solve_threshold(g: Graph) -> RdsResult:
    """Minimum restrained dominating set of a connected threshold graph, ``n >= 3``."""
    if g.n < 3:
        raise ValueError("threshold solver needs at least three vertices")
    order = recognize_threshold(g)
    xs = order.clique_order
    if len(xs) == 1:
        return RdsResult(g.n, frozenset(range(g.n)), "threshold")
    top, below = xs[-1], xs[-2]
    if g.closed_neighbor_set(top) == g.closed_neighbor_set(below):
        return RdsResult(1, frozenset((top,)), "threshold")
    indep = set(order.independent_order)
    private = (g.neighbor_set(top) - g.neighbor_set(below)) & indep
    witness = frozenset({top} | private)
    return RdsResult(len(witness), witness, "threshold")
