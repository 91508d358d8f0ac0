"""Minimum restrained dominating sets of connected chain graphs.

The answer is always ``t``, ``t + 1`` or ``t + 2`` where ``t`` counts the
pendant vertices. Canonical candidate sets are tried in that order and the
first one passing the certificate check is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, RdsResult, is_connected, is_restrained_dominating_set, pendant_vertices

__all__ = ["NotChainError", "ChainOrdering", "ChainCase", "recognize_chain", "classify_chain", "solve_chain"]


class NotChainError(ValueError):
    pass


@dataclass(frozen=True)
class ChainOrdering:
    x_order: tuple[int, ...]
    y_order: tuple[int, ...]

    @property
    def x_top(self) -> int:
        return self.x_order[-1]

    @property
    def y_top(self) -> int:
        return self.y_order[0]


@dataclass(frozen=True)
class ChainCase:
    label: str  # "bistar", "star", "pruned_star" or "general"
    t: int
    pruned_center: int | None = None


def recognize_chain(g: Graph) -> ChainOrdering:
    """Bipartition by 2-colouring, then verify both neighbourhood chains."""
    if g.n < 2 or not is_connected(g):
        raise NotChainError("expected a connected graph with at least two vertices")
    color = [-1] * g.n
    color[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if color[u] == -1:
                color[u] = 1 - color[v]
                stack.append(u)
            elif color[u] == color[v]:
                raise NotChainError("graph has an odd cycle")
    xs = sorted((v for v in range(g.n) if color[v] == 0), key=lambda v: (g.degree(v), v))
    ys = sorted((v for v in range(g.n) if color[v] == 1), key=lambda v: (-g.degree(v), v))
    for a, b in zip(xs, xs[1:]):
        if not g.neighbor_set(a) <= g.neighbor_set(b):
            raise NotChainError(f"neighbourhoods of {a + 1} and {b + 1} are not nested")
    for a, b in zip(ys, ys[1:]):
        if not g.neighbor_set(a) >= g.neighbor_set(b):
            raise NotChainError(f"neighbourhoods of {a + 1} and {b + 1} are not nested")
    return ChainOrdering(tuple(xs), tuple(ys))


def _star_centers(g: Graph, vertices: set[int]) -> list[int]:
    """Centres of ``g[vertices]`` if it is a star ``K_{1,s}`` (or a single vertex)."""
    if len(vertices) == 1:
        return sorted(vertices)
    k = len(vertices)
    edges = sum(len(g.neighbor_set(v) & vertices) for v in vertices) // 2
    if edges != k - 1:
        return []
    return [v for v in sorted(vertices) if len(g.neighbor_set(v) & vertices) == k - 1]


def _candidates(g: Graph, order: ChainOrdering) -> Iterator[tuple[ChainCase, frozenset[int]]]:
    pend = pendant_vertices(g)
    t = len(pend)
    if g.n == 2:
        yield ChainCase("bistar", t), frozenset(range(2))
        return
    yield ChainCase("bistar", t), pend
    attached = {u for v in pend for u in g.neighbors(v)}
    for c in _star_centers(g, set(range(g.n))):
        yield ChainCase("star", t), pend | {c}
    rest = set(range(g.n)) - pend - attached
    if rest:
        for c in _star_centers(g, rest):
            yield ChainCase("pruned_star", t, c), pend | {c}
    yield ChainCase("general", t), pend | {order.x_top, order.y_top}


def classify_chain(g: Graph) -> tuple[ChainCase, frozenset[int]]:
    order = recognize_chain(g)
    for case, witness in _candidates(g, order):
        if is_restrained_dominating_set(g, witness):
            return case, witness
    raise AssertionError("no canonical witness validated")  # unreachable for chain graphs


def solve_chain(g: Graph) -> RdsResult:
    _, witness = classify_chain(g)
    return RdsResult(len(witness), witness, "chain")
