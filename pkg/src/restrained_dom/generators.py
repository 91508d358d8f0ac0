"""Random instances of the graph classes handled by the solvers.

All generators take a :class:`random.Random` (or a seed) and shuffle vertex
labels so that solvers never see a convenient numbering.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, is_connected

__all__ = [
    "random_block_graph",
    "random_threshold_graph",
    "random_cograph",
    "random_chain_graph",
    "random_connected_graph",
    "shuffled",
]


def _rng(rng: random.Random | int | None) -> random.Random:
    return rng if isinstance(rng, random.Random) else random.Random(rng)


def shuffled(g: Graph, rng: random.Random | int | None = None) -> Graph:
    rng = _rng(rng)
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def random_block_graph(n: int, rng: random.Random | int | None = None, max_clique: int = 4) -> Graph:
    """Connected block graph on ``n`` vertices, grown by gluing cliques at vertices."""
    rng = _rng(rng)
    if n < 1:
        raise ValueError("n must be positive")
    first = min(n, rng.randint(2, max_clique)) if n > 1 else 1
    edges = list(combinations(range(first), 2))
    size = first
    while size < n:
        anchor = rng.randrange(size)
        new = min(n - size, rng.randint(1, max_clique - 1))
        members = [anchor] + list(range(size, size + new))
        edges.extend(combinations(members, 2))
        size += new
    return shuffled(Graph.from_edges(n, edges), rng)


def random_threshold_graph(n: int, rng: random.Random | int | None = None, connected: bool = True) -> Graph:
    """Threshold graph built by adding isolated or dominating vertices."""
    rng = _rng(rng)
    edges = []
    for v in range(1, n):
        dominating = rng.random() < 0.5 or (connected and v == n - 1)
        if dominating:
            edges.extend((u, v) for u in range(v))
    return shuffled(Graph.from_edges(n, edges), rng)


def _cotree_edges(vertices: list[int], rng: random.Random, join: bool, edgeless_bias: float) -> list[tuple[int, int]]:
    if len(vertices) == 1:
        return []
    if not join and rng.random() < edgeless_bias:
        return []
    k = rng.randint(2, min(4, len(vertices)))
    cuts = sorted(rng.sample(range(1, len(vertices)), k - 1))
    parts = [vertices[a:b] for a, b in zip([0] + cuts, cuts + [len(vertices)])]
    edges = []
    for part in parts:
        edges.extend(_cotree_edges(part, rng, not join, edgeless_bias))
    if join:
        for p, q in combinations(parts, 2):
            edges.extend((u, v) for u in p for v in q)
    return edges


def random_cograph(
    n: int,
    rng: random.Random | int | None = None,
    connected: bool | None = None,
    edgeless_bias: float = 0.25,
) -> Graph:
    """Random cograph from a random cotree.

    ``connected=None`` picks the root operation at random. ``edgeless_bias``
    is the chance that a union node collapses to an edgeless graph, which
    produces joins with an edgeless side such as stars.
    """
    rng = _rng(rng)
    join = rng.random() < 0.5 if connected is None else connected
    return shuffled(Graph.from_edges(n, _cotree_edges(list(range(n)), rng, join, edgeless_bias)), rng)


def random_chain_graph(p: int, q: int, rng: random.Random | int | None = None) -> Graph:
    """Connected chain graph with sides of size ``p`` and ``q`` (both >= 1)."""
    rng = _rng(rng)
    if p < 1 or q < 1:
        raise ValueError("both sides need at least one vertex")
    degrees = sorted(rng.randint(1, q) for _ in range(p))
    degrees[-1] = q
    edges = [(i, p + j) for i, d in enumerate(degrees) for j in range(d)]
    return shuffled(Graph.from_edges(p + q, edges), rng)


def random_connected_graph(n: int, density: float, rng: random.Random | int | None = None) -> Graph:
    """G(n, density) plus a random spanning tree, so the result is connected."""
    rng = _rng(rng)
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if rng.random() < density:
            edges.add((u, v))
    g = Graph.from_edges(n, edges)
    assert is_connected(g)
    return g
