"""Cotrees and the union/join recurrences for domination on cographs."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .graph import Graph, RdsResult

__all__ = [
    "NotCographError",
    "CotreeNode",
    "CotreeEval",
    "build_cotree",
    "evaluate_cotree",
    "cograph_gamma",
    "solve_cograph",
]

log = logging.getLogger(__name__)


class NotCographError(ValueError):
    pass


@dataclass(frozen=True)
class CotreeNode:
    """``kind`` is ``"leaf"``, ``"union"`` or ``"join"``; leaves carry ``vertex``."""

    kind: str
    vertex: int | None = None
    children: tuple["CotreeNode", ...] = ()

    def leaves(self) -> list[int]:
        out, stack = [], [self]
        while stack:
            node = stack.pop()
            if node.kind == "leaf":
                out.append(node.vertex)
            else:
                stack.extend(node.children)
        return sorted(out)

    def __str__(self) -> str:
        if self.kind == "leaf":
            return f"Leaf({self.vertex})"
        name = "Union" if self.kind == "union" else "Join"
        return f"{name}({', '.join(map(str, self.children))})"


def _components(g: Graph, vertices: list[int], complement: bool) -> list[list[int]]:
    remaining = set(vertices)
    comps = []
    while remaining:
        start = min(remaining)
        remaining.discard(start)
        comp, stack = [start], [start]
        while stack:
            v = stack.pop()
            nbrs = g.neighbor_set(v)
            reached = remaining - nbrs if complement else remaining & nbrs
            remaining -= reached
            comp.extend(reached)
            stack.extend(reached)
        comps.append(sorted(comp))
    return comps


def build_cotree(g: Graph) -> CotreeNode:
    """Canonical multiway cotree by alternating component/co-component splits.

    Children are ordered by their smallest vertex. Raises
    :class:`NotCographError` when some induced subgraph on two or more
    vertices is connected and has a connected complement.
    """
    if g.n == 0:
        raise NotCographError("empty graph has no cotree")
    # iterative post-order: frames hold (vertices, child_lists, kind)
    built: dict[tuple[int, ...], CotreeNode] = {}
    stack: list[tuple[tuple[int, ...], bool]] = [(tuple(range(g.n)), False)]
    plan: dict[tuple[int, ...], tuple[str, list[tuple[int, ...]]]] = {}
    while stack:
        verts, expanded = stack.pop()
        if len(verts) == 1:
            built[verts] = CotreeNode("leaf", vertex=verts[0])
            continue
        if expanded:
            kind, parts = plan[verts]
            built[verts] = CotreeNode(kind, children=tuple(built[p] for p in parts))
            continue
        parts = _components(g, list(verts), complement=False)
        kind = "union"
        if len(parts) == 1:
            parts = _components(g, list(verts), complement=True)
            kind = "join"
            if len(parts) == 1:
                raise NotCographError(
                    f"vertices {[v + 1 for v in verts]} induce a connected subgraph "
                    "with connected complement (graph contains an induced P4)"
                )
        keys = [tuple(p) for p in parts]
        plan[verts] = (kind, keys)
        stack.append((verts, True))
        stack.extend((k, False) for k in keys)
    return built[tuple(range(g.n))]


@dataclass
class CotreeEval:
    """Per-subtree quantities needed by the recurrences."""

    size: int
    has_edge: bool
    isolated: frozenset[int]
    gamma: int
    gamma_set: frozenset[int]
    gamma_r: int
    gamma_r_set: frozenset[int]
    any_vertex: int = field(default=0)

    @property
    def isolated_count(self) -> int:
        return len(self.isolated)


def _leaf(v: int) -> CotreeEval:
    s = frozenset((v,))
    return CotreeEval(1, False, s, 1, s, 1, s, v)


def _union(a: CotreeEval, b: CotreeEval) -> CotreeEval:
    return CotreeEval(
        a.size + b.size,
        a.has_edge or b.has_edge,
        a.isolated | b.isolated,
        a.gamma + b.gamma,
        a.gamma_set | b.gamma_set,
        a.gamma_r + b.gamma_r,
        a.gamma_r_set | b.gamma_r_set,
        min(a.any_vertex, b.any_vertex),
    )


def _join_gamma(a: CotreeEval, b: CotreeEval) -> tuple[int, frozenset[int]]:
    if a.gamma == 1:
        return 1, a.gamma_set
    if b.gamma == 1:
        return 1, b.gamma_set
    return 2, frozenset((a.any_vertex, b.any_vertex))


def _single_side(v: int, big: CotreeEval) -> tuple[int, frozenset[int]]:
    """Join of the lone vertex ``v`` with a graph of two or more vertices."""
    with_v = 1 + big.isolated_count
    raw = min(with_v, big.gamma)
    # a dominating set of an edgeless side is the whole side, leaving v without
    # a neighbour outside D, so that branch is only admissible with an edge
    if big.has_edge and big.gamma < with_v:
        value, witness = big.gamma, big.gamma_set
    else:
        value, witness = with_v, big.isolated | {v}
    if value != raw:
        log.debug("guarded join value %d differs from unguarded formula %d", value, raw)
    return value, witness


def _join(a: CotreeEval, b: CotreeEval) -> CotreeEval:
    gamma, gamma_set = _join_gamma(a, b)
    if a.size == 1 and b.size == 1:
        gamma_r, gamma_r_set = 2, frozenset((a.any_vertex, b.any_vertex))
    elif a.size == 1:
        gamma_r, gamma_r_set = _single_side(a.any_vertex, b)
    elif b.size == 1:
        gamma_r, gamma_r_set = _single_side(b.any_vertex, a)
    else:
        gamma_r, gamma_r_set = gamma, gamma_set
    return CotreeEval(
        a.size + b.size,
        True,
        frozenset(),
        gamma,
        gamma_set,
        gamma_r,
        gamma_r_set,
        min(a.any_vertex, b.any_vertex),
    )


def evaluate_cotree(t: CotreeNode) -> CotreeEval:
    """Bottom-up evaluation; multiway nodes fold left-associatively."""
    results: dict[int, CotreeEval] = {}
    stack: list[tuple[CotreeNode, bool]] = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if node.kind == "leaf":
            results[id(node)] = _leaf(node.vertex)
            continue
        if not expanded:
            stack.append((node, True))
            stack.extend((c, False) for c in node.children)
            continue
        combine = _union if node.kind == "union" else _join
        acc = results.pop(id(node.children[0]))
        for child in node.children[1:]:
            acc = combine(acc, results.pop(id(child)))
        results[id(node)] = acc
    return results[id(t)]


def cograph_gamma(t: CotreeNode) -> tuple[int, frozenset[int]]:
    """Domination number and a minimum dominating set from a cotree."""
    ev = evaluate_cotree(t)
    return ev.gamma, ev.gamma_set


def solve_cograph(g: Graph) -> RdsResult:
    """Minimum restrained dominating set of a cograph, connected or not."""
    ev = evaluate_cotree(build_cotree(g))
    return RdsResult(ev.gamma_r, ev.gamma_r_set, "cograph")
