"""Minimum restrained domination on block graphs by DP over the refined cut-tree.

The refined cut-tree alternates cut-vertex nodes and block nodes. A block
node remembers both the whole clique ``full_block`` and ``b_set``, the
clique's vertices that are not cut vertices. The tree is rooted at a cut
vertex. Each node gets a small vector of parameters. Each parameter is the
size of a smallest vertex set meeting one variant of the domination
constraints on the subgraph hanging below the node:

cut vertex ``r`` (subgraph ``G_r`` includes ``r``)
    A  ``r`` in D, D restrained-dominates ``G_r``
    B  ``r`` not in D, D restrained-dominates ``G_r``
    C  ``r`` not in D and undominated, but ``r`` has a neighbour outside D
    D  ``r`` not in D, neither dominated nor restrained
    E  ``r`` not in D, dominated but not necessarily restrained

block ``B`` with parent cut vertex ``c`` (subgraph excludes ``c``;
"block level" means the clique's vertices other than ``c``)
    A  ``c`` in D: only deeper vertices need domination, restraint everywhere
    B  ``c`` not in D: everything dominated from inside, block level free of restraint
    F  as B, plus some block-level vertex outside D
    H  as B, plus some block-level vertex in D
    I  as B, plus both of the above
    C, D, E  (empty ``b_set`` only) the same as F, H, I

Infinite values use ``math.inf``. The single-index and pair minimisations
run in linear time by carrying ``(infinite_terms, finite_sum)`` pairs, which
form an ordered group under lexicographic order.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, RdsResult, connected_components, is_connected

__all__ = [
    "INF",
    "NotBlockGraphError",
    "SingleBlockError",
    "CutTreeNode",
    "RefinedCutTree",
    "DpValues",
    "biconnected_components",
    "is_block_graph",
    "build_refined_cut_tree",
    "dp_leaf_block",
    "dp_cut_vertex",
    "dp_block_vertex",
    "evaluate_tree",
    "reconstruct",
    "solve_block_graph",
]

INF = math.inf

CUT_PARAMS = ("A", "B", "C", "D", "E")
BLOCK_PARAMS = ("A", "B", "F", "H", "I")
EMPTY_BLOCK_PARAMS = ("A", "B", "C", "D", "E", "F", "H", "I")


class NotBlockGraphError(ValueError):
    pass


class SingleBlockError(ValueError):
    """The graph is one clique; its refined cut-tree would have no cut vertex."""


# -- decomposition ------------------------------------------------------------


def biconnected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the blocks of ``g``; isolated vertices form singleton blocks.

    Iterative Hopcroft-Tarjan with an edge stack, so deep graphs do not hit
    the recursion limit.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[frozenset[int]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        if not g.adjacency[root]:
            disc[root] = timer
            timer += 1
            blocks.append(frozenset((root,)))
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    edge_stack.append((v, u))
                    stack.append((u, v, iter(g.adjacency[u])))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.add(a)
                    comp.add(b)
                    if (a, b) == (parent, v):
                        break
                blocks.append(frozenset(comp))
    return blocks


def _block_structure(g: Graph) -> tuple[list[frozenset[int]], list[int]]:
    """Blocks (sorted by member tuple) and cut vertices, or raise if not a block graph."""
    blocks = sorted(biconnected_components(g), key=lambda b: sorted(b))
    for b in blocks:
        k = len(b)
        inner = sum(1 for v in b for u in g.adjacency[v] if u in b) // 2
        if inner != k * (k - 1) // 2:
            raise NotBlockGraphError(f"block {sorted(b)} is not a clique")
    count = [0] * g.n
    for b in blocks:
        for v in b:
            count[v] += 1
    return blocks, [v for v in range(g.n) if count[v] >= 2]


def is_block_graph(g: Graph) -> bool:
    """True iff every block of the connected graph ``g`` is a clique."""
    if not is_connected(g):
        raise ValueError("is_block_graph expects a connected graph")
    try:
        _block_structure(g)
    except NotBlockGraphError:
        return False
    return True


@dataclass
class CutTreeNode:
    kind: str  # "cut" or "block"
    vertex: int | None = None
    block_id: int | None = None
    b_set: frozenset[int] = frozenset()
    full_block: frozenset[int] = frozenset()
    parent: int | None = None
    children: tuple[int, ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass
class RefinedCutTree:
    nodes: list[CutTreeNode]
    root: int
    bfs_order: list[int] = field(default_factory=list)

    def cut_node(self, vertex: int) -> int:
        for i, node in enumerate(self.nodes):
            if node.kind == "cut" and node.vertex == vertex:
                return i
        raise KeyError(vertex)

    def block_node(self, full_block: Sequence[int]) -> int:
        target = frozenset(full_block)
        for i, node in enumerate(self.nodes):
            if node.kind == "block" and node.full_block == target:
                return i
        raise KeyError(tuple(sorted(target)))


def build_refined_cut_tree(g: Graph, root: int | None = None) -> RefinedCutTree:
    """Refined cut-tree of a connected block graph with at least two blocks.

    ``root`` must be a cut vertex; by default the lowest-id one is used.
    """
    if g.n == 0 or not is_connected(g):
        raise NotBlockGraphError("graph must be connected and non-empty")
    blocks, cuts = _block_structure(g)
    if len(blocks) < 2:
        raise SingleBlockError("graph consists of a single block")
    cut_set = set(cuts)
    if root is None:
        root = cuts[0]
    elif root not in cut_set:
        raise ValueError(f"root {root} is not a cut vertex")

    blocks_of: dict[int, list[int]] = {v: [] for v in cuts}
    for bid, b in enumerate(blocks):
        for v in b:
            if v in cut_set:
                blocks_of[v].append(bid)

    nodes = [CutTreeNode("cut", vertex=root)]
    order = [0]
    seen_blocks: set[int] = set()
    queue = deque([0])
    while queue:
        idx = queue.popleft()
        node = nodes[idx]
        kids = []
        if node.kind == "cut":
            for bid in blocks_of[node.vertex]:
                if bid in seen_blocks:
                    continue
                seen_blocks.add(bid)
                b = blocks[bid]
                kids.append(len(nodes))
                nodes.append(
                    CutTreeNode(
                        "block",
                        block_id=bid,
                        b_set=frozenset(v for v in b if v not in cut_set),
                        full_block=b,
                        parent=idx,
                    )
                )
        else:
            parent_vertex = nodes[node.parent].vertex
            for v in sorted(node.full_block & cut_set):
                if v == parent_vertex:
                    continue
                kids.append(len(nodes))
                nodes.append(CutTreeNode("cut", vertex=v, parent=idx))
        node.children = tuple(kids)
        order.extend(kids)
        queue.extend(kids)
    return RefinedCutTree(nodes, 0, order)


# -- linear-time minimisations --------------------------------------------------


def _key(x: float) -> tuple[int, float]:
    return (1, 0) if x == INF else (0, x)


def _value(k: tuple[int, float]) -> float:
    return INF if k[0] > 0 else k[1]


def _diffs(special: Sequence[float], base: Sequence[float]) -> list[tuple[int, float]]:
    out = []
    for s, b in zip(special, base):
        ks, kb = _key(s), _key(b)
        out.append((ks[0] - kb[0], ks[1] - kb[1]))
    return out


def _base_total(base: Sequence[float]) -> tuple[int, float]:
    c = f = 0
    for b in base:
        kb = _key(b)
        c += kb[0]
        f += kb[1]
    return c, f


def _best_single(special: Sequence[float], base: Sequence[float]) -> tuple[float, int | None]:
    """``min_i special[i] + sum_{j != i} base[j]`` and the minimising ``i``."""
    if not special:
        return INF, None
    diffs = _diffs(special, base)
    i = min(range(len(diffs)), key=lambda t: diffs[t])
    c, f = _base_total(base)
    val = _value((c + diffs[i][0], f + diffs[i][1]))
    return (val, i) if val != INF else (INF, None)


def _two_best(diffs: list[tuple[int, float]]) -> list[int]:
    return sorted(range(len(diffs)), key=lambda t: (diffs[t], t))[:2]


def _best_pair(
    first: Sequence[float], second: Sequence[float], base: Sequence[float]
) -> tuple[float, tuple[int, int] | None]:
    """``min_{i != j} first[i] + second[j] + sum_{m not in {i, j}} base[m]``."""
    if len(first) < 2:
        return INF, None
    da, db = _diffs(first, base), _diffs(second, base)
    ia, ib = _two_best(da), _two_best(db)
    candidates = [(i, j) for i in ia for j in ib if i != j]

    def pair_key(p: tuple[int, int]):
        i, j = p
        return (da[i][0] + db[j][0], da[i][1] + db[j][1]), i, j

    i, j = min(candidates, key=pair_key)
    c, f = _base_total(base)
    val = _value((c + da[i][0] + db[j][0], f + da[i][1] + db[j][1]))
    return (val, (i, j)) if val != INF else (INF, None)


# -- DP values ----------------------------------------------------------------

# A choice is (local_vertices, per-child parameter letters) or None when infinite.
Choice = tuple[tuple[int, ...], tuple[str, ...]]


@dataclass
class DpValues:
    kind: str
    values: dict[str, float]
    choices: dict[str, Choice | None]
    empty_block: bool = False

    def __getitem__(self, param: str) -> float:
        return self.values[param]

    def as_tuple(self, params: Sequence[str]) -> tuple[float, ...]:
        return tuple(self.values[p] for p in params)


def _set(values, choices, param, val, choice) -> None:
    values[param] = val
    choices[param] = choice if val != INF else None


def dp_leaf_block(node: CutTreeNode) -> DpValues:
    if node.kind != "block" or not node.is_leaf:
        raise ValueError("dp_leaf_block needs a leaf block node")
    bs = sorted(node.b_set)
    if not bs:
        raise ValueError("a leaf block cannot have an empty b_set")
    one = (bs[0],)
    single = len(bs) == 1
    values: dict[str, float] = {}
    choices: dict[str, Choice | None] = {}
    _set(values, choices, "A", 1 if single else 0, (one if single else (), ()))
    _set(values, choices, "B", 1, (one, ()))
    _set(values, choices, "F", INF if single else 1, (one, ()))
    _set(values, choices, "H", 1, (one, ()))
    _set(values, choices, "I", INF if single else 1, (one, ()))
    return DpValues("block", values, choices)


def _picks(k: int, default: str | Sequence[str], overrides: dict[int, str] = {}) -> tuple[str, ...]:
    base = [default] * k if isinstance(default, str) else list(default)
    for i, p in overrides.items():
        base[i] = p
    return tuple(base)


def dp_cut_vertex(node: CutTreeNode, child_values: Sequence[DpValues]) -> DpValues:
    if node.kind != "cut":
        raise ValueError("dp_cut_vertex needs a cut-vertex node")
    k = len(child_values)
    if k == 0:
        raise ValueError("cut vertex without block children")
    col = {p: [cv.values.get(p, INF) for cv in child_values] for p in "ABCDEFHI"}
    r = node.vertex
    values: dict[str, float] = {}
    choices: dict[str, Choice | None] = {}

    a = 1 + sum(col["A"])
    _set(values, choices, "A", a, ((r,), _picks(k, "A")))

    phi, i = _best_single(col["I"], col["B"])
    psi, ij = _best_pair(col["F"], col["H"], col["B"])
    if phi <= psi:
        _set(values, choices, "B", phi, ((), _picks(k, "B", {i: "I"})) if i is not None else None)
    else:
        _set(values, choices, "B", psi, ((), _picks(k, "B", {ij[0]: "F", ij[1]: "H"})))

    c, i = _best_single(col["F"], col["B"])
    _set(values, choices, "C", c, ((), _picks(k, "B", {i: "F"})) if i is not None else None)

    _set(values, choices, "D", sum(col["B"]), ((), _picks(k, "B")))

    if not all(cv.empty_block for cv in child_values):
        _set(values, choices, "E", sum(col["B"]), ((), _picks(k, "B")))
    else:
        e, i = _best_single(col["D"], col["B"])
        _set(values, choices, "E", e, ((), _picks(k, "B", {i: "D"})) if i is not None else None)
    return DpValues("cut", values, choices)


def dp_block_vertex(node: CutTreeNode, child_values: Sequence[DpValues]) -> DpValues:
    if node.kind != "block":
        raise ValueError("dp_block_vertex needs a block node")
    p = len(child_values)
    if p == 0:
        raise ValueError("leaf block: use dp_leaf_block")
    bs = sorted(node.b_set)
    s = len(bs)
    col = {q: [cv.values[q] for cv in child_values] for q in CUT_PARAMS}
    ad = [min(a, d) for a, d in zip(col["A"], col["D"])]
    ad_pick = ["A" if a <= d else "D" for a, d in zip(col["A"], col["D"])]
    values: dict[str, float] = {}
    choices: dict[str, Choice | None] = {}

    # parameter A
    if s >= 2:
        _set(values, choices, "A", sum(ad), ((), tuple(ad_pick)))
    elif s == 1:
        d1, i = _best_single(col["D"], ad)
        d2 = 1 + sum(col["A"])
        if d1 <= d2:
            _set(values, choices, "A", d1, ((), _picks(p, ad_pick, {i: "D"})) if i is not None else None)
        else:
            _set(values, choices, "A", d2, ((bs[0],), _picks(p, "A")))
    else:
        d1 = sum(col["A"])
        d2, i = _best_single(col["C"], col["A"])
        d3, ij = _best_pair(col["D"], col["D"], ad)
        best = min(d1, d2, d3)
        if d1 == best:
            _set(values, choices, "A", d1, ((), _picks(p, "A")))
        elif d2 == best:
            _set(values, choices, "A", d2, ((), _picks(p, "A", {i: "C"})))
        else:
            _set(values, choices, "A", d3, ((), _picks(p, ad_pick, {ij[0]: "D", ij[1]: "D"})))

    # parameter B; option (ii) is shared by both cases
    d2, i = _best_single(col["A"], ad)
    opt2 = ((), _picks(p, ad_pick, {i: "A"})) if i is not None else None
    if s >= 1:
        d1 = 1 + sum(ad)
        opt1 = ((bs[0],), tuple(ad_pick))
    else:
        d1 = sum(col["E"])
        opt1 = ((), _picks(p, "E"))
    if d1 <= d2:
        _set(values, choices, "B", d1, opt1)
    else:
        _set(values, choices, "B", d2, opt2)

    if s >= 1:
        for q in ("F", "H", "I"):
            values[q] = values["B"]
            choices[q] = choices["B"]
        return DpValues("block", values, choices)

    # empty b_set: E, D, C, then F = C, H = D, I = E
    e, ij = _best_pair(col["A"], col["D"], ad)
    _set(values, choices, "E", e, ((), _picks(p, ad_pick, {ij[0]: "A", ij[1]: "D"})) if ij else None)
    _set(values, choices, "D", d2, opt2)
    c1 = sum(col["E"])
    if c1 <= e:
        _set(values, choices, "C", c1, ((), _picks(p, "E")))
    else:
        _set(values, choices, "C", e, choices["E"])
    for q, src in (("F", "C"), ("H", "D"), ("I", "E")):
        values[q] = values[src]
        choices[q] = choices[src]
    return DpValues("block", values, choices, empty_block=True)


def evaluate_tree(tree: RefinedCutTree) -> list[DpValues]:
    """Bottom-up pass in reverse BFS order; returns values indexed by node id."""
    out: list[DpValues | None] = [None] * len(tree.nodes)
    for idx in reversed(tree.bfs_order):
        node = tree.nodes[idx]
        kids = [out[c] for c in node.children]
        if node.kind == "cut":
            out[idx] = dp_cut_vertex(node, kids)
        elif node.is_leaf:
            out[idx] = dp_leaf_block(node)
        else:
            out[idx] = dp_block_vertex(node, kids)
    return out  # type: ignore[return-value]


def reconstruct(tree: RefinedCutTree, values: Sequence[DpValues], param: str) -> frozenset[int]:
    """Follow stored choices from the root to recover a witness set."""
    chosen: set[int] = set()
    stack = [(tree.root, param)]
    while stack:
        idx, q = stack.pop()
        choice = values[idx].choices.get(q)
        if choice is None:
            raise ValueError(f"parameter {q} is infinite at node {idx}")
        local, picks = choice
        chosen.update(local)
        stack.extend(zip(tree.nodes[idx].children, picks))
    return frozenset(chosen)


def solve_block_graph(g: Graph, root: int | None = None) -> RdsResult:
    """Minimum restrained dominating set of a connected block graph."""
    if g.n <= 2:
        if g.n == 0 or not is_connected(g):
            raise NotBlockGraphError("graph must be connected and non-empty")
        return RdsResult(g.n, frozenset(range(g.n)), "block_dp")
    if len(connected_components(g)) != 1:
        raise NotBlockGraphError("graph must be connected")
    try:
        tree = build_refined_cut_tree(g, root)
    except SingleBlockError:
        return RdsResult(1, frozenset((0,)), "block_dp")
    values = evaluate_tree(tree)
    top = values[tree.root]
    param = "A" if top["A"] <= top["B"] else "B"
    witness = reconstruct(tree, values, param)
    return RdsResult(int(top[param]), witness, "block_dp")
