"""Hardness constructions: exact cover by 3-sets and path-padded (GP) graphs.

Vertex numbering is fixed so generated files are byte-stable.

* X3C graph: elements ``x_1..x_3q``, then sets ``c_1..c_m``, then
  ``z_1..z_q``, ``w_1..w_q`` and finally the hub ``r``. In that order the
  vertices form a doubly perfect elimination ordering.
* GP graph: the vertices of ``H`` first, then the ``x``, ``y`` and ``z``
  blocks of the appended paths ``v_i - x_i - y_i - z_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, RdsResult, is_dominating_set, verify_dpeo
from .oracle import OracleLimit, brute_force_gamma_r

__all__ = [
    "X3cInstance",
    "ReductionGraph",
    "GpGraph",
    "parse_x3c",
    "format_x3c",
    "gen_x3c_graph",
    "exact_cover_exists",
    "verify_x3c_equivalence",
    "gen_gp_graph",
    "gp_canonical_rds",
    "dom_set_h_to_gp",
    "dom_set_gp_to_h",
]

MAX_COVER_SETS = 25


@dataclass(frozen=True)
class X3cInstance:
    """Universe ``{1..3q}`` and a collection of 3-element subsets (1-based)."""

    q: int
    triples: tuple[frozenset[int], ...]

    def __init__(self, q: int, triples: Iterable[Iterable[int]]):
        ts = []
        for t in triples:
            items = list(t)
            s = frozenset(items)
            if len(items) != 3 or len(s) != 3:
                raise ValueError(f"triple {items} does not have three distinct elements")
            if not all(1 <= e <= 3 * q for e in s):
                raise ValueError(f"triple {sorted(s)} leaves the universe 1..{3 * q}")
            ts.append(s)
        if q < 1 or not ts:
            raise ValueError("need q >= 1 and at least one triple")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "triples", tuple(ts))

    @property
    def m(self) -> int:
        return len(self.triples)

    @property
    def universe(self) -> range:
        return range(1, 3 * self.q + 1)


def parse_x3c(text: str) -> X3cInstance:
    """First line ``q m``, then ``m`` lines of three element ids."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise ValueError("first line must be 'q m'")
    q, m = map(int, lines[0])
    rows = lines[1:]
    if len(rows) != m:
        raise ValueError(f"expected {m} triples, found {len(rows)}")
    return X3cInstance(q, [tuple(map(int, r)) for r in rows])


def format_x3c(inst: X3cInstance) -> str:
    rows = [f"{inst.q} {inst.m}"] + [" ".join(map(str, sorted(t))) for t in inst.triples]
    return "\n".join(rows) + "\n"


@dataclass(frozen=True)
class ReductionGraph:
    graph: Graph
    roles: tuple[str, ...]
    k: int
    dpeo: tuple[int, ...]

    def role_map(self) -> dict[str, str]:
        """1-based vertex id -> role label, as written next to generated files."""
        return {str(v + 1): r for v, r in enumerate(self.roles)}


def gen_x3c_graph(inst: X3cInstance) -> ReductionGraph:
    q, m = inst.q, inst.m
    nx_, nc = 3 * q, m
    x = lambda i: i - 1  # noqa: E731  element ids are 1-based
    c = lambda j: nx_ + j
    z = lambda i: nx_ + nc + i
    w = lambda i: nx_ + nc + q + i
    r = nx_ + nc + 2 * q
    edges = []
    for j, t in enumerate(inst.triples):
        edges.extend((x(e), c(j)) for e in t)
    edges.extend((c(a), c(b)) for a, b in combinations(range(m), 2))
    edges.extend((r, x(e)) for e in inst.universe)
    edges.extend((r, c(j)) for j in range(m))
    edges.extend((r, w(i)) for i in range(q))
    edges.extend((w(i), z(i)) for i in range(q))
    n = r + 1
    roles = (
        [f"x{i}" for i in range(1, nx_ + 1)]
        + [f"c{j}" for j in range(1, m + 1)]
        + [f"z{i}" for i in range(1, q + 1)]
        + [f"w{i}" for i in range(1, q + 1)]
        + ["r"]
    )
    return ReductionGraph(Graph.from_edges(n, edges), tuple(roles), 2 * q, tuple(range(n)))


def exact_cover_exists(inst: X3cInstance) -> bool:
    """Brute force over ``q``-subsets of the triples."""
    if inst.m > MAX_COVER_SETS:
        raise ValueError(f"exact cover scan limited to {MAX_COVER_SETS} triples")
    target = frozenset(inst.universe)
    for combo in combinations(inst.triples, inst.q):
        covered = frozenset().union(*combo)
        if len(covered) == 3 * inst.q and covered == target:
            return True
    return False


def verify_x3c_equivalence(inst: X3cInstance, limit: OracleLimit | int | None = None) -> bool:
    """Exact cover exists iff the reduction graph has an RDS of size ``<= 2q``.

    Also requires the attached vertex ordering to pass :func:`verify_dpeo`.
    """
    red = gen_x3c_graph(inst)
    if not verify_dpeo(red.graph, red.dpeo):
        return False
    gamma_r = brute_force_gamma_r(red.graph, limit).gamma_r
    return exact_cover_exists(inst) == (gamma_r <= red.k)


@dataclass(frozen=True)
class GpGraph:
    graph: Graph
    base_n: int
    roles: tuple[str, ...]

    def v(self, i: int) -> int:
        return i

    def x(self, i: int) -> int:
        return self.base_n + i

    def y(self, i: int) -> int:
        return 2 * self.base_n + i

    def z(self, i: int) -> int:
        return 3 * self.base_n + i

    def role_map(self) -> dict[str, str]:
        return {str(v + 1): r for v, r in enumerate(self.roles)}


def gen_gp_graph(h: Graph) -> GpGraph:
    """Append a path ``v_i - x_i - y_i - z_i`` to every vertex of ``h``."""
    n = h.n
    if n < 1:
        raise ValueError("base graph needs at least one vertex")
    edges = list(h.edges())
    for i in range(n):
        edges += [(i, n + i), (n + i, 2 * n + i), (2 * n + i, 3 * n + i)]
    roles = tuple(f"{p}{i + 1}" for p in "vxyz" for i in range(n))
    return GpGraph(Graph.from_edges(4 * n, edges), n, roles)


def gp_canonical_rds(gp: GpGraph) -> RdsResult:
    """``V_H`` plus all path ends: a minimum RDS of size ``2n``."""
    n = gp.base_n
    witness = frozenset(range(n)) | {gp.z(i) for i in range(n)}
    return RdsResult(2 * n, witness, "trivial")


def dom_set_h_to_gp(gp: GpGraph, d_h: Iterable[int]) -> frozenset[int]:
    """Dominating set of ``H`` -> dominating set of the GP graph, ``+n`` vertices."""
    d_h = frozenset(d_h)
    h, _ = gp.graph.induced_subgraph(range(gp.base_n))
    if not is_dominating_set(h, d_h):
        raise ValueError("input is not a dominating set of the base graph")
    return d_h | {gp.y(i) for i in range(gp.base_n)}


def dom_set_gp_to_h(gp: GpGraph, d: Sequence[int] | Iterable[int]) -> frozenset[int]:
    """Dominating set of the GP graph of size ``n + k`` -> one of ``H`` of size ``<= k``.

    Drops every ``y_i`` and ``z_i``, then swaps each remaining ``x_i`` for ``v_i``.
    """
    d = frozenset(d)
    if not is_dominating_set(gp.graph, d):
        raise ValueError("input is not a dominating set of the GP graph")
    n = gp.base_n
    kept = {v for v in d if v < 2 * n}
    return frozenset(v - n if v >= n else v for v in kept)
