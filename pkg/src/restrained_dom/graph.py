"""Graph representation, file I/O and certificate checks shared by all solvers."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "GraphParseError",
    "RdsResult",
    "METHODS",
    "parse_graph",
    "read_graph",
    "format_graph",
    "is_restrained_dominating_set",
    "is_dominating_set",
    "rds_violation",
    "pendant_vertices",
    "is_connected",
    "connected_components",
    "verify_dpeo",
    "result_to_json",
    "result_from_json",
]


class GraphParseError(ValueError):
    """Raised for malformed graph files; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Instances are
    immutable; build them with :meth:`from_edges`.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int = field(init=False)
    _nbr_sets: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length must equal n")
        sets = []
        total = 0
        for v, nbrs in enumerate(self.adjacency):
            s = frozenset(nbrs)
            if len(s) != len(nbrs):
                raise ValueError(f"duplicate neighbour at vertex {v}")
            if v in s:
                raise ValueError(f"self-loop at vertex {v}")
            if any(u < 0 or u >= self.n for u in nbrs):
                raise ValueError(f"neighbour id out of range at vertex {v}")
            total += len(nbrs)
            sets.append(s)
        for v, s in enumerate(sets):
            for u in s:
                if v not in sets[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "m", total // 2)
        object.__setattr__(self, "_nbr_sets", tuple(sets))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from 0-based edge pairs; duplicates collapse."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def closed_neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(h, labels)`` where vertex ``i`` of ``h`` is ``labels[i]`` here."""
        labels = sorted(set(vertices))
        index = {v: i for i, v in enumerate(labels)}
        edges = [
            (index[u], index[v])
            for u in labels
            for v in self.adjacency[u]
            if v in index and u < v
        ]
        return Graph.from_edges(len(labels), edges), labels

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def adjacency_masks(self) -> list[int]:
        """Open neighbourhoods as integer bitmasks (bit ``u`` set for neighbour ``u``)."""
        masks = []
        for nbrs in self.adjacency:
            mask = 0
            for u in nbrs:
                mask |= 1 << u
            masks.append(mask)
        return masks


METHODS = ("oracle", "block_dp", "threshold", "cograph", "chain", "randomized", "trivial")


@dataclass(frozen=True)
class RdsResult:
    """A restrained dominating set together with how it was obtained."""

    gamma_r: int
    witness: frozenset[int]
    method: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "witness", frozenset(self.witness))
        if len(self.witness) != self.gamma_r:
            raise ValueError(
                f"gamma_r={self.gamma_r} but witness has {len(self.witness)} vertices"
            )
        if self.method not in METHODS:
            raise ValueError(f"unknown method label {self.method!r}")


# -- file format ------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the DIMACS-like edge format (1-based ids in the file).

    Comment lines start with ``c``; exactly one ``p edge <n> <m>`` header must
    precede the ``e <u> <v>`` lines. Duplicate edges are merged. The declared
    edge count is the number of ``e`` lines, so it is checked before merging.
    """
    n: int | None = None
    declared_m = 0
    edge_lines = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphParseError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError("expected 'p edge <n> <m>'", lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphParseError("non-integer vertex or edge count", lineno) from None
            if n < 0 or declared_m < 0:
                raise GraphParseError("negative count in header", lineno)
        elif tag == "e":
            if n is None:
                raise GraphParseError("edge line before header", lineno)
            if len(parts) != 3:
                raise GraphParseError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError("non-integer vertex id", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
            edge_lines += 1
        else:
            raise GraphParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphParseError("missing 'p edge' header")
    if edge_lines != declared_m:
        raise GraphParseError(f"header declares {declared_m} edges, found {edge_lines}")
    return Graph.from_edges(n, edges)


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    """Serialize ``g`` canonically (edges sorted, 1-based, LF endings)."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def result_to_json(result: RdsResult) -> str:
    return json.dumps(
        {
            "gamma_r": result.gamma_r,
            "witness": [v + 1 for v in sorted(result.witness)],
            "method": result.method,
        }
    )


def result_from_json(text: str) -> RdsResult:
    data = json.loads(text)
    witness = frozenset(int(v) - 1 for v in data["witness"])
    return RdsResult(int(data.get("gamma_r", len(witness))), witness, data.get("method", "trivial"))


# -- certificates -----------------------------------------------------------


def _check_members(g: Graph, d: Iterable[int]) -> frozenset[int]:
    d = frozenset(d)
    for v in d:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph with n={g.n}")
    return d


def rds_violation(g: Graph, d: Iterable[int]) -> tuple[int, str] | None:
    """First vertex breaking the restrained domination condition, or ``None``.

    Returns ``(v, clause)`` where clause is ``"no neighbor in D"`` or
    ``"no neighbor outside D"``.
    """
    d = _check_members(g, d)
    for v in range(g.n):
        if v in d:
            continue
        nbrs = g.neighbor_set(v)
        if not nbrs & d:
            return v, "no neighbor in D"
        if nbrs <= d:
            return v, "no neighbor outside D"
    return None


def is_restrained_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    return rds_violation(g, d) is None


def is_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    d = _check_members(g, d)
    return all(v in d or g.neighbor_set(v) & d for v in range(g.n))


def pendant_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def verify_dpeo(g: Graph, ordering: Sequence[int]) -> bool:
    """Check that ``ordering`` is a doubly perfect elimination ordering.

    Each vertex must be simplicial with a maximum neighbour in the subgraph
    induced by itself and the vertices after it. Neighbourhoods are taken in
    that suffix subgraph.
    """
    if sorted(ordering) != list(range(g.n)):
        raise ValueError("ordering is not a permutation of the vertices")
    alive = set(range(g.n))
    for v in ordering:
        closed = (g.neighbor_set(v) & alive) | {v}
        for u in closed:
            if u != v and not closed <= (g.neighbor_set(u) | {u}):
                return False
        # closed[w] restricted to the suffix; the max neighbour must contain all of them
        suffix_closed = {w: (g.neighbor_set(w) & alive) | {w} for w in closed}
        if not any(
            all(suffix_closed[w] <= suffix_closed[u] for w in closed) for u in closed
        ):
            return False
        alive.remove(v)
    return True
