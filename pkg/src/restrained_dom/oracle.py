"""Exhaustive subset scan for small graphs.

Every subset of ``V`` is encoded as an integer bitmask and tested with
vectorized numpy operations, one chunk of the ``2**n`` space at a time.
Among the valid sets of minimum size the lexicographically smallest sorted
member sequence wins, which is the same answer a scan ordered by popcount
and then lexicographic rank would return first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .graph import Graph, RdsResult

__all__ = [
    "OracleLimit",
    "OracleSizeError",
    "brute_force_gamma_r",
    "brute_force_gamma",
    "enumerate_min_rds",
    "enumerate_min_dominating_sets",
]

HARD_MAX_N = 24
_CHUNK_BITS = 20


class OracleSizeError(ValueError):
    pass


@dataclass(frozen=True)
class OracleLimit:
    max_n: int = 20

    def __post_init__(self) -> None:
        if not 0 <= self.max_n <= HARD_MAX_N:
            raise ValueError(f"max_n must lie in 0..{HARD_MAX_N}")

    def check(self, g: Graph) -> None:
        if g.n > self.max_n:
            raise OracleSizeError(f"graph has {g.n} vertices, oracle limit is {self.max_n}")


def _limit(limit: OracleLimit | int | None) -> OracleLimit:
    if limit is None:
        return OracleLimit()
    if isinstance(limit, int):
        return OracleLimit(limit)
    return limit


Predicate = Callable[[np.ndarray, Graph, list[int]], np.ndarray]


def _rds_mask(masks: np.ndarray, g: Graph, adj: list[int]) -> np.ndarray:
    full = (1 << g.n) - 1
    outside = np.bitwise_and(np.invert(masks), full)
    ok = np.ones(masks.shape, dtype=bool)
    for v, a in enumerate(adj):
        in_d = (masks >> v) & 1 == 1
        ok &= in_d | (((masks & a) != 0) & ((outside & a) != 0))
    return ok


def _dom_mask(masks: np.ndarray, g: Graph, adj: list[int]) -> np.ndarray:
    ok = np.ones(masks.shape, dtype=bool)
    for v, a in enumerate(adj):
        ok &= (masks & (a | (1 << v))) != 0
    return ok


def _minimum_sets(g: Graph, predicate: Predicate) -> tuple[int, list[int]]:
    """Smallest size of a set satisfying ``predicate`` and all masks of that size."""
    adj = g.adjacency_masks()
    total = 1 << g.n
    chunk = 1 << min(g.n, _CHUNK_BITS)
    best = g.n + 1
    found: list[int] = []
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        ok = predicate(masks, g, adj)
        if not ok.any():
            continue
        valid = masks[ok]
        sizes = np.bitwise_count(valid)
        low = int(sizes.min())
        if low < best:
            best, found = low, []
        if low == best:
            found.extend(int(x) for x in valid[sizes == best])
    return best, found


def _members(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def brute_force_gamma_r(g: Graph, limit: OracleLimit | int | None = None) -> RdsResult:
    """Minimum restrained dominating set by exhaustive search."""
    _limit(limit).check(g)
    if g.n == 0:
        return RdsResult(0, frozenset(), "oracle")
    size, masks = _minimum_sets(g, _rds_mask)
    best = min(_members(x) for x in masks)
    return RdsResult(size, frozenset(best), "oracle")


def brute_force_gamma(g: Graph, limit: OracleLimit | int | None = None) -> tuple[int, frozenset[int]]:
    """Minimum dominating set by exhaustive search, same tie-break."""
    _limit(limit).check(g)
    if g.n == 0:
        return 0, frozenset()
    size, masks = _minimum_sets(g, _dom_mask)
    return size, frozenset(min(_members(x) for x in masks))


def enumerate_min_rds(g: Graph, limit: OracleLimit | int | None = None) -> list[frozenset[int]]:
    """All minimum restrained dominating sets, in ascending lexicographic order."""
    _limit(limit).check(g)
    if g.n == 0:
        return [frozenset()]
    _, masks = _minimum_sets(g, _rds_mask)
    return [frozenset(t) for t in sorted(_members(x) for x in masks)]


def enumerate_min_dominating_sets(
    g: Graph, limit: OracleLimit | int | None = None
) -> list[frozenset[int]]:
    _limit(limit).check(g)
    if g.n == 0:
        return [frozenset()]
    _, masks = _minimum_sets(g, _dom_mask)
    return [frozenset(t) for t in sorted(_members(x) for x in masks)]
