"""Probabilistic upper bound on the restrained domination number and the
matching randomized construction."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, is_connected

__all__ = ["BoundReport", "RandomRun", "optimal_probability", "bound_at", "upper_bound", "randomized_rds"]


def optimal_probability(delta: int) -> float:
    """Selection probability ``ln(delta+1)/(delta+1)``, clamped to [0, 1]."""
    return min(1.0, max(0.0, math.log(delta + 1) / (delta + 1)))


def bound_at(n: int, delta: int, p: float) -> float:
    """Expected-size bound ``2np + 2n exp(-p (delta+1))`` for selection probability ``p``."""
    return 2 * n * p + 2 * n * math.exp(-p * (delta + 1))


@dataclass(frozen=True)
class BoundReport:
    n: int
    delta: int
    p: float
    bound: float
    closed_form: float


def upper_bound(n: int, delta: int) -> BoundReport:
    if n < 1:
        raise ValueError("n must be at least 1")
    if delta < 1:
        raise ValueError("minimum degree must be at least 1 (connected graph, n >= 2)")
    p = optimal_probability(delta)
    closed = 2 * n * (1 + math.log(delta + 1)) / (delta + 1)
    return BoundReport(n, delta, p, bound_at(n, delta, p), closed)


@dataclass(frozen=True)
class RandomRun:
    seed: int
    a_set: frozenset[int]
    b_set: frozenset[int]
    c_set: frozenset[int]

    @property
    def result(self) -> frozenset[int]:
        return self.a_set | self.b_set | self.c_set


def _draws(seed: int, n: int) -> np.ndarray:
    # Philox is counter based: vertex v always gets the v-th output for this key
    gen = np.random.Generator(np.random.Philox(key=seed & ((1 << 64) - 1)))
    return gen.random(n)


def randomized_rds(g: Graph, seed: int) -> RandomRun:
    """One run of the randomized construction.

    ``A`` keeps each vertex with the optimal probability, ``B`` is every
    vertex outside ``N[A]``, and ``C`` is every remaining vertex whose whole
    neighbourhood lies in ``A | B``. The union is always a restrained
    dominating set, whatever ``A`` turns out to be.
    """
    if g.n < 2 or not is_connected(g):
        raise ValueError("expected a connected graph with at least two vertices")
    p = optimal_probability(g.min_degree())
    picked = _draws(seed, g.n) < p
    a = {v for v in range(g.n) if picked[v]}
    covered = set(a)
    for v in a:
        covered.update(g.neighbors(v))
    b = {v for v in range(g.n) if v not in covered}
    ab = a | b
    c = {v for v in range(g.n) if v not in ab and g.neighbor_set(v) <= ab}
    return RandomRun(seed, frozenset(a), frozenset(b), frozenset(c))
