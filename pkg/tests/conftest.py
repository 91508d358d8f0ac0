from __future__ import annotations

from itertools import combinations
from pathlib import Path

import pytest

from restrained_dom.graph import Graph, is_dominating_set, is_restrained_dominating_set, read_graph

DATA = Path(__file__).parent / "data"

# criterion number -> (passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for idx in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[idx]
        terminalreporter.write_line(f"criterion {idx:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def naive_min_sets(g: Graph, restrained: bool = True) -> list[frozenset[int]]:
    """Reference scan with itertools and set predicates, independent of the bitmask oracle."""
    check = is_restrained_dominating_set if restrained else is_dominating_set
    for k in range(g.n + 1):
        hits = [frozenset(c) for c in combinations(range(g.n), k) if check(g, c)]
        if hits:
            return hits
    return []


@pytest.fixture(scope="session")
def block14() -> Graph:
    return read_graph(DATA / "block_graph_14.graph")


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def k2() -> Graph:
    return complete_graph(2)
