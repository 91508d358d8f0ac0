import random

import pytest

from conftest import complete_graph, naive_min_sets, path_graph, star_graph
from restrained_dom.graph import Graph, is_restrained_dominating_set
from restrained_dom.oracle import (
    OracleLimit,
    OracleSizeError,
    brute_force_gamma,
    brute_force_gamma_r,
    enumerate_min_dominating_sets,
    enumerate_min_rds,
)


@pytest.mark.parametrize("n", [3, 4, 5, 7])
def test_complete_graphs_have_gamma_r_one(n):
    assert brute_force_gamma_r(complete_graph(n)).gamma_r == 1


def test_small_gamma_r_values(p3, k2):
    r = brute_force_gamma_r(p3)
    assert (r.gamma_r, r.witness, r.method) == (3, {0, 1, 2}, "oracle")
    assert brute_force_gamma_r(k2).gamma_r == 2


def test_gamma_values(p4):
    assert brute_force_gamma(star_graph(3)) == (1, frozenset({0}))
    assert brute_force_gamma(p4)[0] == 2
    assert brute_force_gamma(Graph.from_edges(2, []))[0] == 2


def test_enumeration_examples(p4):
    assert enumerate_min_rds(complete_graph(3)) == [{0}, {1}, {2}]
    assert enumerate_min_rds(complete_graph(2)) == [{0, 1}]
    assert enumerate_min_rds(p4) == [{0, 3}]


def test_tie_break_is_lexicographic():
    # C6 has several minimum sets; the smallest sorted member tuple wins
    c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    sets = enumerate_min_rds(c6)
    assert brute_force_gamma_r(c6).witness == sets[0]
    assert [tuple(sorted(s)) for s in sets] == sorted(tuple(sorted(s)) for s in sets)


def test_matches_itertools_reference():
    rng = random.Random(11)
    for _ in range(80):
        n = rng.randint(1, 9)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        ref = naive_min_sets(g)
        assert sorted(map(sorted, enumerate_min_rds(g))) == sorted(map(sorted, ref))
        ref_dom = naive_min_sets(g, restrained=False)
        assert sorted(map(sorted, enumerate_min_dominating_sets(g))) == sorted(map(sorted, ref_dom))


def test_oracle_properties_random():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 10)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
        r = brute_force_gamma_r(g)
        assert is_restrained_dominating_set(g, r.witness)
        assert brute_force_gamma(g)[0] <= r.gamma_r
        assert all(len(s) == r.gamma_r for s in enumerate_min_rds(g))


def test_size_limits():
    with pytest.raises(OracleSizeError):
        brute_force_gamma_r(path_graph(21))
    with pytest.raises(OracleSizeError):
        brute_force_gamma_r(path_graph(9), limit=8)
    with pytest.raises(ValueError):
        OracleLimit(25)


def path_gamma_r(n):
    return n - 2 * ((n - 1) // 3)


@pytest.mark.parametrize("n", range(2, 12))
def test_path_formula_against_reference(n):
    assert len(naive_min_sets(path_graph(n))[0]) == path_gamma_r(n)


def test_chunked_scan_beyond_one_chunk():
    # 21 vertices spans two scan chunks; the path formula is pinned above
    g = path_graph(21)
    assert brute_force_gamma_r(g, limit=21).gamma_r == path_gamma_r(21)
