import random

import pytest

from conftest import complete_graph, star_graph
from restrained_dom.generators import random_threshold_graph, shuffled
from restrained_dom.graph import Graph, is_restrained_dominating_set
from restrained_dom.oracle import brute_force_gamma_r
from restrained_dom.threshold import NotThresholdError, recognize_threshold, solve_threshold


def test_star_needs_every_vertex():
    r = solve_threshold(star_graph(3))
    assert (r.gamma_r, r.witness) == (4, {0, 1, 2, 3})


def test_path_is_not_threshold(p4):
    with pytest.raises(NotThresholdError):
        recognize_threshold(p4)


def test_four_vertex_example():
    # x1=0, x2=1 on the clique side, y1=2, y2=3 independent
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3)])
    order = recognize_threshold(g)
    assert order.clique_order == (0, 1)
    assert order.independent_order == (2, 3)
    r = solve_threshold(g)
    assert (r.gamma_r, r.witness) == (2, {1, 3})


def test_triangle_and_twins():
    assert solve_threshold(complete_graph(3)).witness == {1}
    # K4 minus an edge: the two universal vertices are closed twins
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert solve_threshold(g).gamma_r == 1


def test_ordering_is_nested():
    rng = random.Random(4)
    for _ in range(60):
        g = random_threshold_graph(rng.randint(2, 15), rng)
        order = recognize_threshold(g)
        xs, ys = order.clique_order, order.independent_order
        assert sorted(xs + ys) == list(range(g.n))
        for a, b in zip(xs, xs[1:]):
            assert g.closed_neighbor_set(a) <= g.closed_neighbor_set(b)
        for a, b in zip(ys, ys[1:]):
            assert g.neighbor_set(a) >= g.neighbor_set(b)
        assert all(g.has_edge(a, b) for i, a in enumerate(xs) for b in xs[i + 1 :])
        assert not any(g.has_edge(a, b) for i, a in enumerate(ys) for b in ys[i + 1 :])


def test_small_inputs_rejected(k2):
    with pytest.raises(ValueError):
        solve_threshold(k2)
    with pytest.raises(NotThresholdError):
        recognize_threshold(Graph.from_edges(3, [(0, 1)]))


@pytest.mark.parametrize("seed", range(120))
def test_matches_oracle(seed):
    rng = random.Random(seed)
    g = shuffled(random_threshold_graph(rng.randint(3, 13), rng), rng)
    r = solve_threshold(g)
    assert r.gamma_r == brute_force_gamma_r(g).gamma_r
    assert is_restrained_dominating_set(g, r.witness)
