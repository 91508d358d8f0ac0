import random

import pytest

from conftest import complete_graph, cycle_graph, star_graph
from restrained_dom.chain import NotChainError, classify_chain, recognize_chain, solve_chain
from restrained_dom.generators import random_chain_graph, shuffled
from restrained_dom.graph import Graph, is_restrained_dominating_set, pendant_vertices
from restrained_dom.oracle import brute_force_gamma_r


def test_path_four(p4):
    r = solve_chain(p4)
    assert (r.gamma_r, r.witness) == (2, {0, 3})
    assert classify_chain(p4)[0].label == "bistar"


def test_star_is_whole_graph():
    r = solve_chain(star_graph(3))
    assert r.gamma_r == 4


def test_six_vertex_example():
    # X = {x1, x2, x3} = 0..2, Y = {y1, y2, y3} = 3..5; N(x1) = {y1, y2}, x2 and x3 see all of Y
    g = Graph.from_edges(6, [(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
    order = recognize_chain(g)
    assert (order.x_top, order.y_top) == (2, 3)
    case, witness = classify_chain(g)
    assert (case.label, case.t) == ("general", 0)
    assert witness == {2, 3}
    assert brute_force_gamma_r(g).gamma_r == 2


def test_pendants_hang_off_the_tops():
    rng = random.Random(12)
    for _ in range(80):
        g = random_chain_graph(rng.randint(1, 8), rng.randint(1, 8), rng)
        order = recognize_chain(g)
        if g.n == 2:
            continue
        xs = set(order.x_order)
        for v in pendant_vertices(g):
            top = order.y_top if v in xs else order.x_top
            assert g.has_edge(v, top)


def test_complete_bipartite():
    g = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    r = solve_chain(g)
    assert r.gamma_r == 2 and is_restrained_dominating_set(g, r.witness)


def test_non_chain_inputs():
    with pytest.raises(NotChainError):
        recognize_chain(complete_graph(3))
    with pytest.raises(NotChainError):
        recognize_chain(cycle_graph(6))  # bipartite but not nested
    with pytest.raises(NotChainError):
        recognize_chain(Graph.from_edges(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("seed", range(150))
def test_matches_oracle_and_sandwich(seed):
    rng = random.Random(seed)
    g = shuffled(random_chain_graph(rng.randint(1, 7), rng.randint(1, 7), rng), rng)
    r = solve_chain(g)
    pend = pendant_vertices(g)
    assert r.gamma_r == brute_force_gamma_r(g).gamma_r
    assert is_restrained_dominating_set(g, r.witness)
    assert pend <= r.witness
    assert len(pend) <= r.gamma_r <= len(pend) + 2
