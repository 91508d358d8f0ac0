from itertools import combinations

import pytest

from conftest import DATA, complete_graph, path_graph
from restrained_dom.graph import Graph, is_dominating_set, is_restrained_dominating_set, verify_dpeo
from restrained_dom.oracle import brute_force_gamma, brute_force_gamma_r
from restrained_dom.reductions import (
    X3cInstance,
    dom_set_gp_to_h,
    dom_set_h_to_gp,
    exact_cover_exists,
    format_x3c,
    gen_gp_graph,
    gen_x3c_graph,
    gp_canonical_rds,
    parse_x3c,
    verify_x3c_equivalence,
)


@pytest.fixture
def cover_instance():
    return parse_x3c((DATA / "x3c_cover.txt").read_text())


def test_reduction_sizes(cover_instance):
    red = gen_x3c_graph(cover_instance)
    assert (red.graph.n, red.k) == (16, 4)
    # 3q + m + 2q + 1 vertices: three elements, one set, z1, w1, r
    small = gen_x3c_graph(X3cInstance(1, [(1, 2, 3)]))
    assert (small.graph.n, small.k) == (7, 2)


def test_reduction_structure(cover_instance):
    red = gen_x3c_graph(cover_instance)
    g, role = red.graph, red.roles
    by_role = {r: v for v, r in enumerate(role)}
    r = by_role["r"]
    cs = [v for v, name in enumerate(role) if name.startswith("c")]
    assert all(g.has_edge(a, b) for a, b in combinations(cs, 2))
    for v, name in enumerate(role):
        if name.startswith("x"):
            expected = {cs[j] for j, t in enumerate(cover_instance.triples) if int(name[1:]) in t} | {r}
            assert g.neighbor_set(v) == expected
        if name.startswith("z"):
            assert g.neighbor_set(v) == {by_role["w" + name[1:]]}
    assert g.neighbor_set(r) == {v for v, name in enumerate(role) if name[0] in "xcw"}
    assert verify_dpeo(g, red.dpeo)


def test_malformed_triples():
    with pytest.raises(ValueError):
        X3cInstance(1, [(1, 2)])
    with pytest.raises(ValueError):
        X3cInstance(1, [(1, 2, 2)])
    with pytest.raises(ValueError):
        X3cInstance(1, [(1, 2, 4)])
    with pytest.raises(ValueError):
        parse_x3c("2 3\n1 2 3\n")


def test_exact_cover_examples(cover_instance):
    assert exact_cover_exists(cover_instance)
    assert not exact_cover_exists(X3cInstance(2, [(1, 2, 3)]))


def test_x3c_file_roundtrip(cover_instance):
    text = format_x3c(cover_instance)
    assert text == (DATA / "x3c_cover.txt").read_text()
    assert parse_x3c(text) == cover_instance


def test_equivalence_examples(cover_instance):
    assert verify_x3c_equivalence(cover_instance)
    no_cover = X3cInstance(2, [(1, 2, 3), (1, 4, 5), (1, 5, 6)])
    assert not exact_cover_exists(no_cover)
    assert verify_x3c_equivalence(no_cover)
    assert verify_x3c_equivalence(X3cInstance(1, [(1, 2, 3)]))


def test_gp_sizes():
    assert gen_gp_graph(Graph.from_edges(1, [])).graph == path_graph(4)
    k3 = gen_gp_graph(complete_graph(3))
    assert (k3.graph.n, k3.graph.m) == (12, 12)
    assert gen_gp_graph(path_graph(2)).graph.n == 8
    for i in range(3):
        assert k3.graph.degree(k3.z(i)) == 1


def test_gp_canonical_rds():
    k1 = gen_gp_graph(Graph.from_edges(1, []))
    r = gp_canonical_rds(k1)
    assert (r.gamma_r, r.witness) == (2, {k1.v(0), k1.z(0)})
    for h in (complete_graph(3), path_graph(2)):
        gp = gen_gp_graph(h)
        r = gp_canonical_rds(gp)
        assert r.gamma_r == 2 * h.n == brute_force_gamma_r(gp.graph).gamma_r
        assert is_restrained_dominating_set(gp.graph, r.witness)


def test_forward_transform():
    gp = gen_gp_graph(complete_graph(3))
    d = dom_set_h_to_gp(gp, {0})
    assert d == {gp.v(0), gp.y(0), gp.y(1), gp.y(2)}
    assert is_dominating_set(gp.graph, d)
    k1 = gen_gp_graph(Graph.from_edges(1, []))
    assert dom_set_h_to_gp(k1, {0}) == {k1.v(0), k1.y(0)}
    p2 = gen_gp_graph(path_graph(2))
    assert len(dom_set_h_to_gp(p2, {0, 1})) == 4
    with pytest.raises(ValueError):
        dom_set_h_to_gp(gen_gp_graph(path_graph(3)), {0})


def test_reverse_transform():
    gp = gen_gp_graph(complete_graph(3))
    assert dom_set_gp_to_h(gp, {gp.v(0), gp.y(0), gp.y(1), gp.y(2)}) == {0}
    k1 = gen_gp_graph(Graph.from_edges(1, []))
    assert dom_set_gp_to_h(k1, {k1.x(0), k1.y(0)}) == {0}


def test_reverse_transform_rejects_non_dominating():
    # y1, z1, y2, z2 leaves v1 and v2 undominated in GP(P2)
    p2 = gen_gp_graph(path_graph(2))
    with pytest.raises(ValueError):
        dom_set_gp_to_h(p2, {p2.y(0), p2.z(0), p2.y(1), p2.z(1)})


def test_transforms_against_domination_numbers():
    for h in (path_graph(3), complete_graph(3), Graph.from_edges(3, [(0, 1)])):
        gp = gen_gp_graph(h)
        gamma_h, d_h = brute_force_gamma(h)
        gamma_gp, d_gp = brute_force_gamma(gp.graph)
        assert gamma_gp == gamma_h + h.n
        back = dom_set_gp_to_h(gp, d_gp)
        assert is_dominating_set(h, back) and len(back) <= gamma_h
        assert len(dom_set_h_to_gp(gp, d_h)) == gamma_gp
