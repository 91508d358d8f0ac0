"""
Hardness constructions at desk scale
=====================================

Exact cover by 3-sets maps to restrained domination on a doubly chordal
graph, and any graph H embeds in a larger one by hanging a 3-edge path
off every vertex. Both constructions are small enough to check with the
oracle.
"""

from restrained_dom import Graph, brute_force_gamma, brute_force_gamma_r, verify_dpeo
from restrained_dom.reductions import (
    X3cInstance,
    dom_set_gp_to_h,
    dom_set_h_to_gp,
    exact_cover_exists,
    gen_gp_graph,
    gen_x3c_graph,
    gp_canonical_rds,
)

###############################################################################
# An instance with a cover ({1,4,6} and {2,3,5}) and one without.

for triples in ([(1, 4, 6), (1, 2, 5), (2, 3, 5), (2, 4, 6), (3, 5, 6)], [(1, 2, 3), (1, 4, 5), (1, 5, 6)]):
    inst = X3cInstance(2, triples)
    red = gen_x3c_graph(inst)
    gamma_r = brute_force_gamma_r(red.graph).gamma_r
    print(f"m={inst.m}: {red.graph.n} vertices, ordering ok={verify_dpeo(red.graph, red.dpeo)}")
    print(f"   exact cover {exact_cover_exists(inst)}, gamma_r={gamma_r} <= k={red.k}: {gamma_r <= red.k}")

###############################################################################
# Path padding on a triangle. The restrained number is always 2n, while
# domination moves one for one with that of the base graph.

h = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
gp = gen_gp_graph(h)
print("canonical set size", gp_canonical_rds(gp).gamma_r, " oracle", brute_force_gamma_r(gp.graph).gamma_r)

forward = dom_set_h_to_gp(gp, {0})
print("forward", sorted(gp.roles[v] for v in forward))
gamma_gp, d = brute_force_gamma(gp.graph)
print("back   ", sorted(f"v{v + 1}" for v in dom_set_gp_to_h(gp, d)), "from a set of size", gamma_gp)
