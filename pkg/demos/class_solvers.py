"""
Closed forms for threshold graphs, cographs and chain graphs
=============================================================

Three graph classes where a minimum restrained dominating set falls out
of a vertex ordering or a decomposition tree. Each answer is compared
with the exhaustive oracle.
"""

import random

from restrained_dom import Graph, brute_force_gamma_r
from restrained_dom.chain import classify_chain, recognize_chain
from restrained_dom.cograph import build_cotree, solve_cograph
from restrained_dom.generators import random_chain_graph, random_cograph, random_threshold_graph
from restrained_dom.threshold import recognize_threshold, solve_threshold

rng = random.Random(1)

###############################################################################
# Threshold graphs: peel isolated and universal vertices. The order of the
# clique side decides the answer.

g = random_threshold_graph(9, rng)
order = recognize_threshold(g)
print("clique side     ", [v + 1 for v in order.clique_order])
print("independent side", [v + 1 for v in order.independent_order])
print("solver", solve_threshold(g).gamma_r, " oracle", brute_force_gamma_r(g).gamma_r)

###############################################################################
# Cographs: fold the cotree bottom-up. A single vertex joined to an
# edgeless side (a star) forces the whole graph into D.

p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
print(build_cotree(p3), "->", solve_cograph(p3).gamma_r)

g = random_cograph(10, rng, connected=True)
print(build_cotree(g))
print("solver", solve_cograph(g).gamma_r, " oracle", brute_force_gamma_r(g).gamma_r)

###############################################################################
# Chain graphs: the answer is the pendant count plus 0, 1 or 2.

g = random_chain_graph(5, 4, rng)
order = recognize_chain(g)
case, witness = classify_chain(g)
print("x order", [v + 1 for v in order.x_order], " y order", [v + 1 for v in order.y_order])
print(f"case {case.label}, t = {case.t}, witness {sorted(v + 1 for v in witness)}")
print("oracle", brute_force_gamma_r(g).gamma_r)
