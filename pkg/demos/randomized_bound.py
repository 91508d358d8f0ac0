"""
A probabilistic upper bound and the matching random construction
=================================================================

Pick each vertex with probability p = ln(d+1)/(d+1), where d is the
minimum degree, then patch the result into a restrained dominating set.
The expected size gives an upper bound on gamma_r.
"""

import numpy as np

from restrained_dom import is_restrained_dominating_set
from restrained_dom.generators import random_connected_graph
from restrained_dom.randomized import randomized_rds, upper_bound

for delta in (1, 3, 10, 50):
    rep = upper_bound(100, delta)
    print(f"n=100 delta={delta:>2}  p={rep.p:.3f}  bound={rep.closed_form:7.2f}")

###############################################################################
# Every run is valid, not only on average. The sample mean sits below the
# bound.

g = random_connected_graph(150, 0.2, 3)
rep = upper_bound(g.n, g.min_degree())
runs = [randomized_rds(g, seed) for seed in range(500)]
assert all(is_restrained_dominating_set(g, r.result) for r in runs)
sizes = np.array([len(r.result) for r in runs])
print(f"min degree {g.min_degree()}, bound {rep.bound:.1f}, mean {sizes.mean():.1f}, best {sizes.min()}")

r = runs[0]
print(f"seed 0: |A|={len(r.a_set)}  |B_A|={len(r.b_set)}  |C_A|={len(r.c_set)}")
