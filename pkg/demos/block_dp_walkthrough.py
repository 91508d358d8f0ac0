"""
Restrained domination on a block graph
=======================================

A restrained dominating set D needs every outside vertex to see D and to
see another outside vertex. On block graphs a bottom-up pass over the
cut-vertex / block tree finds a minimum one in polynomial time.
"""

from pathlib import Path

from restrained_dom import read_graph
from restrained_dom.block_dp import build_refined_cut_tree, evaluate_tree, solve_block_graph

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
g = read_graph(DATA / "block_graph_14.graph")
print(f"{g.n} vertices, {g.m} edges")

###############################################################################
# Build the tree rooted at vertex 7 (id 6). Cut vertices and blocks
# alternate; a block keeps only its non-cut members as its own vertices.

tree = build_refined_cut_tree(g, root=6)
values = evaluate_tree(tree)


def label(node):
    if node.kind == "cut":
        return f"v{node.vertex + 1}"
    return "{" + ",".join(str(v + 1) for v in sorted(node.full_block)) + "}"


def fmt(x):
    return "inf" if x == float("inf") else str(int(x))


for idx in reversed(tree.bfs_order):
    node, dv = tree.nodes[idx], values[idx]
    row = "  ".join(f"{k}={fmt(v)}" for k, v in dv.values.items())
    print(f"{label(node):>14}  {row}")

###############################################################################
# The answer at the root is min(A, B). The solver also rebuilds a witness
# from the stored choices.

result = solve_block_graph(g, root=6)
print("gamma_r =", result.gamma_r)
print("witness =", sorted(v + 1 for v in result.witness))
