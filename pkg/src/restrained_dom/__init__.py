"""Minimum restrained domination: exact solvers for block, threshold, cograph
and chain graphs, an exhaustive oracle, hardness-reduction generators and a
randomized construction with its probabilistic bound."""

from .block_dp import build_refined_cut_tree, is_block_graph, solve_block_graph
from .chain import recognize_chain, solve_chain
from .cli import solve_graph
from .cograph import build_cotree, cograph_gamma, solve_cograph
from .graph import (
    Graph,
    RdsResult,
    format_graph,
    is_connected,
    is_dominating_set,
    is_restrained_dominating_set,
    parse_graph,
    pendant_vertices,
    read_graph,
    verify_dpeo,
)
from .oracle import brute_force_gamma, brute_force_gamma_r, enumerate_min_rds
from .randomized import randomized_rds, upper_bound
from .reductions import (
    X3cInstance,
    exact_cover_exists,
    gen_gp_graph,
    gen_x3c_graph,
    gp_canonical_rds,
    verify_x3c_equivalence,
)
from .threshold import recognize_threshold, solve_threshold

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "RdsResult",
    "X3cInstance",
    "brute_force_gamma",
    "brute_force_gamma_r",
    "build_cotree",
    "build_refined_cut_tree",
    "cograph_gamma",
    "enumerate_min_rds",
    "exact_cover_exists",
    "format_graph",
    "gen_gp_graph",
    "gen_x3c_graph",
    "gp_canonical_rds",
    "is_block_graph",
    "is_connected",
    "is_dominating_set",
    "is_restrained_dominating_set",
    "parse_graph",
    "pendant_vertices",
    "randomized_rds",
    "read_graph",
    "recognize_chain",
    "recognize_threshold",
    "solve_block_graph",
    "solve_chain",
    "solve_cograph",
    "solve_graph",
    "solve_threshold",
    "upper_bound",
    "verify_dpeo",
    "verify_x3c_equivalence",
]
