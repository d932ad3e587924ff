"""Isolating sets with certified size bounds.

An isolating set S of a graph G is one whose closed neighborhood hits
every edge: G − N[S] has no edge. This package constructs such sets
with a weight-driven greedy whose per-step certificates bound |S| by
omega * n, computes the optimal omega exactly per minimum-degree class,
solves small instances exactly, and builds the matching lower-bound
families.
"""

from .exact import (DEFAULT_NODE_BUDGET, ExactResult, SearchBudgetExceeded,
                    exact_isolation_number, path_cycle_min_isolating)
from .families import (Gadget, GadgetCertificate, ORACLE_ORDER_LIMIT,
                       certify_special_edge, chain, metacirculant_14,
                       prism_k4, search_gadgets)
from .graph import (GenerationError, Graph, Graph6ParseError, StructuralProfile,
                    complete_graph, cycle_graph, emit_edge_list, emit_graph6,
                    from_edge_list, girth, is_connected, parse_edge_list,
                    parse_graph6, path_graph, random_bipartite_min_degree_graph,
                    random_min_degree_graph, random_regular_graph,
                    structural_profile)
from .greedy import (GreedyRule, GreedyStep, GreedyTrace, TraceVerification,
                     greedy_isolating_set, select_desirable, verify_trace)
from .lpweights import (ConstraintSystem, LinearRow, LPSolution, RowViolation,
                        build_constraints, check_feasible, solve_min_omega)
from .residual import (Color, ResidualState, WeightVector, compute_residual,
                       is_isolating, total_weight, xi)

__version__ = "0.1.0"

__all__ = [
    "Color",
    "ConstraintSystem",
    "DEFAULT_NODE_BUDGET",
    "ExactResult",
    "Gadget",
    "ORACLE_ORDER_LIMIT",
    "GadgetCertificate",
    "GenerationError",
    "Graph",
    "Graph6ParseError",
    "GreedyRule",
    "GreedyStep",
    "GreedyTrace",
    "LPSolution",
    "LinearRow",
    "ResidualState",
    "RowViolation",
    "SearchBudgetExceeded",
    "StructuralProfile",
    "TraceVerification",
    "WeightVector",
    "build_constraints",
    "certify_special_edge",
    "chain",
    "check_feasible",
    "complete_graph",
    "compute_residual",
    "cycle_graph",
    "emit_edge_list",
    "emit_graph6",
    "exact_isolation_number",
    "from_edge_list",
    "girth",
    "greedy_isolating_set",
    "is_connected",
    "is_isolating",
    "metacirculant_14",
    "parse_edge_list",
    "parse_graph6",
    "path_cycle_min_isolating",
    "path_graph",
    "prism_k4",
    "random_bipartite_min_degree_graph",
    "random_min_degree_graph",
    "random_regular_graph",
    "search_gadgets",
    "select_desirable",
    "solve_min_omega",
    "structural_profile",
    "total_weight",
    "verify_trace",
    "xi",
]
