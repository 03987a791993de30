"""Exact width solvers, checkable decompositions and treewidth hardness reductions."""
from .certificates import (DecompositionError, OrderingError, PathDecomposition, TreeDecomposition,
                           cutwidth_of_ordering, ordering_to_pathdec, vertex_separation_of_ordering,
                           verify_path_decomposition, verify_tree_decomposition)
from .cobipartite import build_cobipartite, lift_pathdec, project_decomposition, project_pathdec
from .cubic import (brick_wall_pathdec, build_brick_wall, build_step1, ordering_to_step1_pathdec,
                    reduce_cutwidth_to_treewidth, step1_decomposition_to_ordering)
from .graph import Graph, MinorWitness, contract_into_neighbor, contract_low_degree, verify_minor_witness
from .solvers import BudgetExceeded, SolveResult, exact_cutwidth, exact_pathwidth, exact_treewidth
from .special import (attach_degree_gadget, attach_edge_gadget, build_d_regular_instance, embed_3d_grid,
                      reduce_to_d_regular, reduce_to_four_regular)

__all__ = [
    "BudgetExceeded",
    "DecompositionError",
    "Graph",
    "MinorWitness",
    "OrderingError",
    "PathDecomposition",
    "SolveResult",
    "TreeDecomposition",
    "attach_degree_gadget",
    "attach_edge_gadget",
    "brick_wall_pathdec",
    "build_brick_wall",
    "build_cobipartite",
    "build_d_regular_instance",
    "build_step1",
    "contract_into_neighbor",
    "contract_low_degree",
    "cutwidth_of_ordering",
    "embed_3d_grid",
    "exact_cutwidth",
    "exact_pathwidth",
    "exact_treewidth",
    "lift_pathdec",
    "ordering_to_pathdec",
    "ordering_to_step1_pathdec",
    "project_decomposition",
    "project_pathdec",
    "reduce_cutwidth_to_treewidth",
    "reduce_to_d_regular",
    "reduce_to_four_regular",
    "step1_decomposition_to_ordering",
    "verify_minor_witness",
    "verify_path_decomposition",
    "verify_tree_decomposition",
    "vertex_separation_of_ordering",
]

__version__ = "0.1.0"
