"""Permutation classes, permutation graphs and well-quasi-order at desk scale."""
from .antichain import (
    AntichainReport,
    FamilyId,
    antichain_element,
    ding_graph,
    split_graph,
    verify_graph_antichain,
    verify_perm_antichain,
)
from .enumeration import CountSequence, LinearRecurrence, avoiders, count_avoiders, guess_recurrence, predict
from .graphs import (
    ForbiddenPair,
    Graph,
    build_named,
    graph_modules,
    graph_of,
    induced_contains,
    is_prime,
    omits,
    perms_of_graph,
)
from .grid import (
    GridMatrix,
    Gridding,
    HullConfig,
    Rectangle,
    cell_graph,
    corner_free,
    grid_membership,
    max_independent_rectangles,
    min_corner_free_gridding,
    min_slicing_lines,
    propagate_hulls,
)
from .perm import (
    Basis,
    Perm,
    combine,
    contains,
    extremal_entry_property,
    inflate,
    intervals,
    is_simple,
    longest_monotone,
    monotone_chain_diagnostic,
    symmetry,
)
from .substitution import DecompositionTree, decompose, reconstruct, substitution_depth

__version__ = "0.1.0"
