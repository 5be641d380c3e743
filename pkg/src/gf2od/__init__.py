"""Exact GF(2) linear algebra for generalized odd domination.

Solving ``Mx = diag(M)`` for symmetric ``M``, the rank change under
``M -> M + u u^T``, and the boundary-state recursion on labelled rooted trees.
"""

from .gf2core import (
    BitVector,
    Echelon,
    KernelBasis,
    Matrix,
    SymMatrix,
    TheoremViolation,
    add_outer,
    dot,
    echelonize,
    image_contains,
    is_kernel_basis,
    kernel_basis,
    mat_vec,
    nullity,
    rank,
    solve,
)
from .graphs import (
    Graph,
    ParseError,
    graph_matrix,
    parse_graph,
    parse_labels,
    solve_odd_domination,
    toggle_vertex_loop,
    verify_pattern,
)
from .parity import (
    AffineSolutionSet,
    NormalForm,
    NotInvertibleError,
    diag_vector,
    inverse_parity_identity,
    parity_of_solutions,
    solve_diag_system,
    symmetric_normal_form,
)
from .trees import (
    AffineSubset,
    BoundaryState,
    ResidueFormula,
    RootedTree,
    boundary_state,
    combine_children,
    complete_dary_tree,
    dary_periodic_fit,
    dary_step,
    leaf_state,
    parse_tree,
    pattern_count,
    tree_nullity,
)
from .update import (
    BudgetExceeded,
    Case,
    RankHistogram,
    UpdateCase,
    apply_toggle,
    classify_toggle,
    diagonal_sweep,
)

__version__ = "0.1.0"
