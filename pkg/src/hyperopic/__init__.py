"""Exact solver, strategy simulator, and audit workbench for
distance-limited pursuit games on finite connected graphs.

The robber is invisible whenever every cop is within the sight-limit
distance of it; the solver decides winnability exactly over belief states,
the strategies module replays constructive cop policies against an
omniscient robber, and the audits module turns bound and equality claims
into machine-checked reports over exhaustive small-instance families.
"""

from .cache import ResultCache, cached_solve, open_cache
from .families import (
    FamilySpec,
    all_trees,
    all_two_connected_outerplanar,
    caterpillar,
    complete,
    complete_bipartite,
    cycle,
    g_k,
    generate,
    path,
    subdivide,
    t_family,
    t_hat,
    tree_canonical_form,
    tree_diam10,
)
from .formats import decode_graph6, emit_edge_list, encode_graph6, parse_edge_list
from .game import (
    INVISIBLE,
    BeliefState,
    GameSpec,
    Observation,
    VisibilityRule,
    full_visibility,
    hyperopic,
    zero_visibility,
)
from .graph import (
    Graph,
    Matching,
    OuterEmbedding,
    blocks,
    build_graph,
    center,
    diameter,
    eccentricities,
    find_outer_embedding,
    is_caterpillar,
    is_tree,
    is_two_connected,
    maximum_matching,
    radius,
    verify_retraction,
)
from .solver import (
    Certificate,
    SolveResult,
    UndecidedError,
    cop_number,
    extract_certificate,
    solve,
    solve_placement,
    solve_with_result,
)
from .strategies import (
    CopPolicy,
    Evaded,
    Timeout,
    Win,
    advance_belief,
    certificate_policy,
    initial_belief,
    matching_policy,
    outerplanar_k2_policy,
    pendant_path_policy,
    stationary_pair_policy,
    tree_k2_policy,
    tree_near_diam_policy,
    verify_policy,
)

__version__ = "0.1.0"

__all__ = [
    "BeliefState",
    "Certificate",
    "CopPolicy",
    "Evaded",
    "FamilySpec",
    "GameSpec",
    "Graph",
    "INVISIBLE",
    "Matching",
    "Observation",
    "OuterEmbedding",
    "ResultCache",
    "SolveResult",
    "Timeout",
    "UndecidedError",
    "VisibilityRule",
    "Win",
    "advance_belief",
    "all_trees",
    "all_two_connected_outerplanar",
    "blocks",
    "build_graph",
    "cached_solve",
    "caterpillar",
    "center",
    "certificate_policy",
    "complete",
    "complete_bipartite",
    "cop_number",
    "cycle",
    "decode_graph6",
    "diameter",
    "eccentricities",
    "emit_edge_list",
    "encode_graph6",
    "extract_certificate",
    "find_outer_embedding",
    "full_visibility",
    "g_k",
    "generate",
    "hyperopic",
    "initial_belief",
    "is_caterpillar",
    "is_tree",
    "is_two_connected",
    "matching_policy",
    "maximum_matching",
    "open_cache",
    "outerplanar_k2_policy",
    "parse_edge_list",
    "path",
    "pendant_path_policy",
    "radius",
    "solve",
    "solve_placement",
    "solve_with_result",
    "stationary_pair_policy",
    "subdivide",
    "t_family",
    "t_hat",
    "tree_canonical_form",
    "tree_diam10",
    "tree_k2_policy",
    "tree_near_diam_policy",
    "verify_policy",
    "verify_retraction",
    "zero_visibility",
]
