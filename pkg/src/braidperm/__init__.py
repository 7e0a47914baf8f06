"""Exact permutation representations of braid groups.

Construction of the model families, verification of the braid relations,
structure analysis (supports, goodness, orbits, retractions), conjugacy
classification with a complete backtracking search, coset-action derived
representations, and brute-force oracles for all of the above.
"""

from .analysis import (
    GoodnessVerdict,
    RSubcomponent,
    analysis_report,
    full_r_subcomponent,
    goodness,
    intersect_stat,
    is_cyclic,
    is_transitive,
    near_canonical_gap_ok,
    orbit,
    r_components,
    reduction,
    retraction,
    supp_stat,
)
from .blocks import BlockPermSpec, block_cycle, block_point
from .conjugacy import (
    ClassCountResult,
    NormalForm,
    class_count,
    find_conjugator,
    minimal_annihilator,
    normalize_model,
)
from .cosets import (
    CosetSpace,
    coset_space,
    derived_hom,
    pair_stabilizer_generators,
    two_subset_action,
    two_subset_via_cosets,
)
from .perm import (
    Permutation,
    all_permutations,
    commutes,
    format_cycles,
    is_braid_like,
    parse_cycles,
    random_permutation,
)
from .reps import (
    BraidRep,
    ModelParams,
    RelationReport,
    block_model_rep,
    block_model_rep_unchecked,
    canonical_model_params,
    canonical_rep,
    disjoint_product,
    interleaving_rep,
    interleaving_spec,
    model_2k,
    model_window_spec,
    verify_braid_relations,
    word_image,
)
from .search import (
    SearchReport,
    canonical_degree3_reps,
    enumerate_t_tables,
    random_valid_params,
    standardize_supp2m,
    verify_m3_standardness,
)

__version__ = "0.1.0"
