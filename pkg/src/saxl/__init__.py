# Saxl Module - S-Vector Search, Durfee-k Reduction, Family Inductions, Campaigns, Statistics
from src.saxl.report import (
    BRUTE_FORCED,
    CERTIFIED,
    FAILED,
    TargetRecord,
    VerificationReport,
)
from src.saxl.select_vector import (
    dominates_partition,
    find_select_vector,
    iter_select_vectors,
    max_length,
    search_order,
)
from src.saxl.decomposition import (
    ARM,
    LEG,
    DecompositionStep,
    classify_strip,
    decompose,
    iter_decompositions,
    lemma_tau_three_certificate,
)
from src.saxl.reduction import HARD_CASES_M10, StaircaseReducer, hard_case_m10, reduce_durfee_k
from src.saxl.families import (
    FamilyBuilder,
    caret_double_certificate,
    caret_hook_certificate,
    chopped_double_certificate,
    chopped_hook_certificate,
    staircase_hook_certificate,
)
from src.saxl.campaigns import (
    FAMILIES,
    campaign_size,
    certificate_filename,
    certificate_path,
    family_targets,
    verify_family,
)
from src.saxl.staircase_like import (
    EXCLUDED_SIZES,
    envelope,
    staircase_decomposition,
    staircase_like,
    verify_generalized_saxl,
)
from src.saxl.statistics import (
    DominanceStats,
    dominance_stats,
    dominance_table,
    is_conjugate_upward,
    is_graphical,
    pigeonhole_witness,
    random_durfee_partition,
    reduction_bound,
    weight_threshold,
)

__all__ = [
    "BRUTE_FORCED", "CERTIFIED", "FAILED", "TargetRecord", "VerificationReport",
    "dominates_partition", "find_select_vector", "iter_select_vectors", "max_length", "search_order",
    "ARM", "LEG", "DecompositionStep", "classify_strip", "decompose", "iter_decompositions",
    "lemma_tau_three_certificate",
    "HARD_CASES_M10", "StaircaseReducer", "hard_case_m10", "reduce_durfee_k",
    "FamilyBuilder", "caret_double_certificate", "caret_hook_certificate", "chopped_double_certificate",
    "chopped_hook_certificate", "staircase_hook_certificate",
    "FAMILIES", "campaign_size", "certificate_filename", "certificate_path", "family_targets",
    "verify_family",
    "EXCLUDED_SIZES", "envelope", "staircase_decomposition", "staircase_like", "verify_generalized_saxl",
    "DominanceStats", "dominance_stats", "dominance_table", "is_conjugate_upward", "is_graphical",
    "pigeonhole_witness", "random_durfee_partition", "reduction_bound", "weight_threshold",
]
