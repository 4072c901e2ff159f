"""Ordinal approximation algorithms for metric matching problems.

Algorithms see only preference rankings; the hidden weights enter only
through the exact oracles and the ratio-verification harness.
"""

from .core import (
    EdgePool,
    Matching,
    RandomSource,
    expected_random_weight,
    find_undominated,
    greedy_k_matching,
    greedy_ratio_bound,
    hybrid_matching,
    matching_weight,
    random_k_matching,
)
from .errors import BudgetError, EmptyPoolError, MalformedInstanceError
from .harness import (
    Fixture,
    FixtureCheck,
    RatioReport,
    TrialConfig,
    all_fixtures,
    build_fixture_mixture_gap,
    build_fixture_mutual_top_pairs,
    build_fixture_randomization_floor,
    default_bound,
    hybrid_bound,
    report_emit,
    run_trials,
)
from .instance import (
    GENERATOR_FAMILIES,
    GeneratorSpec,
    PreferenceProfile,
    WeightedInstance,
    check_friendship,
    derive_preferences,
    generate,
    load_instance,
    profile_consistent,
    save_instance,
    validate_metric,
)
from .oracle import (
    DEFAULT_BUDGET,
    OracleBudget,
    opt_densest,
    opt_k_sum,
    opt_matching,
    opt_tsp,
)
from .reductions import (
    Clustering,
    Path,
    Subset,
    Tour,
    cluster_weight,
    matching_to_clusters,
    matching_to_subset,
    matching_to_tour,
    path_completion,
    path_weight,
    subset_weight,
    tour_weight,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "Clustering",
    "DEFAULT_BUDGET",
    "EdgePool",
    "EmptyPoolError",
    "Fixture",
    "FixtureCheck",
    "GENERATOR_FAMILIES",
    "GeneratorSpec",
    "MalformedInstanceError",
    "Matching",
    "OracleBudget",
    "Path",
    "PreferenceProfile",
    "RandomSource",
    "RatioReport",
    "Subset",
    "Tour",
    "TrialConfig",
    "WeightedInstance",
    "all_fixtures",
    "build_fixture_mixture_gap",
    "build_fixture_mutual_top_pairs",
    "build_fixture_randomization_floor",
    "check_friendship",
    "cluster_weight",
    "default_bound",
    "derive_preferences",
    "expected_random_weight",
    "find_undominated",
    "generate",
    "greedy_k_matching",
    "greedy_ratio_bound",
    "hybrid_bound",
    "hybrid_matching",
    "load_instance",
    "matching_to_clusters",
    "matching_to_subset",
    "matching_to_tour",
    "matching_weight",
    "opt_densest",
    "opt_k_sum",
    "opt_matching",
    "opt_tsp",
    "path_completion",
    "path_weight",
    "profile_consistent",
    "random_k_matching",
    "report_emit",
    "run_trials",
    "save_instance",
    "subset_weight",
    "tour_weight",
    "validate_metric",
]
