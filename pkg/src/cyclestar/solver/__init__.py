from ._accel import USE_NUMBA
from .search import (
    BRUTE_FORCE_MAX_VERTICES,
    EsResult,
    SearchBudget,
    Solver,
    Unknown,
    brute_force_es,
    exact_es,
    false_twin_classes,
    find_irregular_labeling,
    search_order,
)

__all__ = [
    "USE_NUMBA",
    "BRUTE_FORCE_MAX_VERTICES",
    "EsResult",
    "SearchBudget",
    "Solver",
    "Unknown",
    "brute_force_es",
    "exact_es",
    "false_twin_classes",
    "find_irregular_labeling",
    "search_order",
]
