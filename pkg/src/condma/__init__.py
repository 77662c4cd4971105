"""condma: two-level designs under conditional main-effect models.

Evaluation of effect-class variances and exact aliasing sequences,
admissibility checking, and minimum-aberration search for regular
two-level designs in which factors 1 and 3 are interpreted conditionally
on their partners 2 and 4.
"""

from . import aberration, catalogs, designs, effects, gf2, modelmat, search, wordcounts
from .aberration import (
    FastEvaluator,
    KSequence,
    compare_k,
    k_sequence_direct,
    k_sequence_fast,
)
from .designs import (
    ConditionReport,
    DesignError,
    FormatError,
    RegularSpec,
    check_conditions,
    check_conditions_regular,
    expand,
    load_design_file,
)
from .effects import PriorSpec, hierarchy_sequence, prior_cov_beta, variance_formula
from .modelmat import info_matrix, optimality_check
from .search import SearchResult, SearchTask, search_ma
from .wordcounts import a_counts, a_reduced_sequence, complement_counts, k_from_counts

__version__ = "0.1.0"

__all__ = [
    "aberration",
    "catalogs",
    "designs",
    "effects",
    "gf2",
    "modelmat",
    "search",
    "wordcounts",
    "FastEvaluator",
    "KSequence",
    "compare_k",
    "k_sequence_direct",
    "k_sequence_fast",
    "ConditionReport",
    "DesignError",
    "FormatError",
    "RegularSpec",
    "check_conditions",
    "check_conditions_regular",
    "expand",
    "load_design_file",
    "PriorSpec",
    "hierarchy_sequence",
    "prior_cov_beta",
    "variance_formula",
    "info_matrix",
    "optimality_check",
    "SearchResult",
    "SearchTask",
    "search_ma",
    "a_counts",
    "a_reduced_sequence",
    "complement_counts",
    "k_from_counts",
    "__version__",
]
