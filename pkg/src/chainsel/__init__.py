"""Decision support for selecting a blockchain platform.

Screens a catalog of platforms against hard constraints, derives criterion
weights from Likert preferences, and ranks the survivors by closeness to the
ideal solution.  Extras: entropy-based weight correction, weight-stability
intervals, what-if re-ranking, plus a CLI and an HTTP service.
"""

from .analysis import (
    Edit,
    EntropyWeights,
    StabilityInterval,
    combine_weights,
    entropy_weights,
    weight_stability_interval,
    what_if,
)
from .elicitation import (
    Constraint,
    LikertPreference,
    Threshold,
    UserRequirements,
    WeightVector,
    bigbox_requirements,
    derive_weights,
    parse_requirements,
    serialize_requirements,
)
from .errors import (
    AmbiguousBaselineError,
    ChainselError,
    DegenerateWeightsError,
    KBValidationError,
    NoActiveCriteriaError,
    OverrideError,
    RequirementsError,
)
from .kb import (
    AlternativeProfile,
    ApproximateValue,
    BooleanValue,
    BoundedValue,
    CriterionSpec,
    ExactValue,
    KnowledgeBase,
    OrdinalScale,
    OrdinalValue,
    apply_override,
    builtin_knowledge_base,
    load_knowledge_base,
    numeric_encode,
    serialize_knowledge_base,
)
from .mcdm import (
    DecisionMatrix,
    MatrixColumn,
    RankingResult,
    TopsisTrace,
    build_matrix,
    closeness_scores,
    ideal_solutions,
    normalize_and_weight,
    oracle_topsis,
    rank_alternatives,
    separation_measures,
    topsis_scores,
)
from .screening import DisqualificationReport, Violation, screen

__version__ = "0.1.0"

__all__ = [
    "AlternativeProfile",
    "AmbiguousBaselineError",
    "ApproximateValue",
    "BooleanValue",
    "BoundedValue",
    "ChainselError",
    "Constraint",
    "CriterionSpec",
    "DecisionMatrix",
    "DegenerateWeightsError",
    "DisqualificationReport",
    "Edit",
    "EntropyWeights",
    "ExactValue",
    "KBValidationError",
    "KnowledgeBase",
    "LikertPreference",
    "MatrixColumn",
    "NoActiveCriteriaError",
    "OrdinalScale",
    "OrdinalValue",
    "OverrideError",
    "RankingResult",
    "RequirementsError",
    "StabilityInterval",
    "Threshold",
    "TopsisTrace",
    "UserRequirements",
    "Violation",
    "WeightVector",
    "apply_override",
    "bigbox_requirements",
    "build_matrix",
    "builtin_knowledge_base",
    "closeness_scores",
    "combine_weights",
    "derive_weights",
    "entropy_weights",
    "ideal_solutions",
    "load_knowledge_base",
    "normalize_and_weight",
    "numeric_encode",
    "oracle_topsis",
    "parse_requirements",
    "rank_alternatives",
    "screen",
    "separation_measures",
    "serialize_knowledge_base",
    "serialize_requirements",
    "topsis_scores",
    "weight_stability_interval",
    "what_if",
]
