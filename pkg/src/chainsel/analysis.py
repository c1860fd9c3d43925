"""Post-ranking analysis: entropy weight correction, stability scans, what-if runs.

Entropy weighting damps criteria whose values are nearly uniform across the
surviving alternatives (high entropy means little discriminating power).  The
combination with user weights is multiplicative with renormalization; a convex
blend would also be defensible but the product rule is the simplest one that
realizes the damping intent.

Stability intervals are found by exhaustive grid scan rather than analytic
derivation: winner regions of the ranking need not be contiguous in general,
so the scan reports the maximal contiguous interval around the current value.
"""

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .elicitation import (
    Constraint,
    LIKERT_SCALE,
    Threshold,
    UserRequirements,
    WeightVector,
    validate_requirements,
)
from .errors import (
    AmbiguousBaselineError,
    DegenerateWeightsError,
    NoActiveCriteriaError,
    RequirementsError,
)
from .kb import KnowledgeBase
from .mcdm import DecisionMatrix, RankingResult, rank_alternatives

PREFERENCE_MIN = 0.0
PREFERENCE_MAX = 4.0
DEFAULT_RESOLUTION = 0.05


@dataclass(frozen=True)
class EntropyWeights:
    """Objective criterion weights derived from value dispersion."""

    weights: dict[str, float]
    entropies: dict[str, float]

    def __getitem__(self, criterion_id: str) -> float:
        return self.weights[criterion_id]


@dataclass(frozen=True)
class StabilityInterval:
    """Maximal probed range of one preference that keeps the same winner."""

    criterion_id: str
    p_low: float
    p_high: float
    winner: str
    resolution: float


def entropy_weights(matrix: DecisionMatrix) -> EntropyWeights:
    """Shannon-entropy weights over the matrix columns.

    p_ij = x_ij / column sum, e_j = -(1/ln m) * sum_i p_ij ln p_ij (zero terms
    contribute nothing), and w_j is the normalized divergence 1 - e_j.
    Constant columns get e_j = 1 and therefore weight 0.
    """
    m = len(matrix.alternatives)
    if m < 2:
        raise DegenerateWeightsError("entropy needs at least two alternatives")
    ln_m = math.log(m)
    entropies: dict[str, float] = {}
    divergences: dict[str, float] = {}
    for j, col in enumerate(matrix.columns):
        values = [matrix.x[i][j] for i in range(m)]
        if any(v < 0 for v in values):
            raise DegenerateWeightsError(
                f"entropy undefined for negative values in criterion '{col.criterion_id}'"
            )
        total = sum(values)
        if total <= 0:
            raise DegenerateWeightsError(
                f"entropy undefined for zero-sum criterion '{col.criterion_id}'"
            )
        if min(values) == max(values):
            # uniform distribution: entropy is exactly 1, not 1 +/- rounding
            e = 1.0
        else:
            e = -sum(
                (v / total) * math.log(v / total) for v in values if v > 0
            ) / ln_m
        entropies[col.criterion_id] = e
        divergences[col.criterion_id] = max(0.0, 1.0 - e)
    total_divergence = sum(divergences.values())
    if total_divergence <= 0:
        raise DegenerateWeightsError("entropy weights undefined: all columns are constant")
    weights = {cid: d / total_divergence for cid, d in divergences.items()}
    return EntropyWeights(weights=weights, entropies=entropies)


def combine_weights(user: WeightVector, entropy: EntropyWeights) -> WeightVector:
    """Renormalized product of user and entropy weights over the same criteria."""
    if set(user.weights) != set(entropy.weights):
        raise ValueError("user and entropy weights cover different criteria")
    products = {cid: user[cid] * entropy[cid] for cid in user.weights}
    total = sum(products.values())
    if total <= 0:
        raise DegenerateWeightsError("combined weights degenerate: every product is zero")
    return WeightVector({cid: p / total for cid, p in products.items()})


def _preference_grid(resolution: float, current: float) -> list[float]:
    steps = int(math.floor(PREFERENCE_MAX / resolution + 1e-9))
    points = {i * resolution for i in range(steps + 1)}
    points.add(PREFERENCE_MAX)
    points.add(current)
    return sorted(points)


def weight_stability_interval(
    kb: KnowledgeBase,
    requirements: UserRequirements,
    criterion_id: str,
    resolution: float = DEFAULT_RESOLUTION,
) -> StabilityInterval:
    """Scan one preference over [0, 4] and return the contiguous same-winner range.

    Other raw preferences stay fixed, weights are re-derived at every grid
    point, and screening is unaffected throughout (constraints are not
    touched).  A grid point where weighting collapses entirely counts as a
    winner change.
    """
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    kb.criterion(criterion_id)  # raises UnknownIdError for foreign ids

    baseline = rank_alternatives(kb, requirements)
    if len(baseline.ordering) < 2:
        raise AmbiguousBaselineError(
            "stability scan needs at least two qualified alternatives"
        )
    top, runner_up = baseline.ordering[0], baseline.ordering[1]
    if baseline.scores[top] == baseline.scores[runner_up]:
        raise AmbiguousBaselineError("baseline ambiguous: top alternatives are tied")

    def winner_at(p: float) -> str | None:
        try:
            return rank_alternatives(kb, requirements.with_preference(criterion_id, p)).winner
        except NoActiveCriteriaError:
            return None

    current = requirements.preference(criterion_id)
    grid = _preference_grid(resolution, current)
    at = grid.index(current)

    low = at
    while low > 0 and winner_at(grid[low - 1]) == top:
        low -= 1
    high = at
    while high < len(grid) - 1 and winner_at(grid[high + 1]) == top:
        high += 1

    return StabilityInterval(
        criterion_id=criterion_id,
        p_low=grid[low],
        p_high=grid[high],
        winner=top,
        resolution=resolution,
    )


@dataclass(frozen=True)
class Edit:
    """One requirements change: a new preference, a new constraint, or both.

    ``clear_constraint`` removes any constraint on the criterion;
    ``set_constraint`` replaces it.  A ``preference`` of None leaves the
    current preference alone.
    """

    criterion_id: str
    preference: float | None = None
    set_constraint: Constraint | None = None
    clear_constraint: bool = False

    def __post_init__(self):
        if self.set_constraint is not None and self.clear_constraint:
            raise RequirementsError(
                f"edit for '{self.criterion_id}' both sets and clears a constraint"
            )
        if self.set_constraint is not None and self.set_constraint.criterion_id != self.criterion_id:
            raise RequirementsError("edit constraint targets a different criterion")


def parse_edit(document: dict) -> Edit:
    """Build an Edit from its wire form.

    {"criterion": id, "preference": <likert label or number>,
     "constraint": {"mode": ..., "threshold": {...}} | null}
    Absent keys leave that part of the requirements untouched; a null
    constraint removes the existing one.
    """
    if not isinstance(document, dict):
        raise RequirementsError("edit must be an object")
    unknown = set(document) - {"criterion", "preference", "constraint"}
    if unknown:
        raise RequirementsError(f"unknown edit keys: {sorted(unknown)}")
    criterion_id = document.get("criterion")
    if not isinstance(criterion_id, str) or not criterion_id:
        raise RequirementsError("edit needs a 'criterion' id")

    preference: float | None = None
    if "preference" in document:
        raw = document["preference"]
        if isinstance(raw, str):
            if raw not in LIKERT_SCALE:
                raise RequirementsError(f"unknown Likert label '{raw}'")
            preference = float(LIKERT_SCALE[raw])
        elif isinstance(raw, (int, float)) and not isinstance(raw, bool):
            preference = float(raw)
            if not math.isfinite(preference) or preference < 0:
                raise RequirementsError("preference must be a finite non-negative number")
        else:
            raise RequirementsError("preference must be a Likert label or a number")

    set_constraint: Constraint | None = None
    clear_constraint = False
    if "constraint" in document:
        raw = document["constraint"]
        if raw is None:
            clear_constraint = True
        elif isinstance(raw, dict):
            mode = raw.get("mode")
            threshold = None
            if "threshold" in raw and raw["threshold"] is not None:
                t = raw["threshold"]
                if not isinstance(t, dict) or "relation" not in t:
                    raise RequirementsError("constraint threshold needs a 'relation'")
                threshold = Threshold(
                    relation=t["relation"],
                    value=t.get("value"),
                    level=t.get("level"),
                )
            set_constraint = Constraint(
                criterion_id=criterion_id, mode=mode, threshold=threshold
            )
        else:
            raise RequirementsError("constraint must be an object or null")

    return Edit(
        criterion_id=criterion_id,
        preference=preference,
        set_constraint=set_constraint,
        clear_constraint=clear_constraint,
    )


def apply_edits(
    requirements: UserRequirements, edits: Iterable[Edit], kb: KnowledgeBase
) -> UserRequirements:
    """Return a new validated requirements object with the edits applied."""
    preferences = dict(requirements.preferences)
    constraints = {c.criterion_id: c for c in requirements.constraints}
    for edit in edits:
        if edit.preference is not None:
            preferences[edit.criterion_id] = edit.preference
        if edit.clear_constraint:
            constraints.pop(edit.criterion_id, None)
        elif edit.set_constraint is not None:
            constraints[edit.criterion_id] = edit.set_constraint
    candidate = UserRequirements(
        preferences=preferences,
        constraints=tuple(constraints.values()),
        tolerance_pct=requirements.tolerance_pct,
    )
    return validate_requirements(candidate, kb)


def what_if(
    kb: KnowledgeBase,
    requirements: UserRequirements,
    edits: Sequence[Edit],
    with_trace: bool = False,
) -> RankingResult:
    """Re-rank under edited requirements, leaving the originals untouched."""
    edited = apply_edits(requirements, edits, kb)
    return rank_alternatives(kb, edited, with_trace=with_trace)
