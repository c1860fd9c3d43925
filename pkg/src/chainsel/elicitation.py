"""User requirements: Likert preferences, hard constraints, and weight derivation.

Preferences and constraints are independent axes: a criterion can be required
(screening) while staying indifferent-weighted (ranking), and vice versa.
Criteria the user does not mention default to indifferent.
"""

import json
import math
from dataclasses import dataclass, field, replace

from .errors import NoActiveCriteriaError, RequirementsError
from .kb import KnowledgeBase

# Likert labels and their preference values, in decreasing desirability.
LIKERT_SCALE = {
    "extremely_desirable": 4,
    "quite_desirable": 3,
    "desirable": 2,
    "weakly_desirable": 1,
    "indifferent": 0,
}

DEFAULT_TOLERANCE_PCT = 0.005  # absolute slack on percent-criterion thresholds


@dataclass(frozen=True)
class LikertPreference:
    """One linguistic desirability level and its preference value."""

    label: str
    value: int

    def __post_init__(self):
        if LIKERT_SCALE.get(self.label) != self.value:
            raise RequirementsError(f"not a Likert level: {self.label!r} -> {self.value}")

    @classmethod
    def from_label(cls, label: str) -> "LikertPreference":
        if label not in LIKERT_SCALE:
            raise RequirementsError(
                f"unknown Likert label {label!r} (expected one of: {', '.join(LIKERT_SCALE)})"
            )
        return cls(label, LIKERT_SCALE[label])


@dataclass(frozen=True)
class Threshold:
    """Extremum a required non-boolean criterion must satisfy."""

    relation: str  # "at_least" | "at_most"
    value: float | None = None  # numeric criteria
    level: str | None = None  # ordinal criteria (minimum level label)

    def __post_init__(self):
        if self.relation not in ("at_least", "at_most"):
            raise RequirementsError(f"unknown threshold relation {self.relation!r}")
        if (self.value is None) == (self.level is None):
            raise RequirementsError("threshold carries exactly one of value or level")


@dataclass(frozen=True)
class Constraint:
    """Hard requirement: required (must hold/meet threshold) or undesirable (must be absent)."""

    criterion_id: str
    mode: str  # "required" | "undesirable"
    threshold: Threshold | None = None

    def __post_init__(self):
        if self.mode not in ("required", "undesirable"):
            raise RequirementsError(f"unknown constraint mode {self.mode!r}")
        if self.mode == "undesirable" and self.threshold is not None:
            raise RequirementsError(
                f"{self.criterion_id}: an undesirable constraint carries no threshold"
            )


@dataclass(frozen=True)
class UserRequirements:
    """Preferences (total over KB criteria after defaulting) plus constraints.

    Preference values are kept as plain numbers so sensitivity analysis can
    relax them continuously; documents always set them via Likert labels.
    """

    preferences: dict[str, float] = field(default_factory=dict)
    constraints: tuple[Constraint, ...] = ()
    tolerance_pct: float = DEFAULT_TOLERANCE_PCT

    def __post_init__(self):
        object.__setattr__(self, "preferences", dict(self.preferences))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        seen = set()
        for c in self.constraints:
            if c.criterion_id in seen:
                raise RequirementsError(f"duplicate constraint on {c.criterion_id!r}")
            seen.add(c.criterion_id)
        for cid, p in self.preferences.items():
            if p < 0:
                raise RequirementsError(f"preference for {cid!r} must be >= 0, got {p}")

    def constraint_for(self, criterion_id: str) -> Constraint | None:
        for c in self.constraints:
            if c.criterion_id == criterion_id:
                return c
        return None

    def preference(self, criterion_id: str) -> float:
        return self.preferences.get(criterion_id, 0.0)

    def with_preference(self, criterion_id: str, value: float) -> "UserRequirements":
        prefs = dict(self.preferences)
        prefs[criterion_id] = float(value)
        return replace(self, preferences=prefs)


@dataclass(frozen=True)
class WeightVector:
    """Normalized criterion weights, one per KB criterion, summing to 1."""

    weights: dict[str, float]

    def __post_init__(self):
        object.__setattr__(self, "weights", dict(self.weights))

    def __getitem__(self, criterion_id: str) -> float:
        return self.weights[criterion_id]


def derive_weights(requirements: UserRequirements, kb: KnowledgeBase) -> WeightVector:
    """Divide each preference by the sum of preferences; zero stays zero."""
    prefs = {cid: requirements.preference(cid) for cid in kb.criterion_ids}
    total = sum(prefs.values())
    if total <= 0:
        raise NoActiveCriteriaError("no active criteria: every preference is indifferent")
    return WeightVector({cid: p / total for cid, p in prefs.items()})


def validate_requirements(requirements: UserRequirements, kb: KnowledgeBase) -> UserRequirements:
    """Check ids, kind/threshold compatibility, and apply indifferent-defaulting."""
    known = set(kb.criterion_ids)
    for cid in requirements.preferences:
        if cid not in known:
            raise RequirementsError(f"unknown criterion {cid!r} in preferences")
    for c in requirements.constraints:
        if c.criterion_id not in known:
            raise RequirementsError(f"unknown criterion {c.criterion_id!r} in constraints")
        crit = kb.criterion(c.criterion_id)
        if c.mode == "undesirable":
            if crit.kind == "numeric":
                raise RequirementsError(
                    f"{c.criterion_id}: undesirable applies to boolean/ordinal criteria only"
                )
            continue
        # required
        if crit.kind == "boolean":
            if c.threshold is not None:
                raise RequirementsError(
                    f"{c.criterion_id}: a required boolean criterion carries no threshold"
                )
        elif c.threshold is None:
            raise RequirementsError(
                f"{c.criterion_id}: required {crit.kind} criterion needs a threshold"
            )
        elif crit.kind == "numeric":
            if c.threshold.value is None:
                raise RequirementsError(f"{c.criterion_id}: numeric threshold needs a value")
        else:  # ordinal
            if c.threshold.level is None:
                raise RequirementsError(f"{c.criterion_id}: ordinal threshold needs a level label")
            if c.threshold.relation != "at_least":
                raise RequirementsError(
                    f"{c.criterion_id}: ordinal thresholds are minimum levels (at_least)"
                )
            crit.ordinal_scale.code(c.threshold.level)  # raises on unknown label
    prefs = {cid: float(requirements.preference(cid)) for cid in kb.criterion_ids}
    return replace(requirements, preferences=prefs)


def parse_requirements(document: str | dict, kb: KnowledgeBase) -> UserRequirements:
    """Parse a requirements file document and validate it against the KB."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise RequirementsError(f"requirements document is not valid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise RequirementsError("requirements document must be an object")

    preferences = {}
    for cid, raw in document.get("preferences", {}).items():
        if isinstance(raw, str):
            preferences[str(cid)] = float(LikertPreference.from_label(raw).value)
        elif isinstance(raw, (int, float)) and not isinstance(raw, bool):
            if not math.isfinite(raw) or raw < 0:
                raise RequirementsError(
                    f"preference for {cid!r} must be a finite non-negative number, got {raw!r}"
                )
            preferences[str(cid)] = float(raw)
        else:
            raise RequirementsError(
                f"preference for {cid!r} must be a Likert label or a number, got {raw!r}"
            )

    constraints = []
    for cdoc in document.get("constraints", []):
        if "criterion" not in cdoc:
            raise RequirementsError(f"constraint missing 'criterion': {cdoc!r}")
        threshold = None
        tdoc = cdoc.get("threshold")
        if tdoc is not None:
            threshold = Threshold(
                relation=str(tdoc.get("relation", "at_least")),
                value=float(tdoc["value"]) if "value" in tdoc else None,
                level=str(tdoc["level"]) if "level" in tdoc else None,
            )
        constraints.append(
            Constraint(
                criterion_id=str(cdoc["criterion"]),
                mode=str(cdoc.get("mode", "required")),
                threshold=threshold,
            )
        )

    tolerance = document.get("tolerance_pct", DEFAULT_TOLERANCE_PCT)
    req = UserRequirements(
        preferences=preferences, constraints=tuple(constraints), tolerance_pct=float(tolerance)
    )
    return validate_requirements(req, kb)


def serialize_requirements(requirements: UserRequirements) -> dict:
    """Render requirements back to the file document form.

    Preference values that sit exactly on a Likert level serialize as labels;
    anything else (continuous what-if values) serializes as a number.
    """
    by_value = {v: k for k, v in LIKERT_SCALE.items()}
    prefs = {}
    for cid, p in requirements.preferences.items():
        if p == int(p) and int(p) in by_value:
            prefs[cid] = by_value[int(p)]
        else:
            prefs[cid] = p
    constraints = []
    for c in requirements.constraints:
        doc = {"criterion": c.criterion_id, "mode": c.mode}
        if c.threshold is not None:
            t = {"relation": c.threshold.relation}
            if c.threshold.value is not None:
                t["value"] = c.threshold.value
            if c.threshold.level is not None:
                t["level"] = c.threshold.level
            doc["threshold"] = t
        constraints.append(doc)
    return {
        "preferences": prefs,
        "constraints": constraints,
        "tolerance_pct": requirements.tolerance_pct,
    }


# Requirements of the built-in supply-chain case: low latency mildly desirable,
# energy efficiency strongly desirable, BFT and an easy learning curve desirable;
# smart contracts, one-third BFT, and an advanced storage element are required.
BIGBOX_REQUIREMENTS_DOC = {
    "preferences": {
        "latency": "weakly_desirable",
        "energy_efficient": "quite_desirable",
        "bft_tolerance": "desirable",
        "learning_curve": "desirable",
    },
    "constraints": [
        {"criterion": "bft_tolerance", "mode": "required",
         "threshold": {"value": 0.3333, "relation": "at_least"}},
        {"criterion": "smart_contracts", "mode": "required"},
        {"criterion": "storage_element", "mode": "required",
         "threshold": {"level": "Avancé", "relation": "at_least"}},
    ],
}


def bigbox_requirements(kb: KnowledgeBase) -> UserRequirements:
    """The built-in supply-chain case study requirements, validated against kb."""
    return parse_requirements(BIGBOX_REQUIREMENTS_DOC, kb)
