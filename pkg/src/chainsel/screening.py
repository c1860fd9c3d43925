"""Hard-constraint screening: disqualify alternatives before any scoring.

An alternative survives iff it satisfies every constraint; all violations are
collected (not just the first) so a report can fully explain a disqualification.
Screening never looks at preferences, only constraints.
"""

from dataclasses import dataclass

from .elicitation import Constraint, UserRequirements
from .kb import AlternativeProfile, AttributeValue, KnowledgeBase, numeric_encode


@dataclass(frozen=True)
class Violation:
    criterion_id: str
    constraint: Constraint
    actual_value: AttributeValue
    actual_encoded: float

    def describe(self, kb: KnowledgeBase) -> str:
        crit = kb.criterion(self.criterion_id)
        c = self.constraint
        if c.mode == "undesirable":
            return f"{crit.label}: undesirable but present"
        if crit.kind == "boolean":
            return f"{crit.label}: required but false"
        t = c.threshold
        if crit.kind == "ordinal":
            return f"{crit.label}: required at least {t.level!r}, actual {self.actual_value.label!r}"
        rel = ">=" if t.relation == "at_least" else "<="
        unit = f" {crit.unit}" if crit.unit and crit.unit != "%" else ""
        actual = f"{self.actual_encoded:.4g}"
        threshold = f"{t.value:.4g}"
        if crit.is_percent:
            actual = f"{self.actual_encoded:.2%}"
            threshold = f"{t.value:.2%}"
        return f"{crit.label}: required {rel} {threshold}{unit}, actual {actual}{unit}"


@dataclass(frozen=True)
class DisqualificationReport:
    alternative_id: str
    violations: tuple[Violation, ...]


def _satisfies(
    constraint: Constraint, alt: AlternativeProfile, kb: KnowledgeBase, tolerance_pct: float
) -> tuple[bool, AttributeValue, float]:
    crit = kb.criterion(constraint.criterion_id)
    value = alt.values[constraint.criterion_id]
    encoded = numeric_encode(value, crit)

    if constraint.mode == "undesirable":
        return encoded == 0.0, value, encoded
    if crit.kind == "boolean":
        return encoded == 1.0, value, encoded
    if crit.kind == "ordinal":
        floor = crit.ordinal_scale.code(constraint.threshold.level)
        return encoded >= floor, value, encoded
    # numeric: percent criteria get absolute slack, others compare exactly
    slack = tolerance_pct if crit.is_percent else 0.0
    t = constraint.threshold
    if t.relation == "at_least":
        return encoded >= t.value - slack, value, encoded
    return encoded <= t.value + slack, value, encoded


def screen(
    kb: KnowledgeBase, requirements: UserRequirements
) -> tuple[list[AlternativeProfile], list[DisqualificationReport]]:
    """Partition alternatives into qualified (KB order) and disqualified-with-reasons."""
    qualified = []
    reports = []
    for alt in kb.alternatives:
        violations = []
        for constraint in requirements.constraints:
            ok, value, encoded = _satisfies(constraint, alt, kb, requirements.tolerance_pct)
            if not ok:
                violations.append(Violation(constraint.criterion_id, constraint, value, encoded))
        if violations:
            reports.append(DisqualificationReport(alt.id, tuple(violations)))
        else:
            qualified.append(alt)
    return qualified, reports
