import random

import pytest

from chainsel import builtin_knowledge_base, bigbox_requirements
from chainsel.elicitation import Constraint, Threshold, UserRequirements
from chainsel.kb import (
    AlternativeProfile,
    CriterionSpec,
    ExactValue,
    KnowledgeBase,
    numeric_encode,
)
from chainsel.mcdm import DecisionMatrix, MatrixColumn

ISO_CYCLE = ("security", "efficiency", "reliability", "functionality", "usability")


@pytest.fixture(scope="session")
def kb():
    return builtin_knowledge_base()


@pytest.fixture()
def bigbox(kb):
    return bigbox_requirements(kb)


def random_matrix(rng: random.Random, max_m: int = 8, max_n: int = 8) -> DecisionMatrix:
    """Random positive-valued instance with mixed directions and weights."""
    m = rng.randint(1, max_m)
    n = rng.randint(1, max_n)
    columns = tuple(
        MatrixColumn(
            criterion_id=f"c{j}",
            direction=rng.choice(["benefit", "cost"]),
            weight=rng.uniform(0.05, 5.0),
        )
        for j in range(n)
    )
    x = tuple(
        tuple(rng.uniform(0.01, 1000.0) for _ in range(n)) for _ in range(m)
    )
    return DecisionMatrix(tuple(f"a{i}" for i in range(m)), columns, x)


def random_numeric_kb(rng: random.Random) -> KnowledgeBase:
    """Small synthetic KB of exact-valued numeric criteria."""
    m = rng.randint(2, 6)
    n = rng.randint(2, 6)
    criteria = tuple(
        CriterionSpec(
            id=f"c{j}",
            label=f"C{j}",
            kind="numeric",
            direction=rng.choice(["benefit", "cost"]),
            iso_category=ISO_CYCLE[j % len(ISO_CYCLE)],
        )
        for j in range(n)
    )
    alternatives = tuple(
        AlternativeProfile(
            id=f"a{i}",
            label=f"A{i}",
            consensus="n/a",
            values={c.id: ExactValue(rng.uniform(0.01, 100.0)) for c in criteria},
        )
        for i in range(m)
    )
    return KnowledgeBase(criteria, alternatives, version="test", updated_at="t0")


def append_criterion(kb: KnowledgeBase, rng: random.Random, cid: str) -> KnowledgeBase:
    """The same KB with one more numeric criterion holding random values."""
    extra = CriterionSpec(
        id=cid,
        label=cid.upper(),
        kind="numeric",
        direction=rng.choice(["benefit", "cost"]),
        iso_category="efficiency",
    )
    alternatives = tuple(
        AlternativeProfile(
            id=a.id,
            label=a.label,
            consensus=a.consensus,
            values={**a.values, cid: ExactValue(rng.uniform(0.01, 100.0))},
        )
        for a in kb.alternatives
    )
    return KnowledgeBase(
        kb.criteria + (extra,), alternatives, version=kb.version, updated_at=kb.updated_at
    )


def random_constraint(rng: random.Random, kb, criterion_id: str) -> Constraint:
    """A random well-formed constraint for the given builtin-KB criterion."""
    crit = kb.criterion(criterion_id)
    if crit.kind == "boolean":
        return Constraint(criterion_id, rng.choice(["required", "undesirable"]))
    if crit.kind == "ordinal":
        if rng.random() < 0.3:
            return Constraint(criterion_id, "undesirable")
        level = rng.choice(crit.ordinal_scale.labels)
        return Constraint(criterion_id, "required", Threshold("at_least", level=level))
    observed = [
        numeric_encode(alt.values[criterion_id], crit) for alt in kb.alternatives
    ]
    lo, hi = min(observed), max(observed)
    span = (hi - lo) or 1.0
    value = rng.uniform(lo - 0.2 * span, hi + 0.2 * span)
    if crit.is_percent:
        value = min(max(value, 0.0), 1.0)
    relation = rng.choice(["at_least", "at_most"])
    return Constraint(criterion_id, "required", Threshold(relation, value=value))


def random_requirements(rng: random.Random, kb) -> UserRequirements:
    """Random valid requirements: Likert-ish preferences plus a few constraints."""
    preferences = {
        cid: float(rng.choice([0, 0, 1, 2, 3, 4])) for cid in kb.criterion_ids
    }
    constraints = tuple(
        random_constraint(rng, kb, cid)
        for cid in kb.criterion_ids
        if rng.random() < 0.3
    )
    return UserRequirements(preferences=preferences, constraints=constraints)
