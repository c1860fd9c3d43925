"""TOPSIS ranking over the screened alternatives.

Pipeline: build the decision matrix over positively weighted criteria,
vector-normalize each column and apply weights, take per-column ideals
(best/worst respecting cost vs benefit direction), measure Euclidean
separations from both ideals, and score each alternative by relative
closeness C = S- / (S+ + S-).

Weights are used as given: closeness is invariant under uniform weight
scaling, so normalized and unnormalized vectors rank identically.
``oracle_topsis`` is a deliberately naive re-implementation kept free of any
shared code, used to cross-check the pipeline in tests.
"""

import math
from dataclasses import dataclass

import numpy as np

from .elicitation import UserRequirements, WeightVector, derive_weights
from .errors import NoActiveCriteriaError
from .kb import AlternativeProfile, KnowledgeBase, numeric_encode
from .screening import DisqualificationReport, screen


@dataclass(frozen=True)
class MatrixColumn:
    criterion_id: str
    direction: str  # "benefit" | "cost"
    weight: float


@dataclass(frozen=True)
class DecisionMatrix:
    """Encoded alternatives x active criteria, with per-column weights > 0."""

    alternatives: tuple[str, ...]
    columns: tuple[MatrixColumn, ...]
    x: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if not self.alternatives or not self.columns:
            raise NoActiveCriteriaError("decision matrix needs at least one row and one column")
        if any(col.weight <= 0 for col in self.columns):
            raise ValueError("zero-weight criteria are excluded at build time")
        if len(self.x) != len(self.alternatives) or any(
            len(row) != len(self.columns) for row in self.x
        ):
            raise ValueError("matrix shape does not match alternatives x columns")

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.x, dtype=float)

    @property
    def weights(self) -> np.ndarray:
        return np.asarray([c.weight for c in self.columns], dtype=float)

    @property
    def directions(self) -> tuple[str, ...]:
        return tuple(c.direction for c in self.columns)


@dataclass(frozen=True)
class TopsisTrace:
    """Intermediate pipeline values kept for explainability."""

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    x: tuple[tuple[float, ...], ...]
    r: tuple[tuple[float, ...], ...]
    v: tuple[tuple[float, ...], ...]
    a_plus: tuple[float, ...]
    a_minus: tuple[float, ...]
    s_plus: tuple[float, ...]
    s_minus: tuple[float, ...]


@dataclass(frozen=True)
class RankingResult:
    """Closeness scores, ordering, and the audit trail of a ranking run."""

    scores: dict[str, float]
    ordering: tuple[str, ...]
    disqualified: tuple[DisqualificationReport, ...]
    weights: WeightVector
    uncontested: bool = False
    trace: TopsisTrace | None = None

    def __post_init__(self):
        object.__setattr__(self, "scores", dict(self.scores))
        object.__setattr__(self, "ordering", tuple(self.ordering))
        object.__setattr__(self, "disqualified", tuple(self.disqualified))

    @property
    def viable(self) -> bool:
        return bool(self.ordering)

    @property
    def winner(self) -> str | None:
        return self.ordering[0] if self.ordering else None


def build_matrix(
    kb: KnowledgeBase, qualified: list[AlternativeProfile], weights: WeightVector
) -> DecisionMatrix:
    """Encode qualified alternatives over the positively weighted criteria (KB order)."""
    if not qualified:
        raise ValueError("cannot build a matrix without qualified alternatives")
    columns = tuple(
        MatrixColumn(c.id, c.direction, weights[c.id])
        for c in kb.criteria
        if weights[c.id] > 0
    )
    if not columns:
        raise NoActiveCriteriaError("no active criteria: every weight is zero")
    rows = tuple(
        tuple(numeric_encode(alt.values[col.criterion_id], kb.criterion(col.criterion_id))
              for col in columns)
        for alt in qualified
    )
    return DecisionMatrix(tuple(a.id for a in qualified), columns, rows)


def normalize_and_weight(matrix: DecisionMatrix) -> np.ndarray:
    """v_ij = w_j * x_ij / sqrt(sum_i x_ij^2); all-zero columns stay zero."""
    x = matrix.array
    norms = np.sqrt((x ** 2).sum(axis=0))
    r = np.divide(x, norms, out=np.zeros_like(x), where=norms > 0)
    return r * matrix.weights


def ideal_solutions(v: np.ndarray, directions) -> tuple[np.ndarray, np.ndarray]:
    """Per-column best (A+) and worst (A-): max/min for benefit, min/max for cost."""
    benefit = np.asarray([d == "benefit" for d in directions])
    a_plus = np.where(benefit, v.max(axis=0), v.min(axis=0))
    a_minus = np.where(benefit, v.min(axis=0), v.max(axis=0))
    return a_plus, a_minus


def separation_measures(
    v: np.ndarray, a_plus: np.ndarray, a_minus: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Euclidean distance of each row to A+ and to A-."""
    s_plus = np.sqrt(((v - a_plus) ** 2).sum(axis=1))
    s_minus = np.sqrt(((v - a_minus) ** 2).sum(axis=1))
    return s_plus, s_minus


def closeness_scores(s_plus: np.ndarray, s_minus: np.ndarray) -> np.ndarray:
    """C_i = S-_i / (S+_i + S-_i); a 0/0 row coincides with both ideals -> 1.0."""
    total = s_plus + s_minus
    return np.divide(s_minus, total, out=np.ones_like(total), where=total > 0)


def topsis_scores(matrix: DecisionMatrix) -> list[float]:
    """Run the full normalize/ideal/separation/closeness pipeline on a matrix."""
    v = normalize_and_weight(matrix)
    a_plus, a_minus = ideal_solutions(v, matrix.directions)
    s_plus, s_minus = separation_measures(v, a_plus, a_minus)
    return closeness_scores(s_plus, s_minus).tolist()


def rank_alternatives(
    kb: KnowledgeBase, requirements: UserRequirements, with_trace: bool = False
) -> RankingResult:
    """Screen, weight, and rank; ties keep KB order; one survivor scores 1.0 uncontested.

    An empty qualified set yields a structured no-viable-alternative result
    (empty ordering, all disqualification reports attached), not an error.
    """
    qualified, reports = screen(kb, requirements)
    weights = derive_weights(requirements, kb)
    if not qualified:
        return RankingResult(
            scores={}, ordering=(), disqualified=tuple(reports), weights=weights
        )

    matrix = build_matrix(kb, qualified, weights)
    v = normalize_and_weight(matrix)
    a_plus, a_minus = ideal_solutions(v, matrix.directions)
    s_plus, s_minus = separation_measures(v, a_plus, a_minus)
    closeness = closeness_scores(s_plus, s_minus)

    scores = {aid: float(c) for aid, c in zip(matrix.alternatives, closeness)}
    ordering = tuple(sorted(scores, key=lambda aid: -scores[aid]))  # stable: KB order on ties

    trace = None
    if with_trace:
        r = np.divide(v, matrix.weights, out=np.zeros_like(v), where=matrix.weights > 0)
        trace = TopsisTrace(
            alternatives=matrix.alternatives,
            criteria=tuple(c.criterion_id for c in matrix.columns),
            x=matrix.x,
            r=tuple(map(tuple, r.tolist())),
            v=tuple(map(tuple, v.tolist())),
            a_plus=tuple(a_plus.tolist()),
            a_minus=tuple(a_minus.tolist()),
            s_plus=tuple(s_plus.tolist()),
            s_minus=tuple(s_minus.tolist()),
        )

    return RankingResult(
        scores=scores,
        ordering=ordering,
        disqualified=tuple(reports),
        weights=weights,
        uncontested=len(qualified) == 1,
        trace=trace,
    )


def oracle_topsis(matrix: DecisionMatrix) -> list[float]:
    """Literal step-by-step transcription used as an independent test oracle.

    Plain loops and math.sqrt only; intentionally shares no code with the
    pipeline above.
    """
    m = len(matrix.alternatives)
    n = len(matrix.columns)
    x = [[float(matrix.x[i][j]) for j in range(n)] for i in range(m)]
    w = [matrix.columns[j].weight for j in range(n)]

    v = [[0.0] * n for _ in range(m)]
    for j in range(n):
        norm = math.sqrt(sum(x[i][j] * x[i][j] for i in range(m)))
        for i in range(m):
            r_ij = x[i][j] / norm if norm > 0 else 0.0
            v[i][j] = r_ij * w[j]

    a_plus = [0.0] * n
    a_minus = [0.0] * n
    for j in range(n):
        col = [v[i][j] for i in range(m)]
        if matrix.columns[j].direction == "benefit":
            a_plus[j], a_minus[j] = max(col), min(col)
        else:
            a_plus[j], a_minus[j] = min(col), max(col)

    scores = []
    for i in range(m):
        s_plus = math.sqrt(sum((v[i][j] - a_plus[j]) ** 2 for j in range(n)))
        s_minus = math.sqrt(sum((v[i][j] - a_minus[j]) ** 2 for j in range(n)))
        scores.append(s_minus / (s_plus + s_minus) if s_plus + s_minus > 0 else 1.0)
    return scores
