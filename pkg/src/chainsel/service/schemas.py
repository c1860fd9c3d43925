"""Request and response models for the HTTP service.

Request bodies mirror the file formats; pydantic checks the shape, then the
core parsers re-validate semantics against the live KB so the service and the
CLI reject inputs identically.
"""

from pydantic import BaseModel, Field


class ThresholdModel(BaseModel):
    relation: str = "at_least"
    value: float | None = None
    level: str | None = None


class ConstraintModel(BaseModel):
    criterion: str
    mode: str = "required"
    threshold: ThresholdModel | None = None


class RequirementsModel(BaseModel):
    preferences: dict[str, str | float] = Field(default_factory=dict)
    constraints: list[ConstraintModel] = Field(default_factory=list)
    tolerance_pct: float | None = None

    def to_document(self) -> dict:
        doc: dict = {
            "preferences": dict(self.preferences),
            "constraints": [
                c.model_dump(exclude_none=True) for c in self.constraints
            ],
        }
        if self.tolerance_pct is not None:
            doc["tolerance_pct"] = self.tolerance_pct
        return doc


class RankRequest(BaseModel):
    requirements: RequirementsModel


class SensitivityRequest(BaseModel):
    requirements: RequirementsModel
    criterion: str
    resolution: float = Field(default=0.05, gt=0)


class WhatIfRequest(BaseModel):
    requirements: RequirementsModel
    # Edits stay raw dicts: a null constraint clears, an absent key leaves the
    # constraint untouched, and pydantic cannot tell those apart.
    edits: list[dict] = Field(default_factory=list)


class OverrideRequest(BaseModel):
    alternative: str
    criterion: str
    value: float


class OverrideResponse(BaseModel):
    kb_version: str
    kb_updated_at: str
    alternative: str
    criterion: str
    value: float


class IntervalResponse(BaseModel):
    kb_version: str
    criterion: str
    p_low: float
    p_high: float
    winner: str
    resolution: float
