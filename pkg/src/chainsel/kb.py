"""Knowledge base: criterion/alternative schema, the built-in platform catalog,
numeric encoding of heterogeneous attribute values, and benchmark overrides.

The catalog stores five kinds of cell values: booleans, exact numbers,
approximate numbers (figures that vary with network topology and node
hardware), bounded figures ("< 1 s"), and ordinal feature levels. Percent
criteria (unit ``"%"``) store fractions of 1. Every value encodes to a finite
non-negative float so the ranking engine can treat the matrix uniformly.
"""

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .errors import KBValidationError, OverrideError, UnknownIdError

KINDS = ("boolean", "numeric", "ordinal")
DIRECTIONS = ("benefit", "cost")
ISO_CATEGORIES = ("security", "efficiency", "reliability", "functionality", "usability")
PROVENANCES = ("catalog", "benchmark-override")

BUILTIN_UPDATED_AT = "2020-06-01T00:00:00Z"


@dataclass(frozen=True)
class OrdinalScale:
    """Ordered levels mapped to codes in [0, 1], strictly increasing."""

    levels: tuple[tuple[str, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple((str(l), float(c)) for l, c in self.levels))
        if len(self.levels) < 2:
            raise KBValidationError("ordinal scale needs at least 2 levels")
        codes = [c for _, c in self.levels]
        if any(not (0.0 <= c <= 1.0) for c in codes):
            raise KBValidationError("ordinal codes must lie in [0, 1]")
        if any(b <= a for a, b in zip(codes, codes[1:])):
            raise KBValidationError("ordinal codes must be strictly increasing")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(l for l, _ in self.levels)

    def code(self, label: str) -> float:
        for l, c in self.levels:
            if l == label:
                return c
        raise KBValidationError(f"unknown ordinal label {label!r} (scale: {', '.join(self.labels)})")


@dataclass(frozen=True)
class CriterionSpec:
    """One quality attribute: how it is typed, scaled, and optimized."""

    id: str
    label: str
    kind: str
    direction: str
    iso_category: str
    unit: str | None = None
    ordinal_scale: OrdinalScale | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise KBValidationError(f"criterion {self.id!r}: unknown kind {self.kind!r}")
        if self.direction not in DIRECTIONS:
            raise KBValidationError(f"criterion {self.id!r}: unknown direction {self.direction!r}")
        if self.iso_category not in ISO_CATEGORIES:
            raise KBValidationError(f"criterion {self.id!r}: unknown iso_category {self.iso_category!r}")
        if (self.kind == "ordinal") != (self.ordinal_scale is not None):
            raise KBValidationError(
                f"criterion {self.id!r}: ordinal_scale is required exactly when kind is 'ordinal'"
            )

    @property
    def is_percent(self) -> bool:
        return self.unit == "%"


# --- attribute value variants ------------------------------------------------


@dataclass(frozen=True)
class BooleanValue:
    value: bool


@dataclass(frozen=True)
class ExactValue:
    value: float
    provenance: str = "catalog"


@dataclass(frozen=True)
class ApproximateValue:
    """Catalog figure subject to variation; can be pinned by a benchmark."""

    value: float
    provenance: str = "catalog"


@dataclass(frozen=True)
class BoundedValue:
    """One-sided bound such as "< 1"; encodes to its limit."""

    limit: float
    relation: str  # "below" | "above"
    provenance: str = "catalog"

    def __post_init__(self):
        if self.relation not in ("below", "above"):
            raise KBValidationError(f"bounded value: unknown relation {self.relation!r}")


@dataclass(frozen=True)
class OrdinalValue:
    label: str


AttributeValue = BooleanValue | ExactValue | ApproximateValue | BoundedValue | OrdinalValue


def _check_provenance(value: AttributeValue, where: str) -> None:
    prov = getattr(value, "provenance", None)
    if prov is not None and prov not in PROVENANCES:
        raise KBValidationError(f"{where}: unknown provenance {prov!r}")


def numeric_encode(value: AttributeValue, criterion: CriterionSpec) -> float:
    """Encode a cell value to a float on the criterion's scale.

    Booleans map to 0/1, bounded values collapse to their limit, ordinal
    labels map to their scale code. Raises on a kind-incompatible value.
    """
    if criterion.kind == "boolean":
        if isinstance(value, BooleanValue):
            return 1.0 if value.value else 0.0
    elif criterion.kind == "numeric":
        if isinstance(value, (ExactValue, ApproximateValue)):
            return float(value.value)
        if isinstance(value, BoundedValue):
            return float(value.limit)
    elif criterion.kind == "ordinal":
        if isinstance(value, OrdinalValue):
            return criterion.ordinal_scale.code(value.label)
    raise KBValidationError(
        f"value {value!r} is not compatible with {criterion.kind} criterion {criterion.id!r}"
    )


# --- profiles and the knowledge base -----------------------------------------


@dataclass(frozen=True)
class AlternativeProfile:
    """One platform: informational consensus string plus a value per criterion."""

    id: str
    label: str
    consensus: str
    values: dict[str, AttributeValue] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", dict(self.values))


@dataclass(frozen=True)
class KnowledgeBase:
    """Immutable catalog of criteria and alternative profiles.

    The version changes whenever any value changes, so consumers can judge
    staleness and prove which catalog produced a ranking.
    """

    criteria: tuple[CriterionSpec, ...]
    alternatives: tuple[AlternativeProfile, ...]
    version: str
    updated_at: str

    def __post_init__(self):
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        self._validate()

    def _validate(self) -> None:
        seen = set()
        for c in self.criteria:
            if c.id in seen:
                raise KBValidationError(f"duplicate criterion id {c.id!r}")
            seen.add(c.id)
        seen = set()
        for a in self.alternatives:
            if a.id in seen:
                raise KBValidationError(f"duplicate alternative id {a.id!r}")
            seen.add(a.id)

        by_id = {c.id: c for c in self.criteria}
        for alt in self.alternatives:
            missing = [c.id for c in self.criteria if c.id not in alt.values]
            if missing:
                pairs = ", ".join(f"({alt.id}, {cid})" for cid in missing)
                raise KBValidationError(f"missing values: {pairs}")
            for cid, value in alt.values.items():
                if cid not in by_id:
                    raise KBValidationError(f"alternative {alt.id!r}: unknown criterion {cid!r}")
                crit = by_id[cid]
                _check_provenance(value, f"cell ({alt.id}, {cid})")
                try:
                    encoded = numeric_encode(value, crit)
                except KBValidationError as exc:
                    raise KBValidationError(f"cell ({alt.id}, {cid}): {exc}") from None
                if not (encoded == encoded and abs(encoded) != float("inf")):
                    raise KBValidationError(f"cell ({alt.id}, {cid}): value is not finite")
                if encoded < 0:
                    raise KBValidationError(f"cell ({alt.id}, {cid}): negative values are not supported")
                if crit.is_percent and encoded > 1.0:
                    raise KBValidationError(
                        f"cell ({alt.id}, {cid}): percent criteria store fractions of 1, got {encoded}"
                    )

    @property
    def criterion_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.criteria)

    def criterion(self, criterion_id: str) -> CriterionSpec:
        for c in self.criteria:
            if c.id == criterion_id:
                return c
        raise UnknownIdError(f"unknown criterion {criterion_id!r}")

    def alternative(self, alternative_id: str) -> AlternativeProfile:
        for a in self.alternatives:
            if a.id == alternative_id:
                return a
        raise UnknownIdError(f"unknown alternative {alternative_id!r}")


def apply_override(
    kb: KnowledgeBase, alternative_id: str, criterion_id: str, measured: float
) -> KnowledgeBase:
    """Pin a variable cell to a benchmark measurement, copy-on-write.

    Only approximate/bounded catalog figures (or a previous measurement)
    may be overridden; exact catalog facts, booleans, and ordinal levels
    are not measurement-tunable.
    """
    alt = kb.alternative(alternative_id)
    kb.criterion(criterion_id)
    cell = alt.values[criterion_id]
    replaceable = isinstance(cell, (ApproximateValue, BoundedValue)) or (
        isinstance(cell, ExactValue) and cell.provenance == "benchmark-override"
    )
    if not replaceable:
        raise OverrideError(
            f"cell ({alternative_id}, {criterion_id}) is a catalog fact ({type(cell).__name__}); "
            "only approximate or bounded values take measurements"
        )
    new_values = dict(alt.values)
    new_values[criterion_id] = ExactValue(float(measured), provenance="benchmark-override")
    new_alt = AlternativeProfile(id=alt.id, label=alt.label, consensus=alt.consensus, values=new_values)
    alternatives = tuple(new_alt if a.id == alternative_id else a for a in kb.alternatives)
    now = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    return KnowledgeBase(
        criteria=kb.criteria,
        alternatives=alternatives,
        version=_content_version(kb.criteria, alternatives),
        updated_at=now,
    )


# --- (de)serialization --------------------------------------------------------


def value_to_document(value: AttributeValue) -> dict:
    if isinstance(value, BooleanValue):
        return {"bool": value.value}
    if isinstance(value, ExactValue):
        doc = {"exact": value.value}
    elif isinstance(value, ApproximateValue):
        doc = {"approx": value.value}
    elif isinstance(value, BoundedValue):
        doc = {"bounded": {"limit": value.limit, "relation": value.relation}}
    elif isinstance(value, OrdinalValue):
        return {"ordinal": value.label}
    else:
        raise KBValidationError(f"unserializable value {value!r}")
    if value.provenance != "catalog":
        doc["provenance"] = value.provenance
    return doc


def _value_from_doc(doc: dict, where: str) -> AttributeValue:
    if not isinstance(doc, dict):
        raise KBValidationError(f"{where}: expected a value object, got {doc!r}")
    prov = doc.get("provenance", "catalog")
    if "bool" in doc:
        return BooleanValue(bool(doc["bool"]))
    if "exact" in doc:
        return ExactValue(float(doc["exact"]), provenance=prov)
    if "approx" in doc:
        return ApproximateValue(float(doc["approx"]), provenance=prov)
    if "bounded" in doc:
        b = doc["bounded"]
        try:
            return BoundedValue(float(b["limit"]), str(b["relation"]), provenance=prov)
        except (KeyError, TypeError) as exc:
            raise KBValidationError(f"{where}: malformed bounded value: {exc}") from None
    if "ordinal" in doc:
        return OrdinalValue(str(doc["ordinal"]))
    raise KBValidationError(f"{where}: value object has no recognized variant key")


def serialize_knowledge_base(kb: KnowledgeBase) -> dict:
    """Render the KB to its file document (JSON-compatible object tree)."""
    criteria = []
    for c in kb.criteria:
        doc = {"id": c.id, "label": c.label, "kind": c.kind, "direction": c.direction,
               "iso_category": c.iso_category}
        if c.unit is not None:
            doc["unit"] = c.unit
        if c.ordinal_scale is not None:
            doc["ordinal_scale"] = [{"label": l, "code": code} for l, code in c.ordinal_scale.levels]
        criteria.append(doc)
    alternatives = [
        {
            "id": a.id,
            "label": a.label,
            "consensus": a.consensus,
            "values": {cid: value_to_document(a.values[cid]) for cid in kb.criterion_ids},
        }
        for a in kb.alternatives
    ]
    return {
        "version": kb.version,
        "updated_at": kb.updated_at,
        "criteria": criteria,
        "alternatives": alternatives,
    }


def load_knowledge_base(document: str | dict) -> KnowledgeBase:
    """Parse and validate a KB file document; inverse of serialize."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise KBValidationError(f"KB document is not valid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise KBValidationError("KB document must be an object")

    criteria = []
    for cdoc in document.get("criteria", []):
        try:
            scale = None
            if "ordinal_scale" in cdoc and cdoc["ordinal_scale"] is not None:
                scale = OrdinalScale(tuple((lv["label"], lv["code"]) for lv in cdoc["ordinal_scale"]))
            criteria.append(
                CriterionSpec(
                    id=str(cdoc["id"]),
                    label=str(cdoc.get("label", cdoc["id"])),
                    kind=str(cdoc["kind"]),
                    direction=str(cdoc["direction"]),
                    iso_category=str(cdoc["iso_category"]),
                    unit=cdoc.get("unit"),
                    ordinal_scale=scale,
                )
            )
        except KeyError as exc:
            raise KBValidationError(f"criterion {cdoc.get('id', '?')!r}: missing field {exc}") from None

    alternatives = []
    for adoc in document.get("alternatives", []):
        aid = str(adoc.get("id", "?"))
        try:
            raw_values = adoc["values"]
        except KeyError:
            raise KBValidationError(f"alternative {aid!r}: missing field 'values'") from None
        values = {
            str(cid): _value_from_doc(vdoc, f"cell ({aid}, {cid})") for cid, vdoc in raw_values.items()
        }
        alternatives.append(
            AlternativeProfile(
                id=aid,
                label=str(adoc.get("label", aid)),
                consensus=str(adoc.get("consensus", "")),
                values=values,
            )
        )

    return KnowledgeBase(
        criteria=tuple(criteria),
        alternatives=tuple(alternatives),
        version=str(document.get("version", "unversioned")),
        updated_at=str(document.get("updated_at", "")),
    )


def _content_version(criteria, alternatives) -> str:
    probe = KnowledgeBase.__new__(KnowledgeBase)
    object.__setattr__(probe, "criteria", tuple(criteria))
    object.__setattr__(probe, "alternatives", tuple(alternatives))
    object.__setattr__(probe, "version", "")
    object.__setattr__(probe, "updated_at", "")
    doc = serialize_knowledge_base(probe)
    payload = {"criteria": doc["criteria"], "alternatives": doc["alternatives"]}
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()[:12]


# --- built-in catalog ----------------------------------------------------------

FEATURE_SCALE = OrdinalScale((("Non", 0.0), ("Basique", 0.5), ("Avancé", 1.0)))
LEARNING_SCALE = OrdinalScale((("Faible", 0.2), ("Moyenne", 0.4), ("Élevée", 0.6), ("Très élevé", 0.8)))

_BUILTIN_CRITERIA = (
    CriterionSpec("public_access", "Publicly open", "boolean", "benefit", "security"),
    CriterionSpec("permissions", "Permission management", "boolean", "benefit", "security"),
    CriterionSpec("native_encryption", "Native encryption", "boolean", "benefit", "security"),
    CriterionSpec("throughput", "Throughput", "numeric", "benefit", "efficiency", unit="tx/s"),
    CriterionSpec("latency", "Latency", "numeric", "cost", "efficiency", unit="s"),
    CriterionSpec("energy_efficient", "Energy efficient", "boolean", "benefit", "efficiency"),
    CriterionSpec("bft_tolerance", "Byzantine fault tolerance", "numeric", "benefit", "reliability", unit="%"),
    CriterionSpec("smart_contracts", "Smart contracts", "boolean", "benefit", "functionality"),
    CriterionSpec("cryptocurrency", "Native cryptocurrency", "boolean", "benefit", "functionality"),
    CriterionSpec("storage_element", "Storage element", "ordinal", "benefit", "functionality",
                  ordinal_scale=FEATURE_SCALE),
    CriterionSpec("compute_element", "Compute element", "ordinal", "benefit", "functionality",
                  ordinal_scale=FEATURE_SCALE),
    CriterionSpec("asset_manager", "Asset manager element", "ordinal", "benefit", "functionality",
                  ordinal_scale=FEATURE_SCALE),
    CriterionSpec("software_connector", "Software connector", "ordinal", "benefit", "functionality",
                  ordinal_scale=FEATURE_SCALE),
    CriterionSpec("learning_curve", "Learning curve", "ordinal", "cost", "usability",
                  ordinal_scale=LEARNING_SCALE),
)

_B, _E, _A, _O = BooleanValue, ExactValue, ApproximateValue, OrdinalValue

_BUILTIN_ALTERNATIVES = (
    AlternativeProfile("bitcoin", "Bitcoin, PoW", "PoW", {
        "public_access": _B(True), "permissions": _B(False), "native_encryption": _B(False),
        "throughput": _E(3.8), "latency": _E(3600), "energy_efficient": _B(False),
        "bft_tolerance": _E(0.5),
        "smart_contracts": _B(False), "cryptocurrency": _B(True),
        "storage_element": _O("Basique"), "compute_element": _O("Non"),
        "asset_manager": _O("Basique"), "software_connector": _O("Non"),
        "learning_curve": _O("Faible"),
    }),
    AlternativeProfile("ethereum_pow", "Ethereum, PoW", "PoW", {
        "public_access": _B(True), "permissions": _B(False), "native_encryption": _B(False),
        "throughput": _E(15), "latency": _E(180), "energy_efficient": _B(False),
        "bft_tolerance": _E(0.5),
        "smart_contracts": _B(True), "cryptocurrency": _B(True),
        "storage_element": _O("Avancé"), "compute_element": _O("Avancé"),
        "asset_manager": _O("Avancé"), "software_connector": _O("Avancé"),
        "learning_curve": _O("Moyenne"),
    }),
    AlternativeProfile("ethereum_poa", "Ethereum, PoA", "PoA", {
        "public_access": _B(False), "permissions": _B(False), "native_encryption": _B(False),
        "throughput": _A(100), "latency": _A(10), "energy_efficient": _B(True),
        "bft_tolerance": _E(0.33),
        "smart_contracts": _B(True), "cryptocurrency": _B(True),
        "storage_element": _O("Avancé"), "compute_element": _O("Avancé"),
        "asset_manager": _O("Avancé"), "software_connector": _O("Avancé"),
        "learning_curve": _O("Moyenne"),
    }),
    AlternativeProfile("hyperledger_fabric", "Hyperledger Fabric, Raft", "Raft", {
        "public_access": _B(False), "permissions": _B(True), "native_encryption": _B(True),
        "throughput": _A(1000), "latency": BoundedValue(1, "below"), "energy_efficient": _B(True),
        "bft_tolerance": _E(0.0),
        "smart_contracts": _B(True), "cryptocurrency": _B(False),
        "storage_element": _O("Avancé"), "compute_element": _O("Avancé"),
        "asset_manager": _O("Avancé"), "software_connector": _O("Avancé"),
        "learning_curve": _O("Très élevé"),
    }),
    AlternativeProfile("corda", "Corda, PBFT", "PBFT", {
        "public_access": _B(False), "permissions": _B(True), "native_encryption": _B(True),
        "throughput": _A(1000), "latency": BoundedValue(1, "below"), "energy_efficient": _B(True),
        "bft_tolerance": _E(0.33),
        "smart_contracts": _B(True), "cryptocurrency": _B(False),
        "storage_element": _O("Avancé"), "compute_element": _O("Avancé"),
        "asset_manager": _O("Avancé"), "software_connector": _O("Avancé"),
        "learning_curve": _O("Très élevé"),
    }),
)


def builtin_knowledge_base() -> KnowledgeBase:
    """The built-in catalog: 5 platforms scored on 14 criteria.

    The consensus algorithm is informational metadata on each profile, not a
    scored criterion. Feature-level and learning-curve ordinal codes follow
    the scales above; the two unprinted learning levels are interpolated at a
    uniform 0.2 spacing.
    """
    return KnowledgeBase(
        criteria=_BUILTIN_CRITERIA,
        alternatives=_BUILTIN_ALTERNATIVES,
        version="builtin-" + _content_version(_BUILTIN_CRITERIA, _BUILTIN_ALTERNATIVES),
        updated_at=BUILTIN_UPDATED_AT,
    )
