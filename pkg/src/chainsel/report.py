"""Report rendering shared by the CLI and the HTTP service.

Both front ends build the same machine-readable document, so their scores
agree to the last digit by construction; the table renderer is a plain-text
view over that document.  Document construction is deterministic: key order
is fixed, so serializing the same (KB version, requirements) twice gives
byte-identical output.
"""

from dataclasses import dataclass

from .analysis import StabilityInterval
from .elicitation import Threshold
from .kb import KnowledgeBase, value_to_document
from .mcdm import RankingResult

SCORE_DECIMALS = 8


def format_score(score: float) -> str:
    return f"{score:.{SCORE_DECIMALS}f}"


def _threshold_document(threshold: Threshold | None) -> dict | None:
    if threshold is None:
        return None
    doc = {"relation": threshold.relation}
    if threshold.value is not None:
        doc["value"] = threshold.value
    if threshold.level is not None:
        doc["level"] = threshold.level
    return doc


def ranking_document(
    kb: KnowledgeBase, result: RankingResult, include_trace: bool = False
) -> dict:
    """Machine-readable ranking response; weights in KB order, scores ranked."""
    doc = {
        "kb_version": kb.version,
        "kb_updated_at": kb.updated_at,
        "weights": {cid: result.weights[cid] for cid in kb.criterion_ids},
        "scores": {aid: result.scores[aid] for aid in result.ordering},
        "ordering": list(result.ordering),
        "winner": result.winner,
        "uncontested": result.uncontested,
        "disqualified": [
            {
                "alternative": rep.alternative_id,
                "label": kb.alternative(rep.alternative_id).label,
                "violations": [
                    {
                        "criterion": v.criterion_id,
                        "mode": v.constraint.mode,
                        "threshold": _threshold_document(v.constraint.threshold),
                        "actual": value_to_document(v.actual_value),
                        "encoded": v.actual_encoded,
                        "message": v.describe(kb),
                    }
                    for v in rep.violations
                ],
            }
            for rep in result.disqualified
        ],
    }
    if include_trace and result.trace is not None:
        t = result.trace
        doc["trace"] = {
            "alternatives": list(t.alternatives),
            "criteria": list(t.criteria),
            "matrix": [list(row) for row in t.x],
            "normalized": [list(row) for row in t.r],
            "weighted": [list(row) for row in t.v],
            "ideal_best": list(t.a_plus),
            "ideal_worst": list(t.a_minus),
            "separation_best": list(t.s_plus),
            "separation_worst": list(t.s_minus),
        }
    return doc


def interval_document(kb: KnowledgeBase, interval: StabilityInterval) -> dict:
    return {
        "kb_version": kb.version,
        "criterion": interval.criterion_id,
        "p_low": interval.p_low,
        "p_high": interval.p_high,
        "winner": interval.winner,
        "resolution": interval.resolution,
    }


@dataclass(frozen=True)
class RankingReport:
    """Human-facing view of a ranking run: rows, reasons, weights, KB stamp."""

    kb_version: str
    kb_updated_at: str
    rows: tuple[tuple[str, str, str], ...]  # (alternative label, score, status)
    explanations: tuple[str, ...]
    weights: tuple[tuple[str, float], ...]
    trace: dict | None = None


def build_report(
    kb: KnowledgeBase, result: RankingResult, include_trace: bool = False
) -> RankingReport:
    rows = []
    for position, aid in enumerate(result.ordering, start=1):
        rows.append((kb.alternative(aid).label, format_score(result.scores[aid]), str(position)))
    explanations = []
    for rep in result.disqualified:
        label = kb.alternative(rep.alternative_id).label
        rows.append((label, "-", "Disqualifiée"))
        for v in rep.violations:
            explanations.append(f"{label}: {v.describe(kb)}")
    trace = None
    if include_trace and result.trace is not None:
        trace = ranking_document(kb, result, include_trace=True)["trace"]
    return RankingReport(
        kb_version=kb.version,
        kb_updated_at=kb.updated_at,
        rows=tuple(rows),
        explanations=tuple(explanations),
        weights=tuple((cid, result.weights[cid]) for cid in kb.criterion_ids),
        trace=trace,
    )


def _pad_columns(rows: list[tuple[str, ...]]) -> list[str]:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]


def render_table(report: RankingReport) -> str:
    lines = [f"KB {report.kb_version} (updated {report.kb_updated_at})", ""]
    table: list[tuple[str, ...]] = [("Alternative", "Score", "Status")]
    table.extend(report.rows)
    if len(table) == 1:
        table.append(("(no alternatives)", "-", "-"))
    lines.extend(_pad_columns(table))
    if not any(status not in ("Disqualifiée",) for _, _, status in report.rows):
        lines.append("")
        lines.append("No viable alternative: every candidate is disqualified.")
    if report.explanations:
        lines.append("")
        lines.append("Disqualifications:")
        lines.extend(f"  - {reason}" for reason in report.explanations)
    active = [(cid, w) for cid, w in report.weights if w > 0]
    lines.append("")
    lines.append("Weights: " + (
        ", ".join(f"{cid}={w:.6g}" for cid, w in active) if active else "(none active)"
    ))
    if report.trace is not None:
        lines.append("")
        lines.extend(_render_trace(report.trace))
    return "\n".join(lines) + "\n"


def _render_trace(trace: dict) -> list[str]:
    def matrix_block(title: str, rows: list[list[float]]) -> list[str]:
        out = [title]
        grid: list[tuple[str, ...]] = [("", *trace["criteria"])]
        for aid, row in zip(trace["alternatives"], rows):
            grid.append((aid, *(f"{x:.6f}" for x in row)))
        out.extend("  " + line for line in _pad_columns(grid))
        return out

    lines = matrix_block("Decision matrix:", trace["matrix"])
    lines += matrix_block("Weighted normalized:", trace["weighted"])
    vec = [
        ("ideal best", trace["ideal_best"]),
        ("ideal worst", trace["ideal_worst"]),
    ]
    for name, values in vec:
        lines.append(f"{name}: " + ", ".join(f"{x:.6f}" for x in values))
    sep: list[tuple[str, ...]] = [("", "S+", "S-")]
    for aid, sp, sm in zip(trace["alternatives"], trace["separation_best"], trace["separation_worst"]):
        sep.append((aid, f"{sp:.6f}", f"{sm:.6f}"))
    lines.append("Separations:")
    lines.extend("  " + line for line in _pad_columns(sep))
    return lines


def render_interval(interval: StabilityInterval, current: float) -> str:
    return (
        f"criterion {interval.criterion_id}: winner '{interval.winner}' is stable for "
        f"preference values in [{interval.p_low:g}, {interval.p_high:g}] "
        f"(current {current:g}, scanned at resolution {interval.resolution:g})\n"
    )
