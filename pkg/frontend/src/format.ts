/** Display formatting shared by the ranking and sensitivity panels. */

import type { CellValue, ThresholdDoc } from "./api";

/** Scores print with 8 decimals everywhere, matching the service reports. */
export function formatScore(score: number): string {
  return score.toFixed(8);
}

export function formatPreferenceValue(value: string | number): string {
  if (typeof value === "number") return `custom (${value})`;
  return value.replaceAll("_", " ");
}

export function formatCellValue(value: CellValue, unit?: string): string {
  if ("bool" in value) return value.bool ? "yes" : "no";
  if ("ordinal" in value) return value.ordinal;
  if ("exact" in value) return withUnit(value.exact, unit);
  if ("approx" in value) return `≈ ${withUnit(value.approx, unit)}`;
  const relation = value.bounded.relation === "at_most" ? "≤" : "≥";
  return `${relation} ${withUnit(value.bounded.limit, unit)}`;
}

export function formatThreshold(threshold: ThresholdDoc, unit?: string): string {
  const relation = threshold.relation === "at_most" ? "at most" : "at least";
  if (threshold.level !== undefined) return `${relation} ${threshold.level}`;
  return `${relation} ${withUnit(threshold.value ?? 0, unit)}`;
}

function withUnit(value: number, unit?: string): string {
  if (unit === "%") return `${(value * 100).toFixed(2)}%`;
  return unit ? `${value} ${unit}` : String(value);
}
