/**
 * Form state and its mapping to the requirements document.
 *
 * The state stores exactly what the document holds (labels stay labels,
 * numbers stay numbers, insertion order is preserved), so loading a document
 * into the form and reading it back yields the same JSON.
 */

import type {
  ConstraintDoc,
  ConstraintMode,
  CriterionInfo,
  RequirementsDoc,
  ThresholdDoc,
} from "./api";

/** Likert labels in increasing desirability, with their point values. */
export const LIKERT_LEVELS: ReadonlyArray<{ label: string; points: number }> = [
  { label: "indifferent", points: 0 },
  { label: "weakly_desirable", points: 1 },
  { label: "desirable", points: 2 },
  { label: "quite_desirable", points: 3 },
  { label: "extremely_desirable", points: 4 },
];

export type ConstraintChoice = "off" | ConstraintMode;

export class FormState {
  private preferences = new Map<string, string | number>();
  private constraints = new Map<string, ConstraintDoc>();
  tolerancePct: number | undefined;

  static fromDocument(doc: RequirementsDoc): FormState {
    const state = new FormState();
    for (const [cid, value] of Object.entries(doc.preferences ?? {})) {
      state.preferences.set(cid, value);
    }
    for (const constraint of doc.constraints ?? []) {
      state.constraints.set(constraint.criterion, structuredClone(constraint));
    }
    state.tolerancePct = doc.tolerance_pct;
    return state;
  }

  toDocument(): RequirementsDoc {
    const doc: RequirementsDoc = {
      preferences: Object.fromEntries(this.preferences),
      constraints: [...this.constraints.values()].map((c) => structuredClone(c)),
    };
    if (this.tolerancePct !== undefined) doc.tolerance_pct = this.tolerancePct;
    return doc;
  }

  preference(criterionId: string): string | number | undefined {
    return this.preferences.get(criterionId);
  }

  /** Set a preference; undefined removes the entry (back to the default). */
  setPreference(criterionId: string, value: string | number | undefined): void {
    if (value === undefined) {
      this.preferences.delete(criterionId);
    } else {
      this.preferences.set(criterionId, value);
    }
  }

  constraint(criterionId: string): ConstraintDoc | undefined {
    return this.constraints.get(criterionId);
  }

  constraintChoice(criterionId: string): ConstraintChoice {
    return this.constraints.get(criterionId)?.mode ?? "off";
  }

  /**
   * Toggle a constraint. Required constraints on non-boolean criteria get a
   * permissive default threshold (lowest level, or >= 0) until edited.
   */
  setConstraintChoice(criterion: CriterionInfo, choice: ConstraintChoice): void {
    if (choice === "off") {
      this.constraints.delete(criterion.id);
      return;
    }
    const doc: ConstraintDoc = { criterion: criterion.id, mode: choice };
    if (choice === "required" && criterion.kind !== "boolean") {
      const existing = this.constraints.get(criterion.id);
      doc.threshold = existing?.threshold ?? defaultThreshold(criterion);
    }
    this.constraints.set(criterion.id, doc);
  }

  setThreshold(criterionId: string, threshold: ThresholdDoc): void {
    const existing = this.constraints.get(criterionId);
    if (!existing || existing.mode !== "required") {
      throw new Error(`no required constraint on ${criterionId} to edit`);
    }
    this.constraints.set(criterionId, { ...existing, threshold });
  }
}

function defaultThreshold(criterion: CriterionInfo): ThresholdDoc {
  if (criterion.kind === "ordinal") {
    const lowest = criterion.ordinal_scale?.[0]?.label ?? "";
    return { relation: "at_least", level: lowest };
  }
  return { relation: "at_least", value: 0 };
}

/** Constraint modes that make sense for a criterion kind. */
export function constraintChoices(criterion: CriterionInfo): ConstraintChoice[] {
  if (criterion.kind === "numeric") return ["off", "required"];
  return ["off", "required", "undesirable"];
}

/** Whether the threshold editor should be visible for this state. */
export function thresholdVisible(criterion: CriterionInfo, choice: ConstraintChoice): boolean {
  return choice === "required" && criterion.kind !== "boolean";
}
