/**
 * Requirements form: one row per criterion, grouped by quality category.
 *
 * Every control writes straight into the FormState and fires onChange; the
 * view owns no state of its own beyond the DOM.
 */

import type { CriterionInfo } from "./api";
import {
  LIKERT_LEVELS,
  constraintChoices,
  thresholdVisible,
  type ConstraintChoice,
  type FormState,
} from "./form";
import { formatPreferenceValue } from "./format";

const CATEGORY_TITLES: Record<string, string> = {
  security: "Security",
  efficiency: "Performance efficiency",
  reliability: "Reliability",
  functionality: "Functional suitability",
  usability: "Usability",
};

export class FormView {
  private readonly root: HTMLElement;
  private readonly state: FormState;
  private readonly onChange: () => void;

  constructor(root: HTMLElement, state: FormState, onChange: () => void) {
    this.root = root;
    this.state = state;
    this.onChange = onChange;
  }

  render(criteria: CriterionInfo[]): void {
    this.root.textContent = "";
    for (const category of groupOrder(criteria)) {
      const section = document.createElement("section");
      section.className = "criterion-group";
      section.dataset.category = category;

      const heading = document.createElement("h3");
      heading.textContent = CATEGORY_TITLES[category] ?? category;
      section.appendChild(heading);

      for (const criterion of criteria.filter((c) => c.iso_category === category)) {
        section.appendChild(this.criterionRow(criterion));
      }
      this.root.appendChild(section);
    }
  }

  private criterionRow(criterion: CriterionInfo): HTMLElement {
    const row = document.createElement("div");
    row.className = "criterion-row";
    row.dataset.criterion = criterion.id;

    const name = document.createElement("span");
    name.className = "criterion-name";
    name.textContent = criterion.label;
    if (criterion.direction === "cost") name.textContent += " (lower is better)";
    row.appendChild(name);

    row.appendChild(this.preferenceSelect(criterion));
    row.appendChild(this.constraintSelect(criterion));
    row.appendChild(this.thresholdEditor(criterion));
    this.syncThresholdVisibility(row, criterion);
    return row;
  }

  private preferenceSelect(criterion: CriterionInfo): HTMLSelectElement {
    const select = document.createElement("select");
    select.className = "pref-select";

    const byDefault = document.createElement("option");
    byDefault.value = "";
    byDefault.textContent = "indifferent (default)";
    select.appendChild(byDefault);

    for (const level of LIKERT_LEVELS) {
      const option = document.createElement("option");
      option.value = level.label;
      option.textContent = `${formatPreferenceValue(level.label)} (${level.points})`;
      select.appendChild(option);
    }

    const current = this.state.preference(criterion.id);
    if (typeof current === "number") {
      // A continuous value applied from the sensitivity panel: representable,
      // just not one of the five labels.
      const custom = document.createElement("option");
      custom.value = `#${current}`;
      custom.textContent = formatPreferenceValue(current);
      select.appendChild(custom);
      select.value = `#${current}`;
    } else {
      select.value = current ?? "";
    }

    select.addEventListener("change", () => {
      const raw = select.value;
      if (raw.startsWith("#")) return; // custom entries only originate elsewhere
      this.state.setPreference(criterion.id, raw === "" ? undefined : raw);
      this.onChange();
    });
    return select;
  }

  private constraintSelect(criterion: CriterionInfo): HTMLSelectElement {
    const select = document.createElement("select");
    select.className = "constraint-select";
    for (const choice of constraintChoices(criterion)) {
      const option = document.createElement("option");
      option.value = choice;
      option.textContent =
        choice === "off" ? "no constraint" : choice === "required" ? "required" : "undesirable";
      select.appendChild(option);
    }
    select.value = this.state.constraintChoice(criterion.id);

    select.addEventListener("change", () => {
      this.state.setConstraintChoice(criterion, select.value as ConstraintChoice);
      const row = select.closest<HTMLElement>(".criterion-row");
      if (row) {
        this.refreshThresholdEditor(row, criterion);
        this.syncThresholdVisibility(row, criterion);
      }
      this.onChange();
    });
    return select;
  }

  private thresholdEditor(criterion: CriterionInfo): HTMLElement {
    const wrap = document.createElement("span");
    wrap.className = "threshold-editor";
    if (criterion.kind === "boolean") return wrap;

    const threshold = this.state.constraint(criterion.id)?.threshold;

    if (criterion.kind === "ordinal") {
      const level = document.createElement("select");
      level.className = "threshold-level";
      for (const entry of criterion.ordinal_scale ?? []) {
        const option = document.createElement("option");
        option.value = entry.label;
        option.textContent = entry.label;
        level.appendChild(option);
      }
      if (threshold?.level) level.value = threshold.level;
      level.addEventListener("change", () => {
        this.state.setThreshold(criterion.id, { relation: "at_least", level: level.value });
        this.onChange();
      });
      const prefix = document.createElement("span");
      prefix.textContent = "at least ";
      wrap.append(prefix, level);
      return wrap;
    }

    const relation = document.createElement("select");
    relation.className = "threshold-relation";
    for (const value of ["at_least", "at_most"]) {
      const option = document.createElement("option");
      option.value = value;
      option.textContent = value === "at_least" ? "at least" : "at most";
      relation.appendChild(option);
    }
    const input = document.createElement("input");
    input.className = "threshold-value";
    input.type = "number";
    input.step = "any";
    if (criterion.unit) input.placeholder = criterion.unit;

    relation.value = threshold?.relation ?? "at_least";
    input.value = threshold?.value !== undefined ? String(threshold.value) : "";

    const commit = () => {
      const value = Number(input.value);
      if (!Number.isFinite(value)) return;
      this.state.setThreshold(criterion.id, {
        relation: relation.value as "at_least" | "at_most",
        value,
      });
      this.onChange();
    };
    relation.addEventListener("change", commit);
    input.addEventListener("change", commit);
    wrap.append(relation, input);
    return wrap;
  }

  private refreshThresholdEditor(row: HTMLElement, criterion: CriterionInfo): void {
    const old = row.querySelector(".threshold-editor");
    if (old) old.replaceWith(this.thresholdEditor(criterion));
  }

  private syncThresholdVisibility(row: HTMLElement, criterion: CriterionInfo): void {
    const editor = row.querySelector<HTMLElement>(".threshold-editor");
    if (!editor) return;
    const visible = thresholdVisible(criterion, this.state.constraintChoice(criterion.id));
    editor.hidden = !visible;
  }
}

function groupOrder(criteria: CriterionInfo[]): string[] {
  const seen: string[] = [];
  for (const criterion of criteria) {
    if (!seen.includes(criterion.iso_category)) seen.push(criterion.iso_category);
  }
  return seen;
}
