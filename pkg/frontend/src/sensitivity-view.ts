/**
 * Sensitivity panel: pick a criterion, see how far its preference value can
 * move before the recommendation flips, and preview the ranking at any point
 * on the dial. The shaded band and every preview come from the service.
 */

import type { CriterionInfo, IntervalDoc, RankingDoc } from "./api";
import { formatScore } from "./format";

const PREF_MIN = 0;
const PREF_MAX = 4;

export interface SensitivityCallbacks {
  onCriterionChange: (criterionId: string) => void;
  onProbe: (value: number) => void;
  onApply: (value: number) => void;
}

export class SensitivityView {
  private readonly select: HTMLSelectElement;
  private readonly slider: HTMLInputElement;
  private readonly band: HTMLElement;
  private readonly readout: HTMLElement;
  private readonly intervalLine: HTMLElement;
  private readonly preview: HTMLElement;
  private interval: IntervalDoc | null = null;

  constructor(root: HTMLElement, callbacks: SensitivityCallbacks) {
    this.select = document.createElement("select");
    this.select.className = "sens-criterion";
    this.select.addEventListener("change", () => callbacks.onCriterionChange(this.select.value));

    const wrap = document.createElement("div");
    wrap.className = "slider-wrap";
    this.band = document.createElement("div");
    this.band.className = "interval-band";
    this.slider = document.createElement("input");
    this.slider.type = "range";
    this.slider.className = "sens-slider";
    this.slider.min = String(PREF_MIN);
    this.slider.max = String(PREF_MAX);
    this.slider.step = "0.05";
    this.slider.addEventListener("input", () => {
      this.updateReadout();
      callbacks.onProbe(Number(this.slider.value));
    });
    wrap.append(this.band, this.slider);

    this.readout = document.createElement("div");
    this.readout.className = "sens-readout";

    this.intervalLine = document.createElement("div");
    this.intervalLine.className = "interval-line";

    const apply = document.createElement("button");
    apply.className = "sens-apply";
    apply.type = "button";
    apply.textContent = "Apply this value";
    apply.addEventListener("click", () => callbacks.onApply(Number(this.slider.value)));

    this.preview = document.createElement("div");
    this.preview.className = "sens-preview";

    root.append(this.select, wrap, this.readout, this.intervalLine, apply, this.preview);
  }

  setCriteria(criteria: CriterionInfo[], selected: string): void {
    this.select.textContent = "";
    for (const criterion of criteria) {
      const option = document.createElement("option");
      option.value = criterion.id;
      option.textContent = criterion.label;
      this.select.appendChild(option);
    }
    this.select.value = selected;
  }

  criterion(): string {
    return this.select.value;
  }

  setCurrentValue(value: number): void {
    this.slider.value = String(value);
    this.updateReadout();
  }

  setInterval(doc: IntervalDoc | null, winnerLabel: string | null): void {
    this.interval = doc;
    if (!doc) {
      this.band.hidden = true;
      this.intervalLine.textContent = "";
      this.updateReadout();
      return;
    }
    const span = PREF_MAX - PREF_MIN;
    this.band.hidden = false;
    this.band.style.left = `${((doc.p_low - PREF_MIN) / span) * 100}%`;
    this.band.style.width = `${((doc.p_high - doc.p_low) / span) * 100}%`;
    this.intervalLine.textContent =
      `${winnerLabel ?? doc.winner} stays on top for values in ` +
      `[${SensitivityView.trimBound(doc.p_low)}, ${SensitivityView.trimBound(doc.p_high)}] ` +
      `(resolution ${doc.resolution})`;
    this.updateReadout();
  }

  setPreview(doc: RankingDoc | null, labels: Map<string, string>): void {
    this.preview.textContent = "";
    if (!doc) return;
    const heading = document.createElement("h4");
    heading.textContent = "Preview at this value";
    this.preview.appendChild(heading);
    const list = document.createElement("ol");
    for (const id of doc.ordering) {
      const item = document.createElement("li");
      item.dataset.alternative = id;
      item.textContent = `${labels.get(id) ?? id}  ${formatScore(doc.scores[id] ?? 0)}`;
      list.appendChild(item);
    }
    this.preview.appendChild(list);
  }

  /** Grid bounds carry float noise (0.15000000000000002); print them clean. */
  private static trimBound(value: number): number {
    return Number(value.toFixed(4));
  }

  private updateReadout(): void {
    const value = Number(this.slider.value);
    let note = "";
    if (this.interval) {
      note =
        value >= this.interval.p_low && value <= this.interval.p_high
          ? " (winner unchanged here)"
          : " (outside the stable band)";
    }
    this.readout.textContent = `preference value ${value.toFixed(2)}${note}`;
  }
}
