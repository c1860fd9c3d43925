/**
 * Ranking panel: score bars for the viable alternatives in rank order,
 * greyed-out rows with violation details for the disqualified ones.
 */

import type { RankingDoc } from "./api";
import { formatScore } from "./format";

export class RankingView {
  private readonly root: HTMLElement;
  private readonly list: HTMLElement;
  private readonly staleNote: HTMLElement;
  private readonly kbLine: HTMLElement;

  constructor(root: HTMLElement) {
    this.root = root;
    this.staleNote = document.createElement("div");
    this.staleNote.className = "stale-note";
    this.staleNote.textContent = "out of date, recomputing…";
    this.list = document.createElement("div");
    this.list.className = "rank-list";
    this.kbLine = document.createElement("div");
    this.kbLine.className = "kb-line";
    root.append(this.staleNote, this.list, this.kbLine);
    this.setStale(false);
  }

  /** Flag the shown result as lagging behind the form. */
  setStale(stale: boolean): void {
    this.root.classList.toggle("stale", stale);
    this.staleNote.hidden = !stale;
  }

  update(doc: RankingDoc, labels: Map<string, string>): void {
    this.list.textContent = "";

    if (doc.ordering.length === 0) {
      const empty = document.createElement("p");
      empty.className = "no-viable";
      empty.textContent = "No alternative satisfies the hard constraints.";
      this.list.appendChild(empty);
    }

    doc.ordering.forEach((id, index) => {
      const row = document.createElement("div");
      row.className = "rank-row";
      row.dataset.alternative = id;

      const position = document.createElement("span");
      position.className = "rank-pos";
      position.textContent = String(index + 1);

      const name = document.createElement("span");
      name.className = "alt-label";
      name.textContent = labels.get(id) ?? id;
      if (id === doc.winner) {
        const badge = document.createElement("span");
        badge.className = "winner-badge";
        badge.textContent = doc.uncontested ? "only qualifier" : "best match";
        name.appendChild(badge);
      }

      const score = doc.scores[id] ?? 0;
      const track = document.createElement("div");
      track.className = "bar-track";
      const bar = document.createElement("div");
      bar.className = "bar";
      bar.style.width = `${(score * 100).toFixed(2)}%`;
      track.appendChild(bar);

      const value = document.createElement("span");
      value.className = "score";
      value.textContent = formatScore(score);

      row.append(position, name, track, value);
      this.list.appendChild(row);
    });

    for (const entry of doc.disqualified) {
      const row = document.createElement("div");
      row.className = "rank-row disqualified";
      row.dataset.alternative = entry.alternative;

      const position = document.createElement("span");
      position.className = "rank-pos";
      position.textContent = "–";

      const name = document.createElement("span");
      name.className = "alt-label";
      name.textContent = entry.label;
      const badge = document.createElement("span");
      badge.className = "dq-badge";
      badge.textContent = "disqualified";
      name.appendChild(badge);

      const reasons = document.createElement("ul");
      reasons.className = "violations";
      for (const violation of entry.violations) {
        const item = document.createElement("li");
        item.textContent = violation.message;
        reasons.appendChild(item);
      }

      row.append(position, name, reasons);
      this.list.appendChild(row);
    }

    this.kbLine.textContent = `KB ${doc.kb_version} (updated ${doc.kb_updated_at})`;
  }
}
