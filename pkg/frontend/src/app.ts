/**
 * Application wiring: form edits debounce into /api/rank calls, every
 * response is revision-checked so a slow reply can never overwrite a newer
 * one, and the panel is flagged stale from the moment the form diverges from
 * the result on screen until a fresh response lands.
 */

import { ApiClient, ApiError, type CriterionInfo, type RankingDoc } from "./api";
import { FormState, LIKERT_LEVELS } from "./form";
import { FormView } from "./form-view";
import { RankingView } from "./ranking-view";
import { SensitivityView } from "./sensitivity-view";

export const DEBOUNCE_MS = 300;

export class App {
  private readonly client: ApiClient;
  private readonly state: FormState;
  private readonly formView: FormView;
  private readonly rankingView: RankingView;
  private readonly sensitivityView: SensitivityView;
  private readonly errorBanner: HTMLElement;

  private criteria: CriterionInfo[] = [];
  private labels = new Map<string, string>();

  private revision = 0; // bumped on every form change
  private shownRevision = -1; // revision of the ranking on screen
  private rankTimer: ReturnType<typeof setTimeout> | undefined;

  private probeRevision = 0;
  private probeTimer: ReturnType<typeof setTimeout> | undefined;

  constructor(root: HTMLElement, client: ApiClient, initial?: FormState) {
    this.client = client;
    this.state = initial ?? new FormState();

    root.innerHTML = `
      <header>
        <h1>Blockchain platform selector</h1>
        <p class="tagline">Hard requirements screen the catalog; desirability
        weights rank whatever survives. Scores come from the ranking service,
        never from the browser.</p>
      </header>
      <div class="error-banner" hidden></div>
      <main>
        <section class="panel form-panel"><h2>Requirements</h2><div class="form-root"></div></section>
        <section class="panel ranking-panel"><h2>Ranking</h2><div class="ranking-root"></div></section>
        <section class="panel sensitivity-panel"><h2>Weight sensitivity</h2><div class="sensitivity-root"></div></section>
      </main>
    `;
    this.errorBanner = root.querySelector<HTMLElement>(".error-banner")!;
    this.formView = new FormView(
      root.querySelector<HTMLElement>(".form-root")!,
      this.state,
      () => this.onFormChange(),
    );
    this.rankingView = new RankingView(root.querySelector<HTMLElement>(".ranking-root")!);
    this.sensitivityView = new SensitivityView(
      root.querySelector<HTMLElement>(".sensitivity-root")!,
      {
        onCriterionChange: () => this.onSensitivityCriterion(),
        onProbe: (value) => this.onProbe(value),
        onApply: (value) => this.onApplyPreference(value),
      },
    );
  }

  async init(): Promise<void> {
    const [catalog, alternatives] = await Promise.all([
      this.client.criteria(),
      this.client.alternatives(),
    ]);
    this.criteria = catalog.criteria;
    this.labels = new Map(alternatives.alternatives.map((a) => [a.id, a.label]));

    this.formView.render(this.criteria);
    this.sensitivityView.setCriteria(this.criteria, this.defaultSensitivityCriterion());
    this.sensitivityView.setCurrentValue(this.preferencePoints(this.sensitivityView.criterion()));

    await this.refresh(this.revision);
  }

  /** Form edits: flag the panel stale immediately, rank after a quiet spell. */
  private onFormChange(): void {
    this.revision += 1;
    this.rankingView.setStale(true);
    clearTimeout(this.rankTimer);
    const revision = this.revision;
    this.rankTimer = setTimeout(() => void this.refresh(revision), DEBOUNCE_MS);
  }

  private async refresh(revision: number): Promise<void> {
    let ranking: RankingDoc;
    try {
      ranking = await this.client.rank(this.state.toDocument());
    } catch (error) {
      if (revision === this.revision) this.showError(error);
      return;
    }
    if (revision < this.revision || revision <= this.shownRevision) {
      return; // superseded while in flight
    }
    this.shownRevision = revision;
    this.clearError();
    this.rankingView.update(ranking, this.labels);
    this.rankingView.setStale(revision !== this.revision);
    void this.refreshInterval(revision, ranking);
  }

  private async refreshInterval(revision: number, ranking: RankingDoc): Promise<void> {
    const criterion = this.sensitivityView.criterion();
    if (!criterion || ranking.ordering.length < 2) {
      this.sensitivityView.setInterval(null, null);
      return;
    }
    try {
      const interval = await this.client.sensitivity(this.state.toDocument(), criterion);
      if (revision !== this.revision) return;
      this.sensitivityView.setInterval(interval, this.labels.get(interval.winner) ?? null);
    } catch (error) {
      if (error instanceof ApiError) {
        // Ambiguous or degenerate baselines leave the panel empty; the
        // ranking itself already tells that story.
        if (revision === this.revision) this.sensitivityView.setInterval(null, null);
        return;
      }
      throw error;
    }
  }

  private onSensitivityCriterion(): void {
    this.sensitivityView.setCurrentValue(this.preferencePoints(this.sensitivityView.criterion()));
    this.sensitivityView.setPreview(null, this.labels);
    this.onFormChange(); // re-query the interval via the normal path
  }

  /** Slider drag: debounced what-if preview, never the main ranking. */
  private onProbe(value: number): void {
    this.probeRevision += 1;
    clearTimeout(this.probeTimer);
    const revision = this.probeRevision;
    this.probeTimer = setTimeout(() => void this.runProbe(revision, value), DEBOUNCE_MS);
  }

  private async runProbe(revision: number, value: number): Promise<void> {
    try {
      const preview = await this.client.whatIf(this.state.toDocument(), [
        { criterion: this.sensitivityView.criterion(), preference: value },
      ]);
      if (revision !== this.probeRevision) return;
      this.sensitivityView.setPreview(preview, this.labels);
    } catch (error) {
      if (revision === this.probeRevision) this.showError(error);
    }
  }

  private onApplyPreference(value: number): void {
    this.state.setPreference(this.sensitivityView.criterion(), value);
    this.formView.render(this.criteria);
    this.sensitivityView.setPreview(null, this.labels);
    this.onFormChange();
  }

  private defaultSensitivityCriterion(): string {
    for (const criterion of this.criteria) {
      const pref = this.state.preference(criterion.id);
      if (pref !== undefined && pref !== "indifferent" && pref !== 0) return criterion.id;
    }
    return this.criteria[0]?.id ?? "";
  }

  private preferencePoints(criterionId: string): number {
    const pref = this.state.preference(criterionId);
    if (typeof pref === "number") return pref;
    if (typeof pref === "string") {
      return LIKERT_LEVELS.find((l) => l.label === pref)?.points ?? 0;
    }
    return 0;
  }

  private showError(error: unknown): void {
    const text =
      error instanceof ApiError
        ? `${error.type}: ${error.message}`
        : `request failed: ${String(error)}`;
    this.errorBanner.textContent = text;
    this.errorBanner.hidden = false;
  }

  private clearError(): void {
    this.errorBanner.hidden = true;
    this.errorBanner.textContent = "";
  }
}
