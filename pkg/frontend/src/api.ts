/**
 * Typed client for the chainsel ranking service.
 *
 * Every number shown in the UI comes from these endpoints; the browser never
 * recomputes scores or intervals on its own.
 */

export type CriterionKind = "boolean" | "ordinal" | "numeric";
export type Direction = "benefit" | "cost";
export type ConstraintMode = "required" | "undesirable";

export interface OrdinalLevel {
  label: string;
  code: number;
}

export interface CriterionInfo {
  id: string;
  label: string;
  kind: CriterionKind;
  direction: Direction;
  iso_category: string;
  unit?: string;
  ordinal_scale?: OrdinalLevel[];
}

export interface CriteriaResponse {
  kb_version: string;
  kb_updated_at: string;
  criteria: CriterionInfo[];
}

/** One catalog cell; numeric cells may carry a provenance tag. */
export type CellValue =
  | { bool: boolean }
  | { exact: number; provenance?: string }
  | { approx: number; provenance?: string }
  | { bounded: { limit: number; relation: string }; provenance?: string }
  | { ordinal: string };

export interface AlternativeInfo {
  id: string;
  label: string;
  consensus: string;
  values: Record<string, CellValue>;
}

export interface AlternativesResponse {
  kb_version: string;
  kb_updated_at: string;
  alternatives: AlternativeInfo[];
}

export interface ThresholdDoc {
  relation: "at_least" | "at_most";
  value?: number;
  level?: string;
}

export interface ConstraintDoc {
  criterion: string;
  mode: ConstraintMode;
  threshold?: ThresholdDoc;
}

/** Requirements document, exactly as POSTed to /api/rank. */
export interface RequirementsDoc {
  preferences: Record<string, string | number>;
  constraints: ConstraintDoc[];
  tolerance_pct?: number;
}

export interface ViolationDoc {
  criterion: string;
  mode: ConstraintMode;
  threshold: ThresholdDoc | null;
  actual: CellValue;
  encoded: number;
  message: string;
}

export interface DisqualifiedDoc {
  alternative: string;
  label: string;
  violations: ViolationDoc[];
}

export interface RankingDoc {
  kb_version: string;
  kb_updated_at: string;
  weights: Record<string, number>;
  scores: Record<string, number>;
  ordering: string[];
  winner: string | null;
  uncontested: boolean;
  disqualified: DisqualifiedDoc[];
}

export interface IntervalDoc {
  kb_version: string;
  criterion: string;
  p_low: number;
  p_high: number;
  winner: string;
  resolution: number;
}

/** One what-if edit; `constraint: null` clears, absent keeps. */
export interface EditDoc {
  criterion: string;
  preference?: string | number;
  constraint?: ConstraintDoc | null;
}

export class ApiError extends Error {
  readonly status: number;
  readonly type: string;

  constructor(status: number, type: string, message: string) {
    super(message);
    this.status = status;
    this.type = type;
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl = "", fetchImpl: FetchLike = (...args) => fetch(...args)) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchImpl = fetchImpl;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "content-type": "application/json" } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const response = await this.fetchImpl(this.baseUrl + path, init);
    const payload = await response.json();
    if (!response.ok) {
      const detail = payload?.detail;
      if (detail && typeof detail === "object") {
        throw new ApiError(response.status, detail.type ?? "error", detail.message ?? "request failed");
      }
      throw new ApiError(response.status, "error", JSON.stringify(payload));
    }
    return payload as T;
  }

  criteria(): Promise<CriteriaResponse> {
    return this.request("GET", "/api/criteria");
  }

  alternatives(): Promise<AlternativesResponse> {
    return this.request("GET", "/api/alternatives");
  }

  rank(requirements: RequirementsDoc): Promise<RankingDoc> {
    return this.request("POST", "/api/rank", { requirements });
  }

  sensitivity(
    requirements: RequirementsDoc,
    criterion: string,
    resolution = 0.05,
  ): Promise<IntervalDoc> {
    return this.request("POST", "/api/sensitivity", { requirements, criterion, resolution });
  }

  whatIf(requirements: RequirementsDoc, edits: EditDoc[]): Promise<RankingDoc> {
    return this.request("POST", "/api/whatif", { requirements, edits });
  }
}
