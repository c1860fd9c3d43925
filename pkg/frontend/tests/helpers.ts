/**
 * Test doubles: a fetch fake that replays captured service responses, and a
 * manually-resolved variant for exercising in-flight request ordering.
 *
 * Every fixture under tests/fixtures/ is a verbatim response from the real
 * ranking service, so assertions against them assert real engine output.
 */

import criteria from "./fixtures/criteria.json";
import alternatives from "./fixtures/alternatives.json";
import rankBigbox from "./fixtures/rank_bigbox.json";
import rankNoBft from "./fixtures/rank_no_bft.json";
import rankLearning01 from "./fixtures/rank_learning_01.json";
import errorIndifferent from "./fixtures/error_indifferent.json";
import errorUnknown from "./fixtures/error_unknown_criterion.json";
import sensitivityEnergy from "./fixtures/sensitivity_energy.json";
import sensitivityLearning from "./fixtures/sensitivity_learning_bigbox.json";
import sensitivityLearningApplied from "./fixtures/sensitivity_learning_applied.json";
import sensitivityPublicBigbox from "./fixtures/sensitivity_public_bigbox.json";
import sensitivityPublicNoBft from "./fixtures/sensitivity_public_no_bft.json";
import whatifEnergyLow from "./fixtures/whatif_energy_low.json";
import whatifLearning05 from "./fixtures/whatif_learning_05.json";
import whatifLearning01 from "./fixtures/whatif_learning_01.json";

export {
  criteria,
  alternatives,
  rankBigbox,
  rankNoBft,
  rankLearning01,
  errorUnknown,
  sensitivityEnergy,
  sensitivityLearning,
  sensitivityLearningApplied,
  sensitivityPublicBigbox,
  whatifEnergyLow,
  whatifLearning01,
  whatifLearning05,
};

export interface RecordedCall {
  method: string;
  path: string;
  body?: any;
}

function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "content-type": "application/json" },
  });
}

function hasBftConstraint(requirements: any): boolean {
  return (requirements.constraints ?? []).some((c: any) => c.criterion === "bft_tolerance");
}

function routeRank(requirements: any): Response {
  if (Object.keys(requirements.preferences ?? {}).length === 0) {
    return jsonResponse(errorIndifferent, 400);
  }
  if (requirements.preferences.learning_curve === 0.1) {
    return jsonResponse(rankLearning01);
  }
  return jsonResponse(hasBftConstraint(requirements) ? rankBigbox : rankNoBft);
}

function routeSensitivity(body: any): Response {
  if (body.criterion === "learning_curve" && body.requirements.preferences?.learning_curve === 0.1) {
    return jsonResponse(sensitivityLearningApplied);
  }
  const key = `${body.criterion}|${hasBftConstraint(body.requirements) ? "bft" : "nobft"}`;
  const table: Record<string, unknown> = {
    "public_access|bft": sensitivityPublicBigbox,
    "public_access|nobft": sensitivityPublicNoBft,
    "energy_efficient|bft": sensitivityEnergy,
    "learning_curve|bft": sensitivityLearning,
  };
  const hit = table[key];
  if (!hit) throw new Error(`no sensitivity fixture captured for ${key}`);
  return jsonResponse(hit);
}

function routeWhatIf(body: any): Response {
  const edit = body.edits?.[0] ?? {};
  const key = `${edit.criterion}@${edit.preference}`;
  const table: Record<string, unknown> = {
    "energy_efficient@0.5": whatifEnergyLow,
    "learning_curve@0.5": whatifLearning05,
    "learning_curve@0.1": whatifLearning01,
  };
  const hit = table[key];
  if (!hit) throw new Error(`no what-if fixture captured for ${key}`);
  return jsonResponse(hit);
}

/** Fixture-backed fetch; records every call it serves. */
export function fixtureFetch(): {
  fetch: (input: string, init?: RequestInit) => Promise<Response>;
  calls: RecordedCall[];
} {
  const calls: RecordedCall[] = [];
  const impl = async (input: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(init.body as string) : undefined;
    calls.push({ method, path: input, body });

    if (input.endsWith("/api/criteria")) return jsonResponse(criteria);
    if (input.endsWith("/api/alternatives")) return jsonResponse(alternatives);
    if (input.endsWith("/api/rank")) return routeRank(body.requirements);
    if (input.endsWith("/api/sensitivity")) return routeSensitivity(body);
    if (input.endsWith("/api/whatif")) return routeWhatIf(body);
    throw new Error(`unrouted request: ${method} ${input}`);
  };
  return { fetch: impl, calls };
}

/**
 * Fetch whose responses are parked until the test releases them, for
 * asserting that late replies to superseded requests are discarded.
 */
export class ManualFetch {
  readonly pending: Array<{ call: RecordedCall; resolve: (r: Response) => void }> = [];

  fetch = (input: string, init?: RequestInit): Promise<Response> => {
    const call: RecordedCall = {
      method: init?.method ?? "GET",
      path: input,
      body: init?.body ? JSON.parse(init.body as string) : undefined,
    };
    return new Promise<Response>((resolve) => {
      this.pending.push({ call, resolve });
    });
  };

  /** Answer the i-th unanswered request (in arrival order). */
  release(index: number, payload: unknown, status = 200): void {
    const entry = this.pending[index];
    if (!entry || !entry.resolve) throw new Error(`no pending request at ${index}`);
    entry.resolve(jsonResponse(payload, status));
  }
}

/** Drain queued microtasks so awaited fetches and renders settle. */
export async function settle(): Promise<void> {
  for (let i = 0; i < 12; i += 1) await Promise.resolve();
}
