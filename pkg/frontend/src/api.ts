import type { EvaluateRequest, EvaluateResponse, Preset } from "./types.js";

const API_BASE = "/api/v1";

interface ErrorDetail {
  loc?: Array<string | number>;
  msg?: string;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: ErrorDetail[],
  ) {
    super(
      detail.length > 0 && detail[0].msg
        ? `${detail[0].msg} (${(detail[0].loc ?? []).join(".")})`
        : `request failed with status ${status}`,
    );
  }

  /** Dotted request-field path of the first error, without the "body" prefix. */
  fieldPath(): string | null {
    const loc = this.detail[0]?.loc;
    if (!loc || loc.length === 0) return null;
    return loc.filter((part) => part !== "body").join(".");
  }
}

async function raiseForStatus(response: Response): Promise<void> {
  if (response.ok) return;
  let detail: ErrorDetail[] = [];
  try {
    const body = await response.json();
    if (Array.isArray(body.detail)) detail = body.detail;
  } catch {
    // non-JSON error body: keep the bare status
  }
  throw new ApiError(response.status, detail);
}

export async function fetchPresets(): Promise<Preset[]> {
  const response = await fetch(`${API_BASE}/presets`);
  await raiseForStatus(response);
  return response.json();
}

export async function evaluate(request: EvaluateRequest): Promise<EvaluateResponse> {
  const response = await fetch(`${API_BASE}/evaluate`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(request),
  });
  await raiseForStatus(response);
  return response.json();
}
