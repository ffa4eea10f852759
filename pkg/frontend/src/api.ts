// Typed client for the gencluster HTTP service. All mathematics happens
// server-side; this module only moves JSON.

export interface GraphVertex {
  id: number;
  name: string;
  frozen: boolean;
}

export interface SessionGraph {
  vertices: GraphVertex[];
  edges: [number, number][];
}

export interface PrimeEntry {
  source: number;
  witness: unknown;
  multiplicity: number;
}

export interface ClassGroupPayload {
  r?: number;
  free_rank?: number;
  torsion?: number[];
  primes?: PrimeEntry[];
  valuation?: number[][];
  preconditions_not_met?: string[];
  note?: string;
}

export interface SessionView {
  session: string;
  kind: 'generalized' | 'lp';
  history: number[];
  graph: SessionGraph;
  expressions: string[];
  seed: Record<string, unknown>;
  exchange_polynomials?: string[];
  exchange_laurent?: string[];
  acyclic?: boolean;
  coprime?: boolean;
  sign_skew_symmetric?: boolean;
  class_group: ClassGroupPayload;
}

export interface RealizeResponse {
  seed: Record<string, unknown>;
  class_group: { free_rank: number; torsion: number[] };
  verified: boolean;
}

export interface ErrorPayload {
  error: string;
  precondition?: string;
  violations?: string[];
  detail?: string;
  [key: string]: unknown;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly payload: ErrorPayload,
  ) {
    super(payload.error ?? `http ${status}`);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, {
    headers: { 'Content-Type': 'application/json' },
    ...init,
  });
  const body = (await response.json()) as T & ErrorPayload;
  if (!response.ok) {
    throw new ApiError(response.status, body);
  }
  return body;
}

export class ExplorerClient {
  constructor(public readonly base: string) {}

  createSession(seed: unknown): Promise<SessionView> {
    return request(`${this.base}/session`, {
      method: 'POST',
      body: JSON.stringify(seed),
    });
  }

  getSession(id: string): Promise<SessionView> {
    return request(`${this.base}/session/${id}`);
  }

  mutate(id: string, direction: number): Promise<SessionView> {
    return request(`${this.base}/session/${id}/mutate`, {
      method: 'POST',
      body: JSON.stringify({ direction }),
    });
  }

  undo(id: string): Promise<SessionView> {
    return request(`${this.base}/session/${id}/undo`, {
      method: 'POST',
      body: JSON.stringify({}),
    });
  }

  classGroup(id: string): Promise<ClassGroupPayload> {
    return request(`${this.base}/session/${id}/classgroup`);
  }

  realize(spec: { free_rank: number; torsion: number[] }): Promise<RealizeResponse> {
    return request(`${this.base}/realize`, {
      method: 'POST',
      body: JSON.stringify(spec),
    });
  }
}
