/** Thin typed client for the coverage service's session API.
 *
 * All probability arithmetic stays on the server; this client only moves
 * documents. Errors surface as ApiError with the server's message/field.
 */

import type {
  ComplexDoc,
  ComplexKind,
  CoverageDoc,
  NetworkDoc,
  ProbEntry,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
    readonly field?: string,
  ) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  if (!response.ok) {
    let message = response.statusText;
    let field: string | undefined;
    try {
      const body = (await response.json()) as { error?: string; field?: string };
      message = body.error ?? message;
      field = body.field;
    } catch {
      // non-JSON error body: keep the status text
    }
    throw new ApiError(response.status, message, field);
  }
  return (await response.json()) as T;
}

export class SessionClient {
  private constructor(
    readonly baseUrl: string,
    readonly sessionId: string,
  ) {}

  static async create(baseUrl = ""): Promise<SessionClient> {
    const doc = await request<{ id: string }>(`${baseUrl}/api/session`, {
      method: "POST",
    });
    return new SessionClient(baseUrl, doc.id);
  }

  private url(path: string): string {
    return `${this.baseUrl}/api/session/${this.sessionId}${path}`;
  }

  getNetwork(): Promise<NetworkDoc> {
    return request(this.url("/network"));
  }

  putNetwork(doc: NetworkDoc): Promise<NetworkDoc> {
    return request(this.url("/network"), {
      method: "PUT",
      body: JSON.stringify(doc),
    });
  }

  randomNetwork(params: {
    n: number;
    k: number;
    rc: number;
    eps: number;
    seed: number;
  }): Promise<NetworkDoc> {
    return request(this.url("/network/random"), {
      method: "POST",
      body: JSON.stringify(params),
    });
  }

  moveNode(nodeId: number, dx: number, dy: number): Promise<NetworkDoc> {
    return request(this.url(`/nodes/${nodeId}`), {
      method: "PATCH",
      body: JSON.stringify({ dx, dy }),
    });
  }

  addNode(x: number, y: number): Promise<NetworkDoc> {
    return request(this.url("/nodes"), {
      method: "POST",
      body: JSON.stringify({ x, y }),
    });
  }

  deleteNode(nodeId: number): Promise<NetworkDoc> {
    return request(this.url(`/nodes/${nodeId}`), { method: "DELETE" });
  }

  setParams(params: {
    rc?: number;
    eps?: number;
    k?: number;
    seed?: number;
  }): Promise<NetworkDoc> {
    return request(this.url("/params"), {
      method: "PUT",
      body: JSON.stringify(params),
    });
  }

  getComplex(kind: ComplexKind): Promise<ComplexDoc> {
    return request(this.url(`/complex?kind=${kind}`));
  }

  getCoverage(samples: number, resolution: number, seed: number): Promise<CoverageDoc> {
    return request(
      this.url(`/coverage?samples=${samples}&resolution=${resolution}&seed=${seed}`),
    );
  }

  getPointCoverage(x: number, y: number): Promise<ProbEntry> {
    return request(this.url(`/point?x=${x}&y=${y}`));
  }
}
