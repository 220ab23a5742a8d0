import type {
  CcResponse,
  ClassCensusResponse,
  ClassifyResponse,
  ExploreResponse,
  MutateResponse,
  QuiverData,
  SeedData,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function readDetail(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { detail?: unknown };
    if (typeof body.detail === "string") return body.detail;
    return JSON.stringify(body);
  } catch {
    return response.statusText;
  }
}

export class ServiceClient {
  constructor(private baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      throw new ApiError(response.status, await readDetail(response));
    }
    return (await response.json()) as T;
  }

  async health(): Promise<boolean> {
    try {
      const response = await fetch(this.baseUrl + "/health");
      return response.ok;
    } catch {
      return false;
    }
  }

  mutateQuiver(quiver: QuiverData, k: number): Promise<MutateResponse> {
    return this.post("/mutate", { quiver, k });
  }

  mutateSeed(seed: SeedData, k: number): Promise<MutateResponse> {
    return this.post("/mutate", { seed, k });
  }

  mutateSequence(quiver: QuiverData, sequence: number[]): Promise<MutateResponse> {
    return this.post("/mutate", { quiver, sequence });
  }

  explore(quiver: QuiverData, limit?: number, clusters = false): Promise<ExploreResponse> {
    return this.post("/explore", { quiver, limit, clusters });
  }

  classCensus(quiver: QuiverData, limit?: number): Promise<ClassCensusResponse> {
    return this.post("/class", { quiver, limit });
  }

  classify(quiver: QuiverData, earlyExit = true): Promise<ClassifyResponse> {
    return this.post("/classify", { quiver, early_exit: earlyExit });
  }

  ccShifted(quiver: QuiverData, k: number): Promise<CcResponse> {
    return this.post("/cc", { shifted: k, quiver });
  }
}
