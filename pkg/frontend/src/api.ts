// Service client plus the request scheduler that keeps at most one /eval
// in flight, coalescing rapid slider drags last-write-wins.

import {
  CatalogDoc,
  Params,
  RegionGridDoc,
  ScanRequest,
  SceneDocument,
} from "./types.js";

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(message: string, readonly status?: number) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, body?: unknown): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchImpl(this.baseUrl + path, body === undefined
        ? { method: "GET" }
        : {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(body),
          });
    } catch (err) {
      throw new ApiError(`service unreachable: ${String(err)}`);
    }
    const text = await response.text();
    if (!response.ok) {
      let detail = text;
      try {
        detail = JSON.parse(text).error?.message ?? text;
      } catch {
        // leave raw body as the detail
      }
      throw new ApiError(`${path} failed (${response.status}): ${detail}`, response.status);
    }
    return JSON.parse(text) as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("/health");
  }

  evalParams(params: Partial<Params>): Promise<SceneDocument> {
    return this.request("/eval", { params });
  }

  clusters(): Promise<CatalogDoc> {
    return this.request("/clusters");
  }

  scan(req: ScanRequest): Promise<RegionGridDoc> {
    return this.request("/scan", req);
  }
}

/**
 * Serializes /eval traffic: at most one request in flight, newer requests
 * replace the queued one, and responses are applied in send order with a
 * monotone sequence number so a stale apply can never overwrite a newer one.
 */
export class EvalScheduler {
  private seq = 0;
  private applied = 0;
  private pending: Partial<Params> | null = null;
  private pendingSeq = 0;
  private inFlight = false;

  constructor(
    private readonly send: (params: Partial<Params>) => Promise<SceneDocument>,
    private readonly apply: (doc: SceneDocument, seq: number) => void,
    private readonly onError: (err: unknown) => void = () => undefined,
  ) {}

  /** Queue an evaluation; returns its sequence number. */
  request(params: Partial<Params>): number {
    this.seq += 1;
    this.pending = params;
    this.pendingSeq = this.seq;
    if (!this.inFlight) {
      void this.pump();
    }
    return this.seq;
  }

  get inFlightNow(): boolean {
    return this.inFlight;
  }

  private async pump(): Promise<void> {
    this.inFlight = true;
    try {
      while (this.pending !== null) {
        const params = this.pending;
        const seq = this.pendingSeq;
        this.pending = null;
        try {
          const doc = await this.send(params);
          if (seq > this.applied) {
            this.applied = seq;
            this.apply(doc, seq);
          }
        } catch (err) {
          this.onError(err);
        }
      }
    } finally {
      this.inFlight = false;
    }
  }
}
