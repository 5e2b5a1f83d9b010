// Thin service client.  Every number the panel shows comes back through
// here; the UI never simulates anything itself.  The fetch function is
// injectable so tests can intercept the transport.

import type { PlanDocument, SessionState, StreamMessage } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  status: number;
  field?: string;

  constructor(status: number, message: string, field?: string) {
    super(message);
    this.status = status;
    this.field = field;
  }
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let message = `service error ${response.status}`;
    let field: string | undefined;
    try {
      const body = (await response.json()) as { message?: string; field?: string };
      message = body.message ?? message;
      field = body.field;
    } catch {
      // non-JSON error body; keep the status message
    }
    throw new ServiceError(response.status, message, field);
  }
  return (await response.json()) as T;
}

export class ServiceClient {
  private base: string;
  private fetchFn: FetchLike;

  constructor(base: string, fetchFn?: FetchLike) {
    this.base = base.replace(/\/$/, "");
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  createSession(overrides: Record<string, unknown> = {}): Promise<SessionState> {
    return this.request<SessionState>("POST", "/sessions", overrides);
  }

  getSession(id: string): Promise<SessionState> {
    return this.request<SessionState>("GET", `/sessions/${id}`);
  }

  patchParams(id: string, patch: Record<string, unknown>): Promise<SessionState> {
    return this.request<SessionState>("PATCH", `/sessions/${id}/params`, patch);
  }

  generate(id: string): Promise<PlanDocument> {
    return this.request<PlanDocument>("POST", `/sessions/${id}/generate`);
  }

  getPlan(id: string): Promise<PlanDocument> {
    return this.request<PlanDocument>("GET", `/plans/${id}`);
  }

  corpusLines(start = 0, count?: number): Promise<{ total: number; lines: { index: number; words: string[] }[] }> {
    const query = count === undefined ? `?start=${start}` : `?start=${start}&count=${count}`;
    return this.request("GET", `/corpus/lines${query}`);
  }

  // Read the SSE stream to completion, invoking onMessage per JSON frame.
  async stream(id: string, onMessage: (message: StreamMessage) => void): Promise<void> {
    const response = await this.fetchFn(`${this.base}/sessions/${id}/stream`);
    if (!response.ok) {
      throw new ServiceError(response.status, `stream failed (${response.status})`);
    }
    if (!response.body) {
      // environments without streaming bodies deliver the whole text at once
      for (const message of parseSse(await response.text())) onMessage(message);
      return;
    }
    const reader = response.body.getReader();
    const decoder = new TextDecoder();
    let buffer = "";
    for (;;) {
      const { done, value } = await reader.read();
      if (done) break;
      buffer += decoder.decode(value, { stream: true });
      const frames = buffer.split("\n\n");
      buffer = frames.pop() ?? "";
      for (const frame of frames) {
        const message = parseSseFrame(frame);
        if (message) onMessage(message);
      }
    }
    const tail = parseSseFrame(buffer);
    if (tail) onMessage(tail);
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    return asJson<T>(await this.fetchFn(`${this.base}${path}`, init));
  }
}

export function parseSseFrame(frame: string): StreamMessage | null {
  const data = frame
    .split("\n")
    .filter((line) => line.startsWith("data: "))
    .map((line) => line.slice("data: ".length))
    .join("\n");
  if (!data) return null;
  return JSON.parse(data) as StreamMessage;
}

export function parseSse(text: string): StreamMessage[] {
  const out: StreamMessage[] = [];
  for (const frame of text.split("\n\n")) {
    const message = parseSseFrame(frame);
    if (message) out.push(message);
  }
  return out;
}
