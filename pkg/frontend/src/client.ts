import type { ActionObj, SessionState, WireRow } from "./types.js";

export interface HttpResponse {
  status: number;
  body: unknown;
}

/** Pluggable HTTP layer so tests can run without a network. */
export type Transport = (
  method: string,
  path: string,
  body?: string,
) => Promise<HttpResponse>;

export function fetchTransport(baseUrl: string): Transport {
  const root = baseUrl.replace(/\/+$/, "");
  return async (method, path, body) => {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.body = body;
      init.headers = { "content-type": "application/json" };
    }
    const res = await fetch(root + path, init);
    const text = await res.text();
    let parsed: unknown = text;
    try {
      parsed = JSON.parse(text);
    } catch {
      // non-JSON bodies (export downloads) stay as text
    }
    return { status: res.status, body: parsed };
  };
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
    this.name = "ApiError";
  }
}

function detailOf(body: unknown): string {
  if (typeof body === "object" && body !== null && "detail" in body) {
    const d = (body as { detail: unknown }).detail;
    return typeof d === "string" ? d : JSON.stringify(d);
  }
  return typeof body === "string" ? body : JSON.stringify(body);
}

function expect(res: HttpResponse, ...ok: number[]): unknown {
  if (!ok.includes(res.status)) {
    throw new ApiError(res.status, detailOf(res.body));
  }
  return res.body;
}

/** The action a click on a rendered row encodes: deletions constrain the
 * old line, additions the new line, context rows the pair. */
export function actionForRow(row: WireRow): ActionObj {
  if (row.kind === "del") return { old: row.old, new: null };
  if (row.kind === "add") return { old: null, new: row.new };
  return { old: row.old, new: row.new };
}

/** Bodies are serialized here, once, so tests can pin exact bytes. */
export function feedbackBody(revision: number, action: ActionObj): string {
  return JSON.stringify({ revision, action: { old: action.old, new: action.new } });
}

export function revisionBody(revision: number): string {
  return JSON.stringify({ revision });
}

export class ApiClient {
  constructor(private readonly transport: Transport) {}

  async createSession(
    oldText: string,
    newText: string,
    stripBlank = false,
  ): Promise<SessionState> {
    const body = JSON.stringify({ old: oldText, new: newText, strip_blank: stripBlank });
    const res = await this.transport("POST", "/sessions", body);
    return expect(res, 201) as SessionState;
  }

  async getSession(id: string): Promise<SessionState> {
    const res = await this.transport("GET", `/sessions/${id}`);
    return expect(res, 200) as SessionState;
  }

  async feedback(id: string, revision: number, action: ActionObj): Promise<SessionState> {
    const res = await this.transport(
      "POST",
      `/sessions/${id}/feedback`,
      feedbackBody(revision, action),
    );
    return expect(res, 200) as SessionState;
  }

  async undo(id: string, revision: number): Promise<SessionState> {
    const res = await this.transport("POST", `/sessions/${id}/undo`, revisionBody(revision));
    return expect(res, 200) as SessionState;
  }

  async redo(id: string, revision: number): Promise<SessionState> {
    const res = await this.transport("POST", `/sessions/${id}/redo`, revisionBody(revision));
    return expect(res, 200) as SessionState;
  }

  async exportUnified(id: string): Promise<string> {
    const res = await this.transport("GET", `/sessions/${id}/export?format=unified`);
    const body = expect(res, 200);
    return typeof body === "string" ? body : String(body);
  }

  async exportActions(id: string): Promise<ActionObj[]> {
    const res = await this.transport("GET", `/sessions/${id}/export?format=actions`);
    return expect(res, 200) as ActionObj[];
  }

  async health(): Promise<boolean> {
    try {
      const res = await this.transport("GET", "/health");
      return res.status === 200;
    } catch {
      return false;
    }
  }
}
