import type { HttpResponse, Transport } from "../src/client.js";

export interface Call {
  method: string;
  path: string;
  body?: string;
}

export function ok(body: unknown, status = 200): HttpResponse {
  return { status, body };
}

export interface Deferred {
  promise: Promise<HttpResponse>;
  resolve: (res: HttpResponse) => void;
}

export function defer(): Deferred {
  let resolve!: (res: HttpResponse) => void;
  const promise = new Promise<HttpResponse>((r) => {
    resolve = r;
  });
  return { promise, resolve };
}

/** Canned transport: records every request verbatim and replays queued
 * responses in order, so tests can pin exact request bytes. */
export class FakeTransport {
  calls: Call[] = [];
  private queue: (HttpResponse | Promise<HttpResponse>)[] = [];

  respond(...responses: (HttpResponse | Promise<HttpResponse>)[]): void {
    this.queue.push(...responses);
  }

  transport: Transport = async (method, path, body) => {
    this.calls.push(body === undefined ? { method, path } : { method, path, body });
    const next = this.queue.shift();
    if (next === undefined) throw new Error(`no canned response for ${method} ${path}`);
    return next;
  };

  get lastCall(): Call {
    const call = this.calls[this.calls.length - 1];
    if (!call) throw new Error("no calls recorded");
    return call;
  }
}
