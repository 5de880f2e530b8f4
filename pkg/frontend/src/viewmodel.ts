import { ApiClient, ApiError, actionForRow } from "./client.js";
import type { RowKind, SessionState, WireRow } from "./types.js";

export interface ViewRow extends WireRow {
  clickable: boolean;
  changed: boolean;
}

/** Kind changes against the previous payload, keyed by line coordinates.
 * Every source line appears in exactly one row per payload, so a lookup
 * miss can only mean the payloads disagree. */
export function changedRows(prev: WireRow[], next: WireRow[]): boolean[] {
  const byOld = new Map<number, RowKind>();
  const byNew = new Map<number, RowKind>();
  for (const row of prev) {
    if (row.old !== null) byOld.set(row.old, row.kind);
    if (row.new !== null) byNew.set(row.new, row.kind);
  }
  return next.map((row) => {
    if (row.old !== null && byOld.get(row.old) !== row.kind) return true;
    if (row.new !== null && byNew.get(row.new) !== row.kind) return true;
    return false;
  });
}

/** Client-side session mirror.  Rows always come from the last adopted
 * payload verbatim; this never derives diff content itself. */
export class ViewModel {
  state: SessionState | null = null;
  busy = false;
  banner: string | null = null;
  changed: boolean[] = [];
  onChange: (() => void) | null = null;

  constructor(private readonly client: ApiClient) {}

  get revision(): number | null {
    return this.state ? this.state.revision : null;
  }

  rows(): ViewRow[] {
    if (!this.state) return [];
    return this.state.rows.map((row, i) => ({
      ...row,
      clickable: true,
      changed: this.changed[i] ?? false,
    }));
  }

  private notify(): void {
    if (this.onChange) this.onChange();
  }

  /** Adopt a payload unless it is older than what we already show. */
  private adopt(next: SessionState): boolean {
    if (this.state && next.revision < this.state.revision) return false;
    this.changed = this.state ? changedRows(this.state.rows, next.rows) : next.rows.map(() => false);
    this.state = next;
    return true;
  }

  async load(oldText: string, newText: string, stripBlank = false): Promise<boolean> {
    if (this.busy) return false;
    this.busy = true;
    this.notify();
    try {
      const created = await this.client.createSession(oldText, newText, stripBlank);
      this.state = created;
      this.changed = created.rows.map(() => false);
      this.banner = null;
      return true;
    } catch (err) {
      this.banner = err instanceof ApiError ? err.detail : String(err);
      return false;
    } finally {
      this.busy = false;
      this.notify();
    }
  }

  /** Post the clicked row's coordinates.  Returns false when the click was
   * dropped (already busy) or rejected; the view survives rejections. */
  async clickRow(index: number): Promise<boolean> {
    if (this.busy || !this.state) return false;
    const row = this.state.rows[index];
    if (!row) return false;
    const { session_id, revision } = this.state;
    this.busy = true;
    this.notify();
    try {
      const next = await this.client.feedback(session_id, revision, actionForRow(row));
      if (!next.feasible) {
        this.banner = next.conflict ?? "that remark cannot be satisfied";
        return false;
      }
      if (this.adopt(next)) this.banner = null;
      return true;
    } catch (err) {
      return await this.recover(err);
    } finally {
      this.busy = false;
      this.notify();
    }
  }

  async undo(): Promise<boolean> {
    if (this.busy || !this.state || !this.state.can_undo) return false;
    return this.step((id, rev) => this.client.undo(id, rev));
  }

  async redo(): Promise<boolean> {
    if (this.busy || !this.state || !this.state.can_redo) return false;
    return this.step((id, rev) => this.client.redo(id, rev));
  }

  private async step(
    call: (id: string, revision: number) => Promise<SessionState>,
  ): Promise<boolean> {
    const { session_id, revision } = this.state!;
    this.busy = true;
    this.notify();
    try {
      const next = await call(session_id, revision);
      if (this.adopt(next)) this.banner = null;
      return true;
    } catch (err) {
      return await this.recover(err);
    } finally {
      this.busy = false;
      this.notify();
    }
  }

  /** Stale revision: someone else advanced the session.  Refresh quietly,
   * then say so; the user's intent no longer applies to what they saw. */
  private async recover(err: unknown): Promise<boolean> {
    if (err instanceof ApiError && err.status === 409 && this.state) {
      const fresh = await this.client.getSession(this.state.session_id);
      this.adopt(fresh);
      this.banner = "the session moved on elsewhere; view refreshed, click again";
      return false;
    }
    this.banner = err instanceof ApiError ? err.detail : String(err);
    return false;
  }

  async exportUnified(): Promise<string> {
    if (!this.state) throw new Error("no session");
    return this.client.exportUnified(this.state.session_id);
  }

  async exportActions(): Promise<string> {
    if (!this.state) throw new Error("no session");
    const actions = await this.client.exportActions(this.state.session_id);
    return JSON.stringify(actions, null, 2) + "\n";
  }
}
