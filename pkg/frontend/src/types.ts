/** Wire types of the session service. The UI renders these verbatim and
 * never derives diff content on its own. */

export type RowKind = "ctx" | "del" | "add";

export interface WireRow {
  kind: RowKind;
  old: number | null;
  new: number | null;
  text: string;
}

/** A feedback action: {old,new} = mismatch, {old,null} = old orphan,
 * {null,new} = new orphan. */
export interface ActionObj {
  old: number | null;
  new: number | null;
}

export interface SessionState {
  session_id: string;
  revision: number;
  old_lines: string[];
  new_lines: string[];
  rows: WireRow[];
  actions: ActionObj[];
  can_undo: boolean;
  can_redo: boolean;
  edge_count: number;
  feasible: boolean;
  conflict: string | null;
  warnings: string[];
}
