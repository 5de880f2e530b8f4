// Generated by capture_fixtures.py from the real service and CLI.
// Do not edit by hand; rerun the script instead.

import type { ActionObj, SessionState } from "../src/types.js";

export const OLD_TEXT = "a\nb\nc\n";
export const NEW_TEXT = "b\na\nc\n";
export const ORPHAN_OLD_TEXT = "x\na\n";
export const ORPHAN_NEW_TEXT = "a\n";
export const STATE0: SessionState = {
  "session_id": "dd3c529f4d0440c3be27954305dc4b02",
  "revision": 0,
  "old_lines": [
    "a",
    "b",
    "c"
  ],
  "new_lines": [
    "b",
    "a",
    "c"
  ],
  "rows": [
    {
      "kind": "add",
      "old": null,
      "new": 1,
      "text": "b"
    },
    {
      "kind": "ctx",
      "old": 1,
      "new": 2,
      "text": "a"
    },
    {
      "kind": "del",
      "old": 2,
      "new": null,
      "text": "b"
    },
    {
      "kind": "ctx",
      "old": 3,
      "new": 3,
      "text": "c"
    }
  ],
  "actions": [],
  "can_undo": false,
  "can_redo": false,
  "edge_count": 4,
  "feasible": true,
  "conflict": null,
  "warnings": []
};
export const STATE1: SessionState = {
  "session_id": "dd3c529f4d0440c3be27954305dc4b02",
  "revision": 1,
  "old_lines": [
    "a",
    "b",
    "c"
  ],
  "new_lines": [
    "b",
    "a",
    "c"
  ],
  "rows": [
    {
      "kind": "del",
      "old": 1,
      "new": null,
      "text": "a"
    },
    {
      "kind": "ctx",
      "old": 2,
      "new": 1,
      "text": "b"
    },
    {
      "kind": "add",
      "old": null,
      "new": 2,
      "text": "a"
    },
    {
      "kind": "ctx",
      "old": 3,
      "new": 3,
      "text": "c"
    }
  ],
  "actions": [
    {
      "old": 1,
      "new": 2
    }
  ],
  "can_undo": true,
  "can_redo": false,
  "edge_count": 4,
  "feasible": true,
  "conflict": null,
  "warnings": []
};
export const STATE_UNDONE: SessionState = {
  "session_id": "dd3c529f4d0440c3be27954305dc4b02",
  "revision": 2,
  "old_lines": [
    "a",
    "b",
    "c"
  ],
  "new_lines": [
    "b",
    "a",
    "c"
  ],
  "rows": [
    {
      "kind": "add",
      "old": null,
      "new": 1,
      "text": "b"
    },
    {
      "kind": "ctx",
      "old": 1,
      "new": 2,
      "text": "a"
    },
    {
      "kind": "del",
      "old": 2,
      "new": null,
      "text": "b"
    },
    {
      "kind": "ctx",
      "old": 3,
      "new": 3,
      "text": "c"
    }
  ],
  "actions": [],
  "can_undo": false,
  "can_redo": true,
  "edge_count": 4,
  "feasible": true,
  "conflict": null,
  "warnings": []
};
export const ORPHAN_STATE0: SessionState = {
  "session_id": "7554ba9e21a94b38a4ddb9abbaa304da",
  "revision": 0,
  "old_lines": [
    "x",
    "a"
  ],
  "new_lines": [
    "a"
  ],
  "rows": [
    {
      "kind": "del",
      "old": 1,
      "new": null,
      "text": "x"
    },
    {
      "kind": "ctx",
      "old": 2,
      "new": 1,
      "text": "a"
    }
  ],
  "actions": [],
  "can_undo": false,
  "can_redo": false,
  "edge_count": 2,
  "feasible": true,
  "conflict": null,
  "warnings": []
};
export const INFEASIBLE_RESPONSE: SessionState = {
  "session_id": "7554ba9e21a94b38a4ddb9abbaa304da",
  "revision": 0,
  "old_lines": [
    "x",
    "a"
  ],
  "new_lines": [
    "a"
  ],
  "rows": [
    {
      "kind": "del",
      "old": 1,
      "new": null,
      "text": "x"
    },
    {
      "kind": "ctx",
      "old": 2,
      "new": 1,
      "text": "a"
    }
  ],
  "actions": [],
  "can_undo": false,
  "can_redo": false,
  "edge_count": 2,
  "feasible": false,
  "conflict": "old line(s) [1] must match but cannot",
  "warnings": []
};
export const ACTIONS_AFTER_CLICK: ActionObj[] = [
  {
    "old": 1,
    "new": 2
  }
];
export const EXPORT_UNIFIED_BASE = "--- old\n+++ new\n@@ -1,3 +1,3 @@\n+b\n a\n-b\n c\n";
export const EXPORT_UNIFIED_AFTER_CLICK = "--- old\n+++ new\n@@ -1,3 +1,3 @@\n-a\n b\n+a\n c\n";
export const CLI_UNIFIED = "--- old\n+++ new\n@@ -1,3 +1,3 @@\n+b\n a\n-b\n c\n";
export const CLI_FIXED = "--- old\n+++ new\n@@ -1,3 +1,3 @@\n-a\n b\n+a\n c\n";
export const STALE_BODY = {
  "detail": "stale revision 0, session is at 2"
};
export const OVERSIZE_BODY = {
  "detail": "old side exceeds 3000 lines"
};
