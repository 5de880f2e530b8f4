"""Core data model: line pairs, edit-graph edges, diffs, and unified rendering.

A comparison between two line sequences is modeled as a grid of nodes
(i, j) with 0 <= i <= N and 0 <= j <= M.  A diff is a monotone path of
edges from (0, 0) to (N, M):

* horizontal  (i-1, j)   -> (i, j)   old line i deleted
* vertical    (i, j-1)   -> (i, j)   new line j added
* diagonal    (i-1, j-1) -> (i, j)   old line i kept as new line j
                                     (exists only when the lines are equal)

All line indices are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple


class EdgeKind(IntEnum):
    HORIZONTAL = 0  # deletion of an old line
    VERTICAL = 1    # addition of a new line
    DIAGONAL = 2    # matched pair of lines


class Node(NamedTuple):
    i: int
    j: int


class Edge(NamedTuple):
    """A single edit-graph edge, identified by kind and end node.

    The start node is implied: the kind fixes which of i/j decrease.
    """

    kind: EdgeKind
    i: int
    j: int

    @property
    def src(self) -> Node:
        if self.kind == EdgeKind.HORIZONTAL:
            return Node(self.i - 1, self.j)
        if self.kind == EdgeKind.VERTICAL:
            return Node(self.i, self.j - 1)
        return Node(self.i - 1, self.j - 1)

    @property
    def dst(self) -> Node:
        return Node(self.i, self.j)


def horizontal(i: int, j: int) -> Edge:
    return Edge(EdgeKind.HORIZONTAL, i, j)


def vertical(i: int, j: int) -> Edge:
    return Edge(EdgeKind.VERTICAL, i, j)


def diagonal(i: int, j: int) -> Edge:
    return Edge(EdgeKind.DIAGONAL, i, j)


def _split_lines(text: str) -> list[str]:
    """Split on newlines; a final line without a terminator still counts.

    Equality is byte equality after removing the line terminator, so a
    trailing "\\r" (from CRLF input) is stripped as part of the terminator.
    """
    if text == "":
        return []
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return [ln[:-1] if ln.endswith("\r") else ln for ln in lines]


@dataclass(frozen=True)
class LinePair:
    """Two line sequences plus maps back to their original line numbers.

    ``old_origin[k]``/``new_origin[k]`` give the 1-based line number in the
    unpreprocessed file for the (k+1)-th retained line.  Without blank-line
    stripping the maps are the identity.
    """

    old_lines: tuple[str, ...]
    new_lines: tuple[str, ...]
    old_origin: tuple[int, ...]
    new_origin: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.old_lines)

    @property
    def m(self) -> int:
        return len(self.new_lines)

    def eq(self, i: int, j: int) -> bool:
        """Whether old line i equals new line j (1-based, byte equality)."""
        return self.old_lines[i - 1] == self.new_lines[j - 1]

    @cached_property
    def _new_positions(self) -> dict[str, tuple[int, ...]]:
        index: dict[str, list[int]] = {}
        for j, text in enumerate(self.new_lines, start=1):
            index.setdefault(text, []).append(j)
        return {text: tuple(js) for text, js in index.items()}

    def match_columns(self, i: int) -> tuple[int, ...]:
        """All j with eq(i, j), ascending."""
        return self._new_positions.get(self.old_lines[i - 1], ())

    def old_text(self, i: int) -> str:
        return self.old_lines[i - 1]

    def new_text(self, j: int) -> str:
        return self.new_lines[j - 1]


def build_line_pair(old_text: str, new_text: str, strip_blank: bool = False) -> LinePair:
    """Build a LinePair, optionally dropping blank lines before comparison.

    A line is blank when it is empty after terminator removal.  Origin maps
    always point at the original 1-based numbering.
    """
    old_raw = _split_lines(old_text)
    new_raw = _split_lines(new_text)
    if strip_blank:
        old_kept = [(k + 1, ln) for k, ln in enumerate(old_raw) if ln != ""]
        new_kept = [(k + 1, ln) for k, ln in enumerate(new_raw) if ln != ""]
    else:
        old_kept = list(enumerate(old_raw, start=1))
        new_kept = list(enumerate(new_raw, start=1))
    return LinePair(
        old_lines=tuple(ln for _, ln in old_kept),
        new_lines=tuple(ln for _, ln in new_kept),
        old_origin=tuple(k for k, _ in old_kept),
        new_origin=tuple(k for k, _ in new_kept),
    )


class InvalidDiffError(ValueError):
    """The edge sequence does not form a path from (0, 0) to (N, M)."""


@dataclass(frozen=True, eq=False)
class Diff:
    """An ordered edge path.  Two diffs are equal iff their edge sets are."""

    edges: tuple[Edge, ...]

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diff):
            return NotImplemented
        return self.edge_set == other.edge_set

    def __hash__(self) -> int:
        return hash(self.edge_set)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    @cached_property
    def matches(self) -> tuple[tuple[int, int], ...]:
        return tuple((e.i, e.j) for e in self.edges if e.kind == EdgeKind.DIAGONAL)

    @cached_property
    def deleted_old(self) -> tuple[int, ...]:
        return tuple(e.i for e in self.edges if e.kind == EdgeKind.HORIZONTAL)

    @cached_property
    def added_new(self) -> tuple[int, ...]:
        return tuple(e.j for e in self.edges if e.kind == EdgeKind.VERTICAL)

    def contains_match(self, i: int, j: int) -> bool:
        return Edge(EdgeKind.DIAGONAL, i, j) in self.edge_set

    def validate(self, pair: LinePair) -> None:
        """Raise InvalidDiffError unless edges chain (0,0) -> (N,M) over pair."""
        at = Node(0, 0)
        for e in self.edges:
            if e.src != at:
                raise InvalidDiffError(f"edge {e} does not start at {at}")
            if e.kind == EdgeKind.DIAGONAL and not pair.eq(e.i, e.j):
                raise InvalidDiffError(f"diagonal {e} joins unequal lines")
            if e.i < 0 or e.i > pair.n or e.j < 0 or e.j > pair.m:
                raise InvalidDiffError(f"edge {e} leaves the grid")
            at = e.dst
        if at != Node(pair.n, pair.m):
            raise InvalidDiffError(f"path ends at {at}, expected {Node(pair.n, pair.m)}")


def diff_from_edges(edges: Iterable[Edge], pair: LinePair) -> Diff:
    d = Diff(tuple(edges))
    d.validate(pair)
    return d


# -- rendering ---------------------------------------------------------------

def diff_rows(pair: LinePair, diff: Diff) -> list[tuple[str, int | None, int | None]]:
    """Flatten a diff into display rows ("ctx" | "del" | "add", old, new).

    Within each run of non-diagonal edges, deletions are listed before
    additions (the conventional order); diagonal edges pass through as
    context rows.  Indices are the pair's 1-based positions.
    """
    rows: list[tuple[str, int | None, int | None]] = []
    run_del: list[int] = []
    run_add: list[int] = []

    def flush() -> None:
        rows.extend(("del", i, None) for i in run_del)
        rows.extend(("add", None, j) for j in run_add)
        run_del.clear()
        run_add.clear()

    for e in diff.edges:
        if e.kind == EdgeKind.DIAGONAL:
            flush()
            rows.append(("ctx", e.i, e.j))
        elif e.kind == EdgeKind.HORIZONTAL:
            run_del.append(e.i)
        else:
            run_add.append(e.j)
    flush()
    return rows


def render_unified(
    pair: LinePair,
    diff: Diff,
    context: int | None = 3,
    from_label: str = "old",
    to_label: str = "new",
) -> str:
    """Render a unified-format diff.  context=None means unlimited context.

    Line numbers in hunk headers come from the pair's origin maps, so they
    refer to the unpreprocessed files.
    """
    rows = diff_rows(pair, diff)
    changed = [k for k, r in enumerate(rows) if r[0] != "ctx"]
    if not changed:
        return ""

    if context is None:
        groups = [(0, len(rows))]
    else:
        # Group changed rows whose context windows touch or overlap.
        groups = []
        lo = max(changed[0] - context, 0)
        hi = min(changed[0] + context + 1, len(rows))
        for k in changed[1:]:
            if k - context <= hi:
                hi = min(k + context + 1, len(rows))
            else:
                groups.append((lo, hi))
                lo = max(k - context, 0)
                hi = min(k + context + 1, len(rows))
        groups.append((lo, hi))

    out: list[str] = [f"--- {from_label}", f"+++ {to_label}"]
    for lo, hi in groups:
        chunk = rows[lo:hi]
        old_rows = [r[1] for r in chunk if r[1] is not None]
        new_rows = [r[2] for r in chunk if r[2] is not None]
        old_count = len(old_rows)
        new_count = len(new_rows)
        # Start of an empty range is the line before the hunk, per convention.
        if old_rows:
            old_start = pair.old_origin[old_rows[0] - 1]
        else:
            prior = [r[1] for r in rows[:lo] if r[1] is not None]
            old_start = pair.old_origin[prior[-1] - 1] if prior else 0
        if new_rows:
            new_start = pair.new_origin[new_rows[0] - 1]
        else:
            prior = [r[2] for r in rows[:lo] if r[2] is not None]
            new_start = pair.new_origin[prior[-1] - 1] if prior else 0
        out.append(f"@@ -{old_start},{old_count} +{new_start},{new_count} @@")
        for kind, i, j in chunk:
            if kind == "ctx":
                out.append(" " + pair.old_text(i))
            elif kind == "del":
                out.append("-" + pair.old_text(i))
            else:
                out.append("+" + pair.new_text(j))
    return "\n".join(out) + "\n"
