"""Occurrence-count anchored differ.

Recursively picks the rarest line shared by both sides of a region as an
anchor, matches its first occurrences, and recurses left and right.  Regions
with no shared line rare enough fall back to the shortest-path differ.  The
output is a valid diff but not necessarily a shortest one; its value here is
producing a second opinion that often disagrees with the shortest diff.
"""

from __future__ import annotations

from .differ import EMPTY_CONSTRAINTS, shortest_diff
from .model import Diff, Edge, EdgeKind, LinePair

# A shared line occurring more often than this (both sides combined) is too
# common to anchor on.
MAX_OCCURRENCES = 64


def _find_anchor(
    pair: LinePair,
    old_lo: int,
    old_hi: int,
    new_lo: int,
    new_hi: int,
) -> tuple[int, int] | None:
    """Rarest shared line in the region; ties go to the lowest old index.

    Returns the first occurrence of that line on each side, or None when no
    shared line is at or below the occurrence cap.
    """
    old_counts: dict[str, int] = {}
    old_first: dict[str, int] = {}
    for i in range(old_lo, old_hi + 1):
        text = pair.old_lines[i - 1]
        old_counts[text] = old_counts.get(text, 0) + 1
        old_first.setdefault(text, i)
    new_counts: dict[str, int] = {}
    new_first: dict[str, int] = {}
    for j in range(new_lo, new_hi + 1):
        text = pair.new_lines[j - 1]
        new_counts[text] = new_counts.get(text, 0) + 1
        new_first.setdefault(text, j)

    best: tuple[int, int] | None = None  # (occurrences, first old index)
    best_text = None
    for text, count in old_counts.items():
        other = new_counts.get(text)
        if other is None:
            continue
        occurrences = count + other
        if occurrences > MAX_OCCURRENCES:
            continue
        key = (occurrences, old_first[text])
        if best is None or key < best:
            best = key
            best_text = text
    if best_text is None:
        return None
    return old_first[best_text], new_first[best_text]


def _fallback(
    pair: LinePair,
    old_lo: int,
    old_hi: int,
    new_lo: int,
    new_hi: int,
) -> list[Edge]:
    old_count = old_hi - old_lo + 1
    new_count = new_hi - new_lo + 1
    if old_count == 0:
        return [Edge(EdgeKind.VERTICAL, old_lo - 1, j) for j in range(new_lo, new_hi + 1)]
    if new_count == 0:
        return [Edge(EdgeKind.HORIZONTAL, i, new_lo - 1) for i in range(old_lo, old_hi + 1)]
    sub = LinePair(
        old_lines=pair.old_lines[old_lo - 1 : old_hi],
        new_lines=pair.new_lines[new_lo - 1 : new_hi],
        old_origin=tuple(range(1, old_count + 1)),
        new_origin=tuple(range(1, new_count + 1)),
    )
    local = shortest_diff(sub, EMPTY_CONSTRAINTS)
    return [Edge(e.kind, e.i + old_lo - 1, e.j + new_lo - 1) for e in local.edges]


def histogram_diff(pair: LinePair) -> Diff:
    # Explicit work stack keeps deeply nested regions off the call stack;
    # entries are processed LIFO so edges come out in path order.
    result: list[Edge] = []
    pending: list[tuple[str, tuple]] = [("region", (1, pair.n, 1, pair.m))]
    while pending:
        tag, payload = pending.pop()
        if tag == "edge":
            result.append(payload[0])
            continue
        old_lo, old_hi, new_lo, new_hi = payload
        if old_lo > old_hi and new_lo > new_hi:
            continue
        anchor = None
        if old_lo <= old_hi and new_lo <= new_hi:
            anchor = _find_anchor(pair, old_lo, old_hi, new_lo, new_hi)
        if anchor is None:
            result.extend(_fallback(pair, old_lo, old_hi, new_lo, new_hi))
            continue
        ai, aj = anchor
        # Push right region first so the left side is emitted first.
        pending.append(("region", (ai + 1, old_hi, aj + 1, new_hi)))
        pending.append(("edge", (Edge(EdgeKind.DIAGONAL, ai, aj),)))
        pending.append(("region", (old_lo, ai - 1, new_lo, aj - 1)))

    diff = Diff(tuple(result))
    diff.validate(pair)
    return diff
