"""Feedback actions: the vocabulary a reviewer uses to reject diff content.

Three shapes, all meaning "not this":

* mismatch (i, j)   the pairing of old line i with new line j is wrong
* old orphan (i, *) old line i must not be shown as deleted
* new orphan (*, j) new line j must not be shown as added

Each action expands to edge removals; a state is an ordered, duplicate-free
collection of actions whose constraint set is the union of the expansions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .differ import EMPTY_CONSTRAINTS, ConstraintSet, shortest_diff
from .model import Diff, Edge, EdgeKind, LinePair


class FeedbackAction(NamedTuple):
    """old/new are 1-based line numbers; None is the wildcard side."""

    old: int | None
    new: int | None

    @property
    def is_mismatch(self) -> bool:
        return self.old is not None and self.new is not None

    @property
    def is_old_orphan(self) -> bool:
        return self.new is None

    @property
    def is_new_orphan(self) -> bool:
        return self.old is None

    def __str__(self) -> str:
        left = "*" if self.old is None else str(self.old)
        right = "*" if self.new is None else str(self.new)
        return f"({left},{right})"


def mismatch(i: int, j: int) -> FeedbackAction:
    return FeedbackAction(i, j)


def old_orphan(i: int) -> FeedbackAction:
    return FeedbackAction(i, None)


def new_orphan(j: int) -> FeedbackAction:
    return FeedbackAction(None, j)


def action_sort_key(action: FeedbackAction) -> tuple[int, int, int]:
    """Stable ordering: mismatches, then old orphans, then new orphans."""
    if action.is_mismatch:
        return (0, action.old, action.new)
    if action.is_old_orphan:
        return (1, action.old, 0)
    return (2, action.new, 0)


class InvalidActionError(ValueError):
    pass


def parse_action(raw: str | dict) -> FeedbackAction:
    """Parse the wire encoding {"old": int|null, "new": int|null}."""
    if isinstance(raw, str):
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise InvalidActionError(f"not valid JSON: {raw!r}") from exc
    else:
        obj = raw
    if not isinstance(obj, dict) or set(obj) - {"old", "new"}:
        raise InvalidActionError(f"expected an object with old/new keys: {obj!r}")
    old = obj.get("old")
    new = obj.get("new")
    for name, value in (("old", old), ("new", new)):
        if value is not None and (not isinstance(value, int) or isinstance(value, bool) or value < 1):
            raise InvalidActionError(f"{name} must be a positive integer or null")
    if old is None and new is None:
        raise InvalidActionError("old and new cannot both be null")
    return FeedbackAction(old, new)


def action_to_obj(action: FeedbackAction) -> dict:
    return {"old": action.old, "new": action.new}


def action_from_edge(edge: Edge) -> FeedbackAction:
    """The action that rejects what this edge asserts.

    A diagonal into (i, j) asserts the pairing, a horizontal into row i
    asserts the deletion, a vertical into column j asserts the addition.
    """
    if edge.kind == EdgeKind.DIAGONAL:
        return FeedbackAction(edge.i, edge.j)
    if edge.kind == EdgeKind.HORIZONTAL:
        return FeedbackAction(edge.i, None)
    return FeedbackAction(None, edge.j)


@dataclass(frozen=True)
class ExpandedAction:
    constraints: ConstraintSet
    warning: str | None = None


def expand_action(action: FeedbackAction, pair: LinePair) -> ExpandedAction:
    """Translate one action into edge removals, validating it against pair.

    A mismatch may only reject a pairing that exists (equal lines).  An
    orphan ban on a line with no equal counterpart is accepted but flagged:
    alone it already makes every diff infeasible.
    """
    if action.is_mismatch:
        i, j = action.old, action.new
        if not (1 <= i <= pair.n and 1 <= j <= pair.m):
            raise InvalidActionError(f"mismatch {action} is outside the grid")
        if not pair.eq(i, j):
            raise InvalidActionError(f"mismatch {action} rejects lines that are not equal")
        return ExpandedAction(ConstraintSet(no_match=frozenset({(i, j)})))
    if action.is_old_orphan:
        i = action.old
        if not 1 <= i <= pair.n:
            raise InvalidActionError(f"orphan ban {action} is outside the grid")
        warning = None
        if not pair.match_columns(i):
            warning = f"trivially infeasible: old line {i} has no equal new line"
        return ExpandedAction(ConstraintSet(no_delete=frozenset({i})), warning)
    j = action.new
    if not 1 <= j <= pair.m:
        raise InvalidActionError(f"orphan ban {action} is outside the grid")
    text = pair.new_lines[j - 1]
    warning = None
    if text not in pair.old_lines:
        warning = f"trivially infeasible: new line {j} has no equal old line"
    return ExpandedAction(ConstraintSet(no_insert=frozenset({j})), warning)


@dataclass(frozen=True)
class FeedbackState:
    """An ordered action history and the union of its edge removals."""

    actions: tuple[FeedbackAction, ...] = ()
    constraints: ConstraintSet = EMPTY_CONSTRAINTS
    warnings: tuple[str, ...] = ()

    @classmethod
    def from_actions(cls, actions: Iterable[FeedbackAction], pair: LinePair) -> "FeedbackState":
        state = cls()
        for action in actions:
            state = state.with_action(action, pair)
        return state

    def with_action(self, action: FeedbackAction, pair: LinePair) -> "FeedbackState":
        """A new state with this action appended.  Duplicates are ignored."""
        if action in self.actions:
            return self
        expanded = expand_action(action, pair)
        warnings = self.warnings
        if expanded.warning is not None:
            warnings = warnings + (expanded.warning,)
        return FeedbackState(
            self.actions + (action,),
            self.constraints.merged(expanded.constraints),
            warnings,
        )

    def without_last(self, pair: LinePair) -> "FeedbackState":
        return FeedbackState.from_actions(self.actions[:-1], pair)

    @property
    def action_set(self) -> frozenset[FeedbackAction]:
        return frozenset(self.actions)


def diff_fix(
    pair: LinePair,
    state: FeedbackState | Iterable[FeedbackAction],
    reference: Diff | None = None,
) -> Diff:
    """Recompute the diff honoring every accumulated action.

    Interactive callers pass the previous diff so unchanged regions stay
    put; batch evaluation passes no reference.  Raises InfeasibleDiffError
    when the accumulated actions conflict.
    """
    if not isinstance(state, FeedbackState):
        state = FeedbackState.from_actions(state, pair)
    return shortest_diff(pair, state.constraints, reference)
