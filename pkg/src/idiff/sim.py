"""Simulation harness: how much feedback turns one diff into another?

A case fixes a line pair, the engine's unconstrained diff, and a target
diff.  States are action sets; expanding a state applies one more action
drawn from the differences between the current diff and the target.  The
minimal action count is found by best-first search in two phases: a fast
greedy pass guided by the remaining difference count, then, only when that
answer exceeds the mismatch-area lower bound, an exact pass guided by the
admissible mismatch-area count.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .differ import InfeasibleDiffError, shortest_diff
from .feedback import (
    FeedbackAction,
    FeedbackState,
    action_from_edge,
    action_sort_key,
)
from .histogram import histogram_diff
from .model import Diff, LinePair


def actions_of(diff: Diff) -> frozenset[FeedbackAction]:
    return frozenset(action_from_edge(e) for e in diff.edges)


def candidates(diff: Diff, target: Diff) -> frozenset[FeedbackAction]:
    """Actions asserting content of ``diff`` that ``target`` does not share."""
    return actions_of(diff) - actions_of(target)


def similarity_distance(diff: Diff, target: Diff) -> int:
    """How many of diff's assertions the target rejects.  Asymmetric."""
    return len(candidates(diff, target))


def mismatch_area_count(diff: Diff, target: Diff) -> int:
    """Nodes both paths enter through different edges.

    Each disagreement region between the two paths closes at such a node,
    and one feedback action can repair at most one region, so this counts
    a lower bound on the feedback needed (empirically verified).
    """
    into_a = {(e.i, e.j): e.kind for e in diff.edges}
    into_b = {(e.i, e.j): e.kind for e in target.edges}
    return sum(1 for node, kind in into_a.items() if into_b.get(node, kind) != kind)


# -- cases -------------------------------------------------------------------

@dataclass(frozen=True)
class SimCase:
    case_id: str
    pair: LinePair
    initial: Diff
    target: Diff
    initial_distance: int

    @property
    def changed_lines(self) -> int:
        return len(self.initial.deleted_old) + len(self.initial.added_new)


def build_sim_case(case_id: str, pair: LinePair, target: Diff | None = None) -> SimCase:
    """Assemble a case; the target defaults to the histogram differ's view."""
    initial = shortest_diff(pair)
    if target is None:
        target = histogram_diff(pair)
    else:
        target.validate(pair)
    return SimCase(
        case_id=case_id,
        pair=pair,
        initial=initial,
        target=target,
        initial_distance=similarity_distance(initial, target),
    )


# -- budget ------------------------------------------------------------------

class BudgetExceededError(Exception):
    pass


# Deterministic cost model: one millisecond buys this many grid cells of
# differ work.  Charging logical work instead of wall time keeps runs and
# worker counts from changing any output.
CELLS_PER_MS = 1000


class WorkMeter:
    """Tracks charged milliseconds against an optional budget."""

    def __init__(self, budget_ms: int | None):
        self.budget_ms = budget_ms
        self.spent_ms = 0

    def charge_cells(self, cells: int) -> None:
        cost = max(1, cells // CELLS_PER_MS)
        if self.budget_ms is not None and self.spent_ms + cost > self.budget_ms:
            raise BudgetExceededError()
        self.spent_ms += cost


# -- search ------------------------------------------------------------------

@dataclass(frozen=True)
class SearchState:
    """A visited action set; diff is None when the set is infeasible."""

    actions: tuple[FeedbackAction, ...]
    diff: Diff | None

    @property
    def action_set(self) -> frozenset[FeedbackAction]:
        return frozenset(self.actions)


def goal(state: SearchState, case: SimCase) -> bool:
    return state.diff is not None and state.diff == case.target


def successors(state: SearchState, case: SimCase) -> tuple[FeedbackAction, ...]:
    if state.diff is None:
        return ()
    return tuple(sorted(candidates(state.diff, case.target), key=action_sort_key))


def _fixed_diff(case: SimCase, actions: tuple[FeedbackAction, ...], meter: WorkMeter) -> Diff | None:
    meter.charge_cells((case.pair.n + 1) * (case.pair.m + 1))
    state = FeedbackState.from_actions(actions, case.pair)
    try:
        return shortest_diff(case.pair, state.constraints)
    except InfeasibleDiffError:
        return None


@dataclass
class _SearchOutcome:
    depth: int | None
    witness: tuple[FeedbackAction, ...] | None
    expansions: int


def _best_first(
    case: SimCase,
    heuristic: Callable[[Diff], int],
    meter: WorkMeter,
) -> _SearchOutcome:
    """Best-first search over action sets; f = depth + heuristic.

    Ties prefer the lower heuristic, then insertion order.  Each action set
    is generated at most once; its depth is simply its size, so no reopening
    is ever needed.
    """
    root = SearchState((), case.initial)
    h0 = heuristic(case.initial)
    frontier: list[tuple[int, int, int, SearchState]] = [(h0, h0, 0, root)]
    seen: set[frozenset[FeedbackAction]] = {frozenset()}
    sequence = 1
    expansions = 0
    while frontier:
        _, _, _, state = heapq.heappop(frontier)
        if goal(state, case):
            return _SearchOutcome(len(state.actions), state.actions, expansions)
        expansions += 1
        for action in successors(state, case):
            child_actions = tuple(
                sorted(state.actions + (action,), key=action_sort_key)
            )
            key = frozenset(child_actions)
            if key in seen:
                continue
            seen.add(key)
            child_diff = _fixed_diff(case, child_actions, meter)
            if child_diff is None:
                continue
            child = SearchState(child_actions, child_diff)
            h = heuristic(child_diff)
            g = len(child_actions)
            heapq.heappush(frontier, (g + h, h, sequence, child))
            sequence += 1
    return _SearchOutcome(None, None, expansions)


# -- per-case results --------------------------------------------------------

@dataclass(frozen=True)
class Depth1Record:
    action: FeedbackAction
    delta: int | None  # None marks an infeasible child, excluded from stats
    feasible: bool


@dataclass
class SimResult:
    case_id: str
    n: int
    m: int
    changed_lines: int
    initial_distance: int
    mismatch_areas: int
    status: str  # ok | timeout | oom | unsolvable
    min_feedback: int | None = None
    optimal_action_sets: tuple[tuple[FeedbackAction, ...], ...] = ()
    average_speed: Fraction | None = None
    depth1: tuple[Depth1Record, ...] = ()
    node_expansions: int = 0
    wall_ms: int = 0

    @property
    def depth1_deltas(self) -> list[int]:
        return [r.delta for r in self.depth1 if r.delta is not None]

    @property
    def depth1_best(self) -> int | None:
        deltas = self.depth1_deltas
        return max(deltas) if deltas else None

    @property
    def depth1_worst(self) -> int | None:
        deltas = self.depth1_deltas
        return min(deltas) if deltas else None

    @property
    def depth1_avg(self) -> Fraction | None:
        deltas = self.depth1_deltas
        if not deltas:
            return None
        return Fraction(sum(deltas), len(deltas))


def solve_min_feedback(case: SimCase, meter: WorkMeter) -> tuple[int | None, tuple[FeedbackAction, ...] | None, int]:
    """Minimal action count reaching the target, with one witness set.

    Phase one runs greedy (remaining-difference heuristic); its answer is
    accepted when it meets the mismatch-area lower bound, otherwise the
    exact admissible search settles it.  Returns (depth, witness,
    expansions); depth None means the target is unreachable.
    """
    floor = mismatch_area_count(case.initial, case.target)
    first = _best_first(case, lambda d: similarity_distance(d, case.target), meter)
    if first.depth is None:
        # The greedy pass drains the whole reachable space before giving
        # up, so the exact pass could not answer differently.
        return None, None, first.expansions
    if first.depth == floor:
        return first.depth, first.witness, first.expansions
    second = _best_first(case, lambda d: mismatch_area_count(d, case.target), meter)
    expansions = first.expansions + second.expansions
    return second.depth, second.witness, expansions


def depth1_study(case: SimCase, meter: WorkMeter) -> tuple[Depth1Record, ...]:
    """Score every single-action state by how much closer it gets."""
    records = []
    for action in sorted(candidates(case.initial, case.target), key=action_sort_key):
        child = _fixed_diff(case, (action,), meter)
        if child is None:
            records.append(Depth1Record(action, None, False))
        else:
            delta = case.initial_distance - similarity_distance(child, case.target)
            records.append(Depth1Record(action, delta, True))
    return tuple(records)


def simulate_case(case: SimCase, budget_ms: int | None) -> SimResult:
    meter = WorkMeter(budget_ms)
    result = SimResult(
        case_id=case.case_id,
        n=case.pair.n,
        m=case.pair.m,
        changed_lines=case.changed_lines,
        initial_distance=case.initial_distance,
        mismatch_areas=mismatch_area_count(case.initial, case.target),
        status="ok",
    )
    try:
        depth, witness, expansions = solve_min_feedback(case, meter)
        result.node_expansions = expansions
        if depth is None:
            result.status = "unsolvable"
        else:
            result.min_feedback = depth
            result.optimal_action_sets = (witness,)
            if depth > 0:
                result.average_speed = Fraction(case.initial_distance, depth)
        result.depth1 = depth1_study(case, meter)
    except BudgetExceededError:
        result.status = "timeout"
    except MemoryError:  # pragma: no cover - depends on host limits
        result.status = "oom"
    result.wall_ms = meter.spent_ms
    return result
