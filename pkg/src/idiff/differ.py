"""Shortest-path differ over the edit graph, with edge-removal constraints.

The optimum is chosen by a two-level cost: fewest edges first, then fewest
edges outside the reference path (when one is given).  Among equal-cost
predecessors the backtrace prefers diagonal, then horizontal, then vertical,
which makes the result deterministic.  A feasible reference that is already
shortest is therefore returned verbatim: it is the unique path with zero
off-reference edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .model import Diff, Edge, EdgeKind, LinePair

# Above this many grid cells the vectorized table builder takes over.
_VECTOR_THRESHOLD = 16384

_INF = 1 << 40


@dataclass(frozen=True)
class ConstraintSet:
    """Edges removed from the edit graph.

    no_match removes single diagonals; no_delete removes every horizontal
    edge of a row (the old line may not be deleted); no_insert removes every
    vertical edge of a column (the new line may not be added).
    """

    no_match: frozenset[tuple[int, int]] = frozenset()
    no_delete: frozenset[int] = frozenset()
    no_insert: frozenset[int] = frozenset()

    def merged(self, other: "ConstraintSet") -> "ConstraintSet":
        return ConstraintSet(
            self.no_match | other.no_match,
            self.no_delete | other.no_delete,
            self.no_insert | other.no_insert,
        )

    def removes(self, edge: Edge) -> bool:
        if edge.kind == EdgeKind.DIAGONAL:
            return (edge.i, edge.j) in self.no_match
        if edge.kind == EdgeKind.HORIZONTAL:
            return edge.i in self.no_delete
        return edge.j in self.no_insert

    @property
    def is_empty(self) -> bool:
        return not (self.no_match or self.no_delete or self.no_insert)


EMPTY_CONSTRAINTS = ConstraintSet()


class InfeasibleDiffError(Exception):
    """No path satisfies the constraints.

    blocking_old/blocking_new name constrained rows/columns left with no
    usable diagonal, the cheap necessary condition.  Both can be empty when
    only the interaction of several constraints blocks every path.
    """

    def __init__(self, blocking_old: Sequence[int], blocking_new: Sequence[int]):
        self.blocking_old = tuple(sorted(blocking_old))
        self.blocking_new = tuple(sorted(blocking_new))
        parts = []
        if self.blocking_old:
            parts.append(f"old line(s) {list(self.blocking_old)} must match but cannot")
        if self.blocking_new:
            parts.append(f"new line(s) {list(self.blocking_new)} must match but cannot")
        if not parts:
            parts.append("constraints interact to block every path")
        super().__init__("; ".join(parts))


def _diagnose(pair: LinePair, constraints: ConstraintSet) -> tuple[list[int], list[int]]:
    blocked_old = []
    for i in constraints.no_delete:
        if not any((i, j) not in constraints.no_match for j in pair.match_columns(i)):
            blocked_old.append(i)
    old_positions: dict[str, list[int]] = {}
    for i, text in enumerate(pair.old_lines, start=1):
        old_positions.setdefault(text, []).append(i)
    blocked_new = []
    for j in constraints.no_insert:
        rows = old_positions.get(pair.new_lines[j - 1], [])
        if not any((i, j) not in constraints.no_match for i in rows):
            blocked_new.append(j)
    return blocked_old, blocked_new


def _ref_by_node(reference: Diff | None) -> dict[tuple[int, int], EdgeKind]:
    if reference is None:
        return {}
    return {(e.i, e.j): e.kind for e in reference.edges}


def _cost_table_python(
    pair: LinePair,
    constraints: ConstraintSet,
    ref: dict[tuple[int, int], EdgeKind],
    unit: int,
) -> list[list[int]]:
    n, m = pair.n, pair.m
    no_match = constraints.no_match
    no_delete = constraints.no_delete
    no_insert = constraints.no_insert
    cost = [[_INF] * (m + 1) for _ in range(n + 1)]
    cost[0][0] = 0
    row0 = cost[0]
    for j in range(1, m + 1):
        if j not in no_insert:
            w = unit if ref.get((0, j)) == EdgeKind.VERTICAL else unit + 1
            row0[j] = min(row0[j], row0[j - 1] + w)
    for i in range(1, n + 1):
        prev = cost[i - 1]
        row = cost[i]
        row_banned = i in no_delete
        matches = set(pair.match_columns(i))
        if not row_banned:
            w = unit if ref.get((i, 0)) == EdgeKind.HORIZONTAL else unit + 1
            row[0] = prev[0] + w if prev[0] < _INF else _INF
        for j in range(1, m + 1):
            best = _INF
            if j in matches and (i, j) not in no_match and prev[j - 1] < _INF:
                w = unit if ref.get((i, j)) == EdgeKind.DIAGONAL else unit + 1
                best = prev[j - 1] + w
            if not row_banned and prev[j] < _INF:
                w = unit if ref.get((i, j)) == EdgeKind.HORIZONTAL else unit + 1
                c = prev[j] + w
                if c < best:
                    best = c
            if j not in no_insert and row[j - 1] < _INF:
                w = unit if ref.get((i, j)) == EdgeKind.VERTICAL else unit + 1
                c = row[j - 1] + w
                if c < best:
                    best = c
            row[j] = best
    return cost


def _cost_table_numpy(
    pair: LinePair,
    constraints: ConstraintSet,
    ref: dict[tuple[int, int], EdgeKind],
    unit: int,
) -> np.ndarray:
    n, m = pair.n, pair.m
    cost = np.full((n + 1, m + 1), _INF, dtype=np.int64)
    cost[0, 0] = 0

    ref_by_row: dict[int, list[tuple[int, EdgeKind]]] = {}
    for (i, j), kind in ref.items():
        ref_by_row.setdefault(i, []).append((j, kind))

    ins_banned = np.zeros(m + 1, dtype=bool)
    for j in constraints.no_insert:
        if 0 < j <= m:
            ins_banned[j] = True

    def v_weights(i: int) -> np.ndarray:
        w = np.full(m + 1, unit + 1, dtype=np.int64)
        for j, kind in ref_by_row.get(i, ()):
            if kind == EdgeKind.VERTICAL:
                w[j] = unit
        w[ins_banned] = _INF
        w[0] = 0
        return w

    def v_scan(base: np.ndarray, vw: np.ndarray) -> np.ndarray:
        # cost[j] = min over k <= j of base[k] + sum(vw[k+1..j]):
        # a running minimum over prefix-shifted values.
        s = np.cumsum(vw)
        best = np.minimum.accumulate(base - s)
        return np.minimum(base, best + s)

    cost[0] = v_scan(cost[0], v_weights(0))

    for i in range(1, n + 1):
        prev = cost[i - 1]
        base = np.full(m + 1, _INF, dtype=np.int64)

        if i not in constraints.no_delete:
            hw = np.full(m + 1, unit + 1, dtype=np.int64)
            for j, kind in ref_by_row.get(i, ()):
                if kind == EdgeKind.HORIZONTAL:
                    hw[j] = unit
            base = prev + hw

        cols = [
            j
            for j in pair.match_columns(i)
            if (i, j) not in constraints.no_match
        ]
        if cols:
            idx = np.asarray(cols, dtype=np.intp)
            dw = np.full(len(cols), unit + 1, dtype=np.int64)
            for k, j in enumerate(cols):
                if ref.get((i, j)) == EdgeKind.DIAGONAL:
                    dw[k] = unit
            cand = prev[idx - 1] + dw
            np.minimum.at(base, idx, cand)

        cost[i] = v_scan(base, v_weights(i))
    return cost


def _backtrace(
    pair: LinePair,
    constraints: ConstraintSet,
    ref: dict[tuple[int, int], EdgeKind],
    unit: int,
    cost,
) -> list[Edge]:
    edges: list[Edge] = []
    i, j = pair.n, pair.m
    while (i, j) != (0, 0):
        here = int(cost[i][j]) if isinstance(cost, list) else int(cost[i, j])

        def pred_cost(pi: int, pj: int) -> int:
            return int(cost[pi][pj]) if isinstance(cost, list) else int(cost[pi, pj])

        def weight(kind: EdgeKind) -> int:
            return unit if ref.get((i, j)) == kind else unit + 1

        if (
            i > 0
            and j > 0
            and pair.eq(i, j)
            and (i, j) not in constraints.no_match
            and pred_cost(i - 1, j - 1) + weight(EdgeKind.DIAGONAL) == here
        ):
            edges.append(Edge(EdgeKind.DIAGONAL, i, j))
            i, j = i - 1, j - 1
        elif (
            i > 0
            and i not in constraints.no_delete
            and pred_cost(i - 1, j) + weight(EdgeKind.HORIZONTAL) == here
        ):
            edges.append(Edge(EdgeKind.HORIZONTAL, i, j))
            i = i - 1
        elif (
            j > 0
            and j not in constraints.no_insert
            and pred_cost(i, j - 1) + weight(EdgeKind.VERTICAL) == here
        ):
            edges.append(Edge(EdgeKind.VERTICAL, i, j))
            j = j - 1
        else:  # pragma: no cover - would indicate a corrupt table
            raise AssertionError(f"no predecessor reproduces cost at ({i}, {j})")
    edges.reverse()
    return edges


def shortest_diff(
    pair: LinePair,
    constraints: ConstraintSet = EMPTY_CONSTRAINTS,
    reference: Diff | None = None,
) -> Diff:
    """Shortest diff under the constraints, stable toward ``reference``.

    Raises InfeasibleDiffError when the constraints leave no path.
    """
    ref = _ref_by_node(reference)
    # Scale the length term above any possible off-reference count so the
    # two-level comparison collapses into one integer.
    unit = pair.n + pair.m + 1
    if (pair.n + 1) * (pair.m + 1) <= _VECTOR_THRESHOLD:
        cost = _cost_table_python(pair, constraints, ref, unit)
        sink = cost[pair.n][pair.m]
    else:
        cost = _cost_table_numpy(pair, constraints, ref, unit)
        sink = int(cost[pair.n, pair.m])
    if sink >= _INF:
        raise InfeasibleDiffError(*_diagnose(pair, constraints))
    return Diff(tuple(_backtrace(pair, constraints, ref, unit, cost)))


def lcs_length(pair: LinePair, constraints: ConstraintSet = EMPTY_CONSTRAINTS) -> int:
    """Number of matched pairs in a shortest diff under the constraints.

    The identity |edges| = N + M - lcs_length ties this to shortest_diff.
    """
    d = shortest_diff(pair, constraints)
    return pair.n + pair.m - len(d.edges)
