"""Independent oracles and generators the tests check the package against.

Everything here is deliberately naive: plain BFS on the edit graph instead
of the DP, exhaustive level-by-level search instead of the two-phase solver,
and a from-scratch unified-diff patcher.
"""

from __future__ import annotations

import random
import re
from collections import deque

from idiff import (
    ConstraintSet,
    Diff,
    InfeasibleDiffError,
    LinePair,
    build_line_pair,
    candidates,
    diff_fix,
)
from idiff.model import diagonal, horizontal, vertical
from idiff.sim import SimCase


def bfs_shortest_length(pair: LinePair, cs: ConstraintSet = ConstraintSet()) -> int | None:
    """Minimum edge count from (0,0) to (n,m), or None when unreachable."""
    start, goal = (0, 0), (pair.n, pair.m)
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        (i, j), dist = queue.popleft()
        if (i, j) == goal:
            return dist
        steps = []
        if i < pair.n and (i + 1) not in cs.no_delete:
            steps.append((i + 1, j))
        if j < pair.m and (j + 1) not in cs.no_insert:
            steps.append((i, j + 1))
        if (
            i < pair.n
            and j < pair.m
            and pair.eq(i + 1, j + 1)
            and (i + 1, j + 1) not in cs.no_match
        ):
            steps.append((i + 1, j + 1))
        for node in steps:
            if node not in seen:
                seen.add(node)
                queue.append((node, dist + 1))
    return None


def all_shortest_edge_sets(
    pair: LinePair, cs: ConstraintSet = ConstraintSet(), cap: int = 200
) -> list[frozenset] | None:
    """Every minimum-length path (as an edge set), up to cap of them."""
    n, m = pair.n, pair.m
    inf = 1 << 30
    dist = [[inf] * (m + 1) for _ in range(n + 1)]
    dist[n][m] = 0
    for i in range(n, -1, -1):
        for j in range(m, -1, -1):
            if i == n and j == m:
                continue
            best = inf
            if i < n and (i + 1) not in cs.no_delete:
                best = min(best, dist[i + 1][j] + 1)
            if j < m and (j + 1) not in cs.no_insert:
                best = min(best, dist[i][j + 1] + 1)
            if i < n and j < m and pair.eq(i + 1, j + 1) and (i + 1, j + 1) not in cs.no_match:
                best = min(best, dist[i + 1][j + 1] + 1)
            dist[i][j] = best
    if dist[0][0] >= inf:
        return None
    paths: list[frozenset] = []
    stack: list[tuple[tuple[int, int], list]] = [((0, 0), [])]
    while stack and len(paths) < cap:
        (i, j), edges = stack.pop()
        if (i, j) == (n, m):
            paths.append(frozenset(edges))
            continue
        if i < n and (i + 1) not in cs.no_delete and dist[i + 1][j] == dist[i][j] - 1:
            stack.append(((i + 1, j), edges + [horizontal(i + 1, j)]))
        if j < m and (j + 1) not in cs.no_insert and dist[i][j + 1] == dist[i][j] - 1:
            stack.append(((i, j + 1), edges + [vertical(i, j + 1)]))
        if (
            i < n
            and j < m
            and pair.eq(i + 1, j + 1)
            and (i + 1, j + 1) not in cs.no_match
            and dist[i + 1][j + 1] == dist[i][j] - 1
        ):
            stack.append(((i + 1, j + 1), edges + [diagonal(i + 1, j + 1)]))
    return paths


def bfs_min_feedback(case: SimCase, max_depth: int = 8) -> int | None:
    """Exhaustive breadth-first minimum over candidate action sets."""
    frontier: dict[frozenset, Diff] = {frozenset(): case.initial}
    seen = set(frontier)
    for depth in range(max_depth + 1):
        nxt: dict[frozenset, Diff] = {}
        for actions, diff in frontier.items():
            if diff == case.target:
                return depth
            for action in candidates(diff, case.target):
                key = actions | {action}
                if key in seen:
                    continue
                seen.add(key)
                try:
                    nxt[key] = diff_fix(case.pair, key)
                except InfeasibleDiffError:
                    continue
        frontier = nxt
        if not frontier:
            return None
    return None


_HUNK = re.compile(r"@@ -(\d+),(\d+) \+(\d+),(\d+) @@")


def apply_unified(old_lines: list[str], patch: str) -> list[str]:
    """Apply a unified diff to a line list, asserting every anchor."""
    out: list[str] = []
    pos = 1
    lines = patch.splitlines()
    assert lines[0].startswith("--- ") and lines[1].startswith("+++ ")
    k = 2
    while k < len(lines):
        m = _HUNK.match(lines[k])
        assert m, lines[k]
        old_start, old_count = int(m[1]), int(m[2])
        first = old_start if old_count else old_start + 1
        assert pos <= first
        while pos < first:
            out.append(old_lines[pos - 1])
            pos += 1
        k += 1
        while k < len(lines) and not lines[k].startswith("@@"):
            tag, text = lines[k][0], lines[k][1:]
            if tag == " ":
                assert old_lines[pos - 1] == text
                out.append(text)
                pos += 1
            elif tag == "-":
                assert old_lines[pos - 1] == text
                pos += 1
            else:
                assert tag == "+"
                out.append(text)
            k += 1
    out.extend(old_lines[pos - 1 :])
    return out


def random_pair(rng: random.Random, max_side: int = 12, alphabet: str = "abc") -> LinePair:
    n, m = rng.randint(0, max_side), rng.randint(0, max_side)
    old = "".join(rng.choice(alphabet) + "\n" for _ in range(n))
    new = "".join(rng.choice(alphabet) + "\n" for _ in range(m))
    return build_line_pair(old, new)


def random_constraints(rng: random.Random, pair: LinePair) -> ConstraintSet:
    def rows(k: int) -> frozenset[int]:
        if not pair.n:
            return frozenset()
        return frozenset(rng.randint(1, pair.n) for _ in range(k))

    def cols(k: int) -> frozenset[int]:
        if not pair.m:
            return frozenset()
        return frozenset(rng.randint(1, pair.m) for _ in range(k))

    no_match = frozenset()
    if pair.n and pair.m:
        no_match = frozenset(
            (rng.randint(1, pair.n), rng.randint(1, pair.m)) for _ in range(rng.randint(0, 3))
        )
    return ConstraintSet(
        no_match=no_match,
        no_delete=rows(rng.randint(0, 2)),
        no_insert=cols(rng.randint(0, 2)),
    )
