"""Loading file-pair corpora and selecting the cases worth simulating.

A corpus root either contains a ``manifest.jsonl`` (one ``{"id", "old",
"new"}`` object per line, paths relative to the root) or one subdirectory per
case holding exactly one ``old.*`` and one ``new.*`` file.
"""

from __future__ import annotations

import json
import logging
import statistics
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .model import build_line_pair
from .sim import SimCase, build_sim_case

log = logging.getLogger(__name__)

MAX_SIDE = 3000
MIN_DISTANCE = 1
MAX_DISTANCE = 30


@dataclass(frozen=True)
class CorpusEntry:
    case_id: str
    old_text: str
    new_text: str


def _read(path: Path) -> str:
    return path.read_text(encoding="utf-8", errors="replace")


def _entry_from_dir(case_dir: Path) -> CorpusEntry | None:
    old = sorted(case_dir.glob("old.*")) or sorted(case_dir.glob("old"))
    new = sorted(case_dir.glob("new.*")) or sorted(case_dir.glob("new"))
    if len(old) != 1 or len(new) != 1:
        log.warning("skipping %s: need exactly one old.* and one new.* file", case_dir)
        return None
    return CorpusEntry(case_dir.name, _read(old[0]), _read(new[0]))


def load_entries(root: str | Path) -> list[CorpusEntry]:
    root = Path(root)
    manifest = root / "manifest.jsonl"
    entries: list[CorpusEntry] = []
    if manifest.is_file():
        for lineno, line in enumerate(manifest.read_text().splitlines(), start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                entries.append(
                    CorpusEntry(str(obj["id"]), _read(root / obj["old"]), _read(root / obj["new"]))
                )
            except (KeyError, ValueError, OSError) as exc:
                log.warning("skipping manifest line %d: %s", lineno, exc)
        return entries
    if not root.is_dir():
        raise FileNotFoundError(f"corpus root not found: {root}")
    for case_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        try:
            entry = _entry_from_dir(case_dir)
        except OSError as exc:
            log.warning("skipping %s: %s", case_dir, exc)
            continue
        if entry is not None:
            entries.append(entry)
    return entries


def case_from_entry(entry: CorpusEntry, strip_blank: bool = True) -> SimCase | None:
    """Build the simulation case, or None when the entry is out of scope.

    Kept are pairs at most MAX_SIDE lines per side whose two diffs disagree
    and whose starting distance lies in [MIN_DISTANCE, MAX_DISTANCE].
    """
    pair = build_line_pair(entry.old_text, entry.new_text, strip_blank=strip_blank)
    if pair.n > MAX_SIDE or pair.m > MAX_SIDE:
        return None
    case = build_sim_case(entry.case_id, pair)
    if case.initial == case.target:
        return None
    if not MIN_DISTANCE <= case.initial_distance <= MAX_DISTANCE:
        return None
    return case


def load_cases(
    root: str | Path,
    strip_blank: bool = True,
    exclude_ids: Iterable[str] = (),
) -> list[SimCase]:
    excluded = set(exclude_ids)
    cases = []
    for entry in load_entries(root):
        if entry.case_id in excluded:
            continue
        case = case_from_entry(entry, strip_blank=strip_blank)
        if case is None:
            log.info("filtered out %s", entry.case_id)
            continue
        cases.append(case)
    return cases


def divergence_ratio(entries: Sequence[CorpusEntry], strip_blank: bool = True) -> Fraction:
    """Fraction of entries whose histogram diff differs from the shortest one."""
    if not entries:
        return Fraction(0)
    divergent = 0
    for entry in entries:
        pair = build_line_pair(entry.old_text, entry.new_text, strip_blank=strip_blank)
        case = build_sim_case(entry.case_id, pair)
        if case.target != case.initial:
            divergent += 1
    return Fraction(divergent, len(entries))


def _five_number(values: Sequence[int]) -> dict:
    data = sorted(values)
    if len(data) == 1:
        q1 = q2 = q3 = float(data[0])
    else:
        q1, q2, q3 = statistics.quantiles(data, n=4, method="inclusive")
    return {
        "min": data[0],
        "q1": q1,
        "median": q2,
        "q3": q3,
        "max": data[-1],
        "mean": statistics.mean(data),
    }


def summarize_cases(cases: Sequence[SimCase]) -> dict:
    if not cases:
        return {"count": 0}
    return {
        "count": len(cases),
        "old_lines": _five_number([c.pair.n for c in cases]),
        "new_lines": _five_number([c.pair.m for c in cases]),
        "changed_lines": _five_number([c.changed_lines for c in cases]),
        "initial_distance": _five_number([c.initial_distance for c in cases]),
    }
