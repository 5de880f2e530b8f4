"""Aggregation of per-case results and the CSV/JSON artifacts.

All per-case quantities are exact rationals; fractions are serialized as
"p/q" strings so that recomputing any aggregate from the CSV reproduces the
JSON bit for bit.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .sim import SimResult

CSV_COLUMNS = [
    "case_id",
    "N",
    "M",
    "changed_lines",
    "initial_distance",
    "mismatch_areas",
    "min_feedback",
    "average_speed",
    "depth1_best",
    "depth1_avg",
    "depth1_worst",
    "status",
    "wall_ms",
]


def _fmt(value: int | Fraction | None) -> str:
    if value is None:
        return ""
    return str(value)


def result_row(result: SimResult) -> list[str]:
    return [
        result.case_id,
        str(result.n),
        str(result.m),
        str(result.changed_lines),
        str(result.initial_distance),
        str(result.mismatch_areas),
        _fmt(result.min_feedback),
        _fmt(result.average_speed),
        _fmt(result.depth1_best),
        _fmt(result.depth1_avg),
        _fmt(result.depth1_worst),
        result.status,
        str(result.wall_ms),
    ]


def write_cases_csv(results: Sequence[SimResult], path: str | Path) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for result in results:
            writer.writerow(result_row(result))


@dataclass(frozen=True)
class CaseSummary:
    """The slice of a per-case result the aggregate depends on.

    Both freshly simulated results and rows read back from cases.csv reduce
    to this shape, which is what makes the recomputation check exact.
    """

    case_id: str
    status: str
    min_feedback: int | None
    average_speed: Fraction | None
    depth1_best: Fraction | None
    depth1_avg: Fraction | None
    depth1_worst: Fraction | None
    node_expansions: int = 0


def summarize_result(result: SimResult) -> CaseSummary:
    return CaseSummary(
        case_id=result.case_id,
        status=result.status,
        min_feedback=result.min_feedback,
        average_speed=result.average_speed,
        depth1_best=None if result.depth1_best is None else Fraction(result.depth1_best),
        depth1_avg=result.depth1_avg,
        depth1_worst=None if result.depth1_worst is None else Fraction(result.depth1_worst),
        node_expansions=result.node_expansions,
    )


def _parse(value: str) -> Fraction | None:
    return Fraction(value) if value else None


def summaries_from_csv(path: str | Path) -> list[CaseSummary]:
    with open(path, newline="") as handle:
        return [
            CaseSummary(
                case_id=row["case_id"],
                status=row["status"],
                min_feedback=int(row["min_feedback"]) if row["min_feedback"] else None,
                average_speed=_parse(row["average_speed"]),
                depth1_best=_parse(row["depth1_best"]),
                depth1_avg=_parse(row["depth1_avg"]),
                depth1_worst=_parse(row["depth1_worst"]),
            )
            for row in csv.DictReader(handle)
        ]


# -- aggregate ---------------------------------------------------------------

def _mean(values: Sequence[Fraction | int]) -> Fraction:
    return Fraction(sum(Fraction(v) for v in values), len(values))


def _percentile(values: Sequence[Fraction | int], p: Fraction) -> Fraction:
    """Linear interpolation between closest ranks (inclusive method)."""
    ordered = sorted(Fraction(v) for v in values)
    if len(ordered) == 1:
        return ordered[0]
    rank = (len(ordered) - 1) * p
    lo = int(rank)
    frac = rank - lo
    if lo + 1 >= len(ordered):
        return ordered[-1]
    return ordered[lo] + (ordered[lo + 1] - ordered[lo]) * frac


def _stat_block(values: Sequence[Fraction | int]) -> dict:
    mean = _mean(values)
    return {
        "mean": str(mean),
        "mean_float": float(mean),
        "p1": str(_percentile(values, Fraction(1, 100))),
        "p99": str(_percentile(values, Fraction(99, 100))),
        "count": len(values),
    }


def aggregate(results: Sequence[SimResult | CaseSummary]) -> dict:
    """Summary statistics over solved cases.

    Category ratios follow the per-case convention: each case contributes
    its own category value divided by its own ideal speed, and those
    quotients are averaged.  The ideal category is therefore exactly 1.
    """
    summaries = [r if isinstance(r, CaseSummary) else summarize_result(r) for r in results]
    by_status: dict[str, int] = {}
    for r in summaries:
        by_status[r.status] = by_status.get(r.status, 0) + 1
    solved = [r for r in summaries if r.status == "ok" and r.min_feedback]

    out: dict = {
        "cases": {"total": len(summaries), **{k: by_status[k] for k in sorted(by_status)}},
        "node_expansions_total": sum(r.node_expansions for r in summaries),
        "solved": len(solved),
    }
    if not solved:
        return out

    feedback_counts: dict[str, int] = {}
    for r in solved:
        key = str(r.min_feedback)
        feedback_counts[key] = feedback_counts.get(key, 0) + 1
    mean_feedback = _mean([r.min_feedback for r in solved])
    out["min_feedback"] = {
        "distribution": {k: feedback_counts[k] for k in sorted(feedback_counts, key=int)},
        "mean": str(mean_feedback),
        "mean_float": float(mean_feedback),
    }

    speed_counts: dict[str, int] = {}
    for r in solved:
        key = str(r.average_speed)
        speed_counts[key] = speed_counts.get(key, 0) + 1
    out["average_speed"] = {
        **_stat_block([r.average_speed for r in solved]),
        "distribution": {k: speed_counts[k] for k in sorted(speed_counts, key=Fraction)},
    }

    # Depth-1 categories; cases whose children were all infeasible carry no
    # depth-1 statistics and stay out, mirroring the sentinel rule.
    eligible = [r for r in solved if r.depth1_best is not None]
    categories: dict[str, dict] = {}
    if eligible:
        categories["ideal"] = {
            **_stat_block([r.average_speed for r in eligible]),
            "ratio_to_ideal": "1",
            "ratio_to_ideal_float": 1.0,
        }
        for name, pick in (
            ("best", lambda r: r.depth1_best),
            ("average", lambda r: r.depth1_avg),
            ("worst", lambda r: r.depth1_worst),
        ):
            values = [pick(r) for r in eligible]
            ratios = [pick(r) / r.average_speed for r in eligible]
            ratio_mean = _mean(ratios)
            categories[name] = {
                **_stat_block(values),
                "ratio_to_ideal": str(ratio_mean),
                "ratio_to_ideal_float": float(ratio_mean),
            }
    out["delta_distance"] = categories
    return out


def write_aggregate_json(agg: dict, path: str | Path) -> None:
    with open(path, "w") as handle:
        json.dump(agg, handle, indent=2, sort_keys=True)
        handle.write("\n")
