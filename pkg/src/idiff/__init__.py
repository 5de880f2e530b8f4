"""Interactive optimization of line diffs.

A diff is a path through the edit graph of two line sequences.  Reviewers
reject parts of a rendered diff with feedback actions; each action removes
edges from the graph and the shortest remaining path becomes the new diff.
The sim module measures, over a corpus, how few actions are ever needed to
steer the shortest diff onto a given target.
"""

from .differ import (
    EMPTY_CONSTRAINTS,
    ConstraintSet,
    InfeasibleDiffError,
    lcs_length,
    shortest_diff,
)
from .feedback import (
    FeedbackAction,
    FeedbackState,
    InvalidActionError,
    action_from_edge,
    diff_fix,
    mismatch,
    new_orphan,
    old_orphan,
    parse_action,
)
from .histogram import histogram_diff
from .model import (
    Diff,
    Edge,
    EdgeKind,
    InvalidDiffError,
    LinePair,
    build_line_pair,
    diff_from_edges,
    diff_rows,
    render_unified,
)
from .sim import (
    BudgetExceededError,
    SimCase,
    SimResult,
    WorkMeter,
    build_sim_case,
    candidates,
    mismatch_area_count,
    similarity_distance,
    simulate_case,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ConstraintSet",
    "Diff",
    "EMPTY_CONSTRAINTS",
    "Edge",
    "EdgeKind",
    "FeedbackAction",
    "FeedbackState",
    "InfeasibleDiffError",
    "InvalidActionError",
    "InvalidDiffError",
    "LinePair",
    "SimCase",
    "SimResult",
    "WorkMeter",
    "action_from_edge",
    "build_line_pair",
    "build_sim_case",
    "candidates",
    "diff_fix",
    "diff_from_edges",
    "diff_rows",
    "histogram_diff",
    "lcs_length",
    "mismatch",
    "mismatch_area_count",
    "new_orphan",
    "old_orphan",
    "parse_action",
    "render_unified",
    "shortest_diff",
    "similarity_distance",
    "simulate_case",
]
