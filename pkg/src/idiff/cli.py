"""Command-line entry points.

Exit codes: 0 no differences (or simulation produced results), 1 the inputs
differ, 2 usage or input error, 3 the requested constraints are infeasible,
4 a simulation run solved zero cases.
"""

from __future__ import annotations

import argparse
import os
import sys
from itertools import repeat
from pathlib import Path

from .corpus import load_cases, summarize_cases
from .differ import InfeasibleDiffError, shortest_diff
from .feedback import FeedbackAction, InvalidActionError, action_to_obj, diff_fix, parse_action
from .histogram import histogram_diff
from .model import LinePair, build_line_pair, render_unified
from .report import aggregate, write_aggregate_json, write_cases_csv
from .sim import simulate_case

DEFAULT_BUDGET_MS = 30 * 60 * 1000

_UNITS = {"ms": 1, "s": 1000, "m": 60_000, "h": 3_600_000}


def parse_budget(text: str) -> int | None:
    """A duration like 500ms, 30s, 5m, 2h; bare digits are seconds."""
    text = text.strip().lower()
    if text == "none":
        return None
    for suffix, scale in sorted(_UNITS.items(), key=lambda kv: -len(kv[0])):
        if text.endswith(suffix):
            text = text[: -len(suffix)]
            break
    else:
        scale = 1000
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"cannot parse budget {text!r}")
    if value < 0:
        raise ValueError("budget cannot be negative")
    return value * scale


def default_budget_ms() -> int:
    env = os.environ.get("IDIFF_BUDGET_SECS")
    if env:
        return int(env) * 1000
    return DEFAULT_BUDGET_MS


def _read_pair(args: argparse.Namespace) -> LinePair:
    old = Path(args.old).read_text(encoding="utf-8", errors="replace")
    new = Path(args.new).read_text(encoding="utf-8", errors="replace")
    return build_line_pair(old, new, strip_blank=args.strip_blank)


def cmd_diff(args: argparse.Namespace) -> int:
    pair = _read_pair(args)
    diff = histogram_diff(pair) if args.histogram else shortest_diff(pair)
    text = render_unified(pair, diff, args.context, args.label[0], args.label[1])
    if not text:
        return 0
    sys.stdout.write(text)
    return 1


def _load_session_actions(path: Path) -> list[FeedbackAction]:
    import json

    if not path.exists():
        return []
    obj = json.loads(path.read_text())
    return [parse_action(raw) for raw in obj["actions"]]


def cmd_fix(args: argparse.Namespace) -> int:
    import json

    pair = _read_pair(args)
    actions: list[FeedbackAction] = []
    if args.session:
        actions = _load_session_actions(Path(args.session))
    if args.undo:
        if not actions:
            print("nothing to undo", file=sys.stderr)
            return 2
        actions.pop()
    for raw in args.action:
        parsed = parse_action(raw)
        if parsed not in actions:
            actions.append(parsed)
    diff = diff_fix(pair, actions)
    if args.session:
        payload = {"actions": [action_to_obj(a) for a in actions]}
        Path(args.session).write_text(json.dumps(payload, indent=2) + "\n")
    text = render_unified(pair, diff, args.context, args.label[0], args.label[1])
    if not text:
        return 0
    sys.stdout.write(text)
    return 1


def cmd_simulate(args: argparse.Namespace) -> int:
    budget_ms = parse_budget(args.budget) if args.budget else default_budget_ms()
    cases = sorted(load_cases(args.corpus, strip_blank=args.strip_blank), key=lambda c: c.case_id)
    if not cases:
        print("no usable cases in corpus", file=sys.stderr)
        return 2

    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(simulate_case, cases, repeat(budget_ms)))
    else:
        results = [simulate_case(case, budget_ms) for case in cases]
    results.sort(key=lambda r: r.case_id)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_cases_csv(results, out_dir / "cases.csv")
    agg = aggregate(results)
    write_aggregate_json(agg, out_dir / "aggregate.json")

    summary = summarize_cases(cases)
    print(f"cases: {summary['count']}")
    print(f"solved: {agg['solved']}")
    for status, count in sorted(agg["cases"].items()):
        if status != "total":
            print(f"  {status}: {count}")
    if agg.get("min_feedback"):
        print(f"min feedback mean: {agg['min_feedback']['mean']}")
        print(f"average speed mean: {agg['average_speed']['mean']}")
    print(f"wrote {out_dir / 'cases.csv'}")
    print(f"wrote {out_dir / 'aggregate.json'}")
    return 0 if agg["solved"] else 4


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app()
    if args.open:
        import threading
        import webbrowser

        threading.Timer(
            0.5, lambda: webbrowser.open(f"http://{args.host}:{args.port}/")
        ).start()
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    except OSError as exc:
        print(f"cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return 2
    return 0


def _add_render_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("old", help="path to the old file")
    sub.add_argument("new", help="path to the new file")
    sub.add_argument("--strip-blank", action="store_true", help="ignore blank lines")
    sub.add_argument("--context", type=int, default=3, metavar="N", help="context lines per hunk")
    sub.add_argument(
        "--label",
        nargs=2,
        default=["old", "new"],
        metavar=("FROM", "TO"),
        help="header labels",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="idiff")
    commands = parser.add_subparsers(dest="command", required=True)

    p_diff = commands.add_parser("diff", help="print the shortest diff between two files")
    _add_render_options(p_diff)
    p_diff.add_argument("--histogram", action="store_true", help="use the histogram strategy")
    p_diff.set_defaults(func=cmd_diff)

    p_fix = commands.add_parser("fix", help="recompute a diff under feedback actions")
    _add_render_options(p_fix)
    p_fix.add_argument(
        "--action",
        action="append",
        default=[],
        metavar="JSON",
        help='feedback action, e.g. {"old": 2, "new": null}',
    )
    p_fix.add_argument("--session", metavar="FILE", help="persist the action list in FILE")
    p_fix.add_argument("--undo", action="store_true", help="drop the last session action first")
    p_fix.set_defaults(func=cmd_fix)

    p_sim = commands.add_parser("simulate", help="run the feedback-search study over a corpus")
    p_sim.add_argument("corpus", help="corpus directory")
    p_sim.add_argument("--out", default="results", metavar="DIR", help="output directory")
    p_sim.add_argument(
        "--budget",
        default=None,
        metavar="DURATION",
        help="per-case work budget (e.g. 30s, 5m; default 30m, or IDIFF_BUDGET_SECS)",
    )
    p_sim.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes")
    p_sim.add_argument(
        "--strip-blank",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="ignore blank lines (default on)",
    )
    p_sim.set_defaults(func=cmd_simulate)

    p_serve = commands.add_parser("serve", help="start the interactive HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--open", action="store_true", help="open a browser tab")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleDiffError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 3
    except InvalidActionError as exc:
        print(f"invalid action: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
