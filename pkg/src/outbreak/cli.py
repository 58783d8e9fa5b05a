"""Command line entry point.

Subcommands: ``run`` (bot plays one game, optionally recording a replay),
``verify`` (re-simulate a replay and check its digests), ``batch``
(per-seed stats as CSV), ``score-survey`` (questionnaire scoring),
``snapshots`` (render-snapshot stream for UI fixtures), and ``serve``
(local HTTP session API plus static frontend).

Exit codes: 0 success or PASS, 1 verification failure, 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from importlib import resources

from outbreak import bots, harness, survey
from outbreak.config import ConfigError, load_config
from outbreak.engine import Phase, new_game, step
from outbreak.replay import (
    ConfigMismatch,
    DigestDivergence,
    MapDigestMismatch,
    ReplayError,
    load_replay,
    replay_verify,
    save_replay,
)
from outbreak.rng import bot_stream
from outbreak.snapshot import to_snapshot
from outbreak.survey import SurveyError
from outbreak.worldmap import MapError, load_map

_VERIFY_FAILURES = (MapDigestMismatch, ConfigMismatch, DigestDivergence)
_INPUT_ERRORS = (MapError, ConfigError, ReplayError, SurveyError, OSError, ValueError)


def _parse_seeds(spec: str) -> list[int]:
    """'A..B' inclusive range, or a comma-separated list, or one integer."""
    if ".." in spec:
        lo_s, _, hi_s = spec.partition("..")
        lo, hi = int(lo_s), int(hi_s)
        if hi < lo:
            raise ValueError(f"empty seed range {spec!r}")
        return list(range(lo, hi + 1))
    return [int(part) for part in spec.split(",")]


def _add_sim_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--map", required=True, help="map file")
    p.add_argument("--config", required=True, help="config file")


def default_catalog_path() -> str:
    return str(resources.files("outbreak").joinpath("data/survey_items.csv"))


def bundled_map_path() -> str:
    return str(resources.files("outbreak").joinpath("data/city.map"))


def bundled_config_path() -> str:
    return str(resources.files("outbreak").joinpath("data/default.cfg"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="outbreak", description="Deterministic outbreak-survival simulation."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="play one game with a bot policy")
    _add_sim_args(p_run)
    p_run.add_argument("--seed", type=int, required=True)
    p_run.add_argument("--policy", required=True, choices=sorted(bots.POLICIES))
    p_run.add_argument("--max-ticks", type=int, default=10_000)
    p_run.add_argument("--out", help="write the replay here")

    p_verify = sub.add_parser("verify", help="re-simulate a replay and check digests")
    p_verify.add_argument("--replay", required=True)
    _add_sim_args(p_verify)

    p_batch = sub.add_parser("batch", help="per-seed stats as CSV")
    _add_sim_args(p_batch)
    p_batch.add_argument("--policy", required=True, choices=sorted(bots.POLICIES))
    p_batch.add_argument("--seeds", required=True, help="A..B or comma list")
    p_batch.add_argument("--max-ticks", type=int, default=10_000)
    p_batch.add_argument("--csv", required=True, help="output file, '-' for stdout")

    p_survey = sub.add_parser("score-survey", help="score a Likert response CSV")
    p_survey.add_argument("--csv", required=True, help="responses file")
    p_survey.add_argument("--multiplier", type=float, default=100.0)
    p_survey.add_argument(
        "--catalog", default=None, help="item catalog (default: bundled)"
    )
    p_survey.add_argument("--report-csv", default=None, help="also write CSV here")

    p_snaps = sub.add_parser(
        "snapshots", help="emit a JSON render-snapshot stream for UI fixtures"
    )
    _add_sim_args(p_snaps)
    p_snaps.add_argument("--seed", type=int, required=True)
    p_snaps.add_argument("--policy", required=True, choices=sorted(bots.POLICIES))
    p_snaps.add_argument("--ticks", type=int, required=True)
    p_snaps.add_argument("--out", help="output file, default stdout")

    p_serve = sub.add_parser("serve", help="HTTP session API and static frontend")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--static", default=None, help="static asset directory")

    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    world = load_map(args.map)
    cfg = load_config(args.config)
    policy = bots.get_policy(args.policy)
    rec, stats = harness.run_bot(world, cfg, args.seed, policy, args.max_ticks)
    print(" ".join(f"{k}={v}" for k, v in asdict(stats).items()))
    if args.out:
        save_replay(rec, args.out)
        print(f"replay written to {args.out}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    world = load_map(args.map)
    cfg = load_config(args.config)
    rec = load_replay(args.replay)
    try:
        report = replay_verify(rec, world, cfg)
    except _VERIFY_FAILURES as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    print(
        f"PASS ticks={report.ticks} phase={report.final_phase.name.lower()} "
        f"checkpoints={report.checkpoints_checked}"
    )
    return 0


def _cmd_batch(args: argparse.Namespace) -> int:
    world = load_map(args.map)
    cfg = load_config(args.config)
    policy = bots.get_policy(args.policy)
    seeds = _parse_seeds(args.seeds)
    text = harness.batch_stats(world, cfg, policy, seeds, args.max_ticks)
    if args.csv == "-":
        sys.stdout.write(text)
    else:
        with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"stats written to {args.csv}")
    return 0


def _cmd_score_survey(args: argparse.Namespace) -> int:
    catalog_path = args.catalog or default_catalog_path()
    catalog = survey.load_catalog(catalog_path)
    matrix = survey.load_responses(args.csv)
    report = survey.build_report(matrix, catalog, args.multiplier)
    sys.stdout.write(survey.report_table(report))
    if args.report_csv:
        with open(args.report_csv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(survey.report_csv(report))
    return 0


def _cmd_snapshots(args: argparse.Namespace) -> int:
    world = load_map(args.map)
    cfg = load_config(args.config)
    policy = bots.get_policy(args.policy)
    if args.ticks < 1:
        raise ValueError("--ticks must be >= 1")
    state = new_game(world, cfg, args.seed)
    rng = bot_stream(args.seed)
    snaps = [to_snapshot(state)]
    for _ in range(args.ticks):
        if state.phase != Phase.PLAYING:
            break
        state = step(state, policy(state, rng))
        snaps.append(to_snapshot(state))
    doc = {"schema": "outbreak.render-snapshot-stream/1", "snapshots": snaps}
    text = json.dumps(doc, separators=(",", ":"))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
        print(f"{len(snaps)} snapshots written to {args.out}")
    else:
        sys.stdout.write(text + "\n")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    try:
        import uvicorn

        from outbreak.server import create_app
    except ImportError:
        print(
            "the 'serve' command needs the server extra: pip install outbreak-sim[server]",
            file=sys.stderr,
        )
        return 2
    app = create_app(static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


_COMMANDS = {
    "run": _cmd_run,
    "verify": _cmd_verify,
    "batch": _cmd_batch,
    "score-survey": _cmd_score_survey,
    "snapshots": _cmd_snapshots,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _COMMANDS[args.command]
    try:
        return handler(args)
    except _VERIFY_FAILURES as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
