"""Headless bot runs and batch statistics.

``run_bot`` plays one game to a terminal phase (or a tick cap) and returns
the trace as a Replay plus a RunStats row.  ``batch_stats`` runs a seed
list and renders per-seed rows with mean/sd footer rows as CSV text.  All
output is byte-deterministic for a given (map, config, policy, seeds).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from outbreak.bots import Policy
from outbreak.config import GameConfig
from outbreak.engine import Phase, hash_state, map_digest, new_game, step
from outbreak.infection import ledger_counts
from outbreak.replay import DEFAULT_CHECKPOINT_EVERY, Replay
from outbreak.rng import bot_stream
from outbreak.worldmap import WorldMap

_OUTCOMES = {Phase.WON: "won", Phase.LOST: "lost", Phase.PLAYING: "truncated"}


@dataclass(frozen=True)
class RunStats:
    outcome: str  # "won" | "lost" | "truncated"
    ticks: int
    score: int
    direct: int
    indirect: int
    times_infected: int
    doctor_visits: int


def run_bot(
    world: WorldMap,
    cfg: GameConfig,
    seed: int,
    policy: Policy,
    max_ticks: int,
    checkpoint_every: int = DEFAULT_CHECKPOINT_EVERY,
) -> tuple[Replay, RunStats]:
    """Play until Won/Lost or max_ticks. Requires max_ticks >= 1."""
    if max_ticks < 1:
        raise ValueError("max_ticks must be >= 1")
    state = new_game(world, cfg, seed)
    rng = bot_stream(seed)
    commands: list[str] = []
    checkpoints: list[tuple[int, int]] = []
    times_infected = 0
    doctor_visits = 0
    while state.phase == Phase.PLAYING and state.tick < max_ticks:
        before_events = len(state.ledger)
        was_infected = state.healths[state.player_id] is not None
        command = policy(state, rng)
        state = step(state, command)
        commands.append(command.value)
        if checkpoint_every > 0 and state.tick % checkpoint_every == 0:
            checkpoints.append((state.tick, hash_state(state)))
        for ev in state.ledger[before_events:]:
            if ev.target == state.player_id:
                times_infected += 1
        if was_infected and state.healths[state.player_id] is None:
            doctor_visits += 1

    direct, indirect = ledger_counts(state.ledger, state.player_id)
    replay = Replay(
        map_digest=map_digest(world),
        seed=seed,
        config=cfg,
        checkpoint_every=checkpoint_every,
        commands="".join(commands),
        checkpoints=tuple(checkpoints),
        final_tick=state.tick,
        final_phase=state.phase,
        final_digest=hash_state(state),
    )
    stats = RunStats(
        outcome=_OUTCOMES[state.phase],
        ticks=state.tick,
        score=state.score,
        direct=direct,
        indirect=indirect,
        times_infected=times_infected,
        doctor_visits=doctor_visits,
    )
    return replay, stats


_NUMERIC_FIELDS = ("ticks", "score", "direct", "indirect", "times_infected", "doctor_visits")


def _fmt(value: float) -> str:
    return f"{value:.4f}"


def batch_stats(
    world: WorldMap,
    cfg: GameConfig,
    policy: Policy,
    seeds: list[int],
    max_ticks: int = 10_000,
) -> str:
    """CSV: one row per seed, then mean and sd footer rows (population sd).

    The mean row's outcome column carries the win rate.
    """
    if not seeds:
        raise ValueError("seeds must be non-empty")
    rows = []
    for seed in seeds:
        _, stats = run_bot(world, cfg, seed, policy, max_ticks)
        rows.append(stats)

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("seed",) + ("outcome",) + _NUMERIC_FIELDS)
    for seed, stats in zip(seeds, rows):
        writer.writerow(
            [seed, stats.outcome] + [getattr(stats, f) for f in _NUMERIC_FIELDS]
        )
    n = len(rows)
    means = {f: sum(getattr(s, f) for s in rows) / n for f in _NUMERIC_FIELDS}
    sds = {
        f: math.sqrt(sum((getattr(s, f) - means[f]) ** 2 for s in rows) / n)
        for f in _NUMERIC_FIELDS
    }
    win_rate = sum(1 for s in rows if s.outcome == "won") / n
    writer.writerow(["mean", _fmt(win_rate)] + [_fmt(means[f]) for f in _NUMERIC_FIELDS])
    writer.writerow(["sd", ""] + [_fmt(sds[f]) for f in _NUMERIC_FIELDS])
    return buf.getvalue()
