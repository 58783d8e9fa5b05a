"""Scripted play policies for headless runs.

A policy maps (state, bot rng) to one command per tick.  Bot randomness
comes from a stream domain-separated from the game's own (see
``outbreak.rng.bot_stream``), so two policies given the same seed see the
same game unfold.

Targeting is deterministic: candidates are ranked by breadth-first-search
distance with entity id (for pickups) or row-major tile order (for tiles)
as the tie-break, and unreachable targets are skipped.  With no reachable
target a policy stays put rather than wandering.
"""

from __future__ import annotations

from typing import Callable, Iterable

from outbreak import pathing
from outbreak.engine import Command, Entity, GameState
from outbreak.infection import is_protected
from outbreak.quota import quota_met
from outbreak.rng import SplitMix64
from outbreak.worldmap import EntityKind, TileKind, TilePos

Policy = Callable[[GameState, SplitMix64], Command]

_COMMAND_FOR_DELTA = {
    (0, -1): Command.UP,
    (0, 1): Command.DOWN,
    (-1, 0): Command.LEFT,
    (1, 0): Command.RIGHT,
}

_ALL_COMMANDS = (Command.UP, Command.DOWN, Command.LEFT, Command.RIGHT, Command.STAY)


def _command_toward(state: GameState, target: TilePos) -> Command:
    pos = state.player().pos
    nxt = pathing.next_step_toward(state.world, pos, target)
    if nxt is None:
        return Command.STAY
    return _COMMAND_FOR_DELTA[(nxt[0] - pos[0], nxt[1] - pos[1])]


def _nearest_entity(state: GameState, kinds: Iterable[EntityKind]) -> TilePos | None:
    """Position of the closest pickup of the given kinds, or None."""
    wanted = frozenset(kinds)
    pos = state.player().pos
    best: tuple[int, int] | None = None  # (distance, eid)
    best_pos: TilePos | None = None
    for eid in sorted(state.entities):
        ent: Entity = state.entities[eid]
        if ent.kind not in wanted:
            continue
        d = pathing.distance_to(state.world, pos, ent.pos)
        if d < 0:
            continue
        if best is None or (d, eid) < best:
            best = (d, eid)
            best_pos = ent.pos
    return best_pos


def _nearest_tile(state: GameState, kind: TileKind) -> TilePos | None:
    pos = state.player().pos
    best_d = -1
    best_pos: TilePos | None = None
    for tile in state.world.tiles_of_kind(kind):
        d = pathing.distance_to(state.world, pos, tile)
        if d < 0:
            continue
        if best_pos is None or d < best_d:
            best_d = d
            best_pos = tile
    return best_pos


def random_walk(state: GameState, rng: SplitMix64) -> Command:
    """Uniform over the five commands; blocked moves become stays in-engine."""
    return _ALL_COMMANDS[rng.below(len(_ALL_COMMANDS))]


def _needed_pickup_kinds(state: GameState) -> list[EntityKind]:
    kinds = []
    if state.quota.groceries_collected < state.quota.groceries_required:
        kinds.append(EntityKind.GROCERY_PICKUP)
    if state.quota.medicines_collected < state.quota.medicines_required:
        kinds.append(EntityKind.MEDICINE_PICKUP)
    return kinds


def greedy_collector(state: GameState, rng: SplitMix64) -> Command:
    """Chase the nearest pickup still counting toward quota, then head home."""
    if quota_met(state.quota):
        home = _nearest_tile(state, TileKind.HOME)
        return _command_toward(state, home) if home is not None else Command.STAY
    needed = _needed_pickup_kinds(state)
    target = _nearest_entity(state, needed)
    if target is None:
        return Command.STAY
    return _command_toward(state, target)


def safety_first(state: GameState, rng: SplitMix64) -> Command:
    """Greedy collection, but cure and re-arm protection before anything else."""
    if state.healths[state.player_id] is not None:
        clinic = _nearest_tile(state, TileKind.CLINIC)
        if clinic is not None:
            return _command_toward(state, clinic)
    elif not is_protected(state.effects, state.tick):
        shield = _nearest_entity(
            state, (EntityKind.MASK_PICKUP, EntityKind.SANITIZER_PICKUP)
        )
        if shield is not None:
            return _command_toward(state, shield)
    return greedy_collector(state, rng)


POLICIES: dict[str, Policy] = {
    "random-walk": random_walk,
    "greedy-collector": greedy_collector,
    "safety-first": safety_first,
}


def get_policy(name: str) -> Policy:
    try:
        return POLICIES[name]
    except KeyError:
        known = ", ".join(sorted(POLICIES))
        raise ValueError(f"unknown policy {name!r} (known: {known})") from None
