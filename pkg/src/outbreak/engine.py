"""Deterministic fixed-timestep game loop.

``step`` applies exactly one input command and advances one tick through a
fixed stage order:

1. player move (walls and map edges block; blocked means stay),
2. NPC moves (on ticks divisible by ``npc_move_period``),
3. pickups on the player's tile (masks/sanitizers arm effects and grant the
   shield bonus; groceries/medicines update quota and score; the pickup
   entity is removed),
4. contact resolution; new transmission events append to the ledger and flip
   their targets to infected,
5. doctor: standing on a Clinic tile cures and refills the lifeline,
6. lifeline decay and effect expiry,
7. phase check: finish-line first (Won), then empty lifeline (Lost),
8. tick increment.

A pickup therefore protects against a contact in the same tick (stage 3
before stage 4), and a doctor visit pre-empts that tick's decay (stage 5
before stage 6).  Won and Lost are terminal: stepping a terminal state
returns it unchanged.

All randomness comes from the SplitMix64 stream stored in the state; with
``transmission_prob == 1`` (the default) only random-walk NPCs consume
draws, one per NPC per movement tick, in ascending entity-id order.

``hash_state`` digests the dynamic state into 64 bits: fields are flattened
to a uint64 word stream in a fixed order (entities ascending by id) and
folded with the position-salted mix in ``outbreak.kernels``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum, IntEnum

import numpy as np

from outbreak import pathing
from outbreak.config import GameConfig
from outbreak.effects import (
    EffectKind,
    Effects,
    Health,
    Lifeline,
    acquire_effect,
    decay_lifeline,
    expire_effects,
    visit_doctor,
)
from outbreak.infection import Ledger, resolve_contacts
from outbreak.kernels import digest_words
from outbreak.quota import Quota, assign_quota, can_finish, record_pickup
from outbreak.rng import MASK64, SplitMix64
from outbreak.worldmap import (
    EntityKind,
    LIVING_KINDS,
    PICKUP_KINDS,
    TileKind,
    TilePos,
    WorldMap,
    is_walkable,
)

_STATE_DIGEST_VERSION = 0x4F55544252454B31  # b"OUTBREK1"


class Command(Enum):
    UP = "U"
    DOWN = "D"
    LEFT = "L"
    RIGHT = "R"
    STAY = "S"

    @classmethod
    def from_char(cls, ch: str) -> "Command":
        try:
            return cls(ch)
        except ValueError:
            raise ValueError(f"unknown command character {ch!r}") from None


_DELTAS = {
    Command.UP: (0, -1),
    Command.DOWN: (0, 1),
    Command.LEFT: (-1, 0),
    Command.RIGHT: (1, 0),
    Command.STAY: (0, 0),
}


class Phase(IntEnum):
    PLAYING = 0
    WON = 1
    LOST = 2


@dataclass(frozen=True)
class Entity:
    kind: EntityKind
    pos: TilePos
    waypoints: tuple[TilePos, ...] | None = None
    wp_index: int = 0


@dataclass(frozen=True)
class GameState:
    tick: int
    rng_state: int
    world: WorldMap
    config: GameConfig
    player_id: int
    entities: dict[int, Entity]
    healths: dict[int, Health]  # living entities only
    effects: Effects
    lifeline: Lifeline
    ledger: Ledger
    quota: Quota
    score: int
    phase: Phase

    def player(self) -> Entity:
        return self.entities[self.player_id]


def new_game(world: WorldMap, cfg: GameConfig, seed: int) -> GameState:
    """Fresh state at tick 0; identical (world, cfg, seed) gives identical states."""
    entities: dict[int, Entity] = {}
    healths: dict[int, Health] = {}
    player_id = -1
    for eid, spawn in enumerate(world.spawns):
        entities[eid] = Entity(spawn.kind, spawn.pos, spawn.waypoints)
        if spawn.kind in LIVING_KINDS:
            infected = spawn.infected or spawn.kind == EntityKind.MONSTER
            healths[eid] = 0 if infected else None
        if spawn.kind == EntityKind.PLAYER:
            player_id = eid
    quota = assign_quota(world, cfg)
    return GameState(
        tick=0,
        rng_state=seed & MASK64,
        world=world,
        config=cfg,
        player_id=player_id,
        entities=entities,
        healths=healths,
        effects=(),
        lifeline=Lifeline(cfg.lifeline_max, cfg.lifeline_max),
        ledger=(),
        quota=quota,
        score=0,
        phase=Phase.PLAYING,
    )


def npc_policy(entity: Entity, world: WorldMap, rng: SplitMix64) -> tuple[TilePos, int]:
    """Next position and waypoint index for one NPC.

    Random walkers pick uniformly among staying put and their walkable
    4-neighbors (one draw per call).  Patrollers step along the shortest
    path to their current waypoint, advancing to the next waypoint of the
    loop on arrival; an unreachable waypoint means standing still.
    """
    if entity.waypoints is None:
        candidates = [entity.pos]
        for dx, dy in pathing.STEP_ORDER:
            q = TilePos(entity.pos[0] + dx, entity.pos[1] + dy)
            if world.in_bounds(q) and is_walkable(world, q):
                candidates.append(q)
        return candidates[rng.below(len(candidates))], entity.wp_index

    wp_index = entity.wp_index
    if entity.pos == entity.waypoints[wp_index]:
        wp_index = (wp_index + 1) % len(entity.waypoints)
    step_to = pathing.next_step_toward(world, entity.pos, entity.waypoints[wp_index])
    return (step_to if step_to is not None else entity.pos), wp_index


def step(state: GameState, command: Command) -> GameState:
    """Advance one tick. Total: never raises for in-contract states."""
    if state.phase != Phase.PLAYING:
        return state

    now = state.tick
    cfg = state.config
    world = state.world
    rng = SplitMix64(state.rng_state)
    entities = dict(state.entities)
    healths = dict(state.healths)
    effects = state.effects
    lifeline = state.lifeline
    ledger = list(state.ledger)
    quota = state.quota
    score = state.score
    pid = state.player_id

    # 1. player move
    dx, dy = _DELTAS[command]
    if dx or dy:
        dest = TilePos(entities[pid].pos[0] + dx, entities[pid].pos[1] + dy)
        if world.in_bounds(dest) and is_walkable(world, dest):
            entities[pid] = replace(entities[pid], pos=dest)

    # 2. NPC moves
    if now % cfg.npc_move_period == 0:
        for eid in sorted(entities):
            ent = entities[eid]
            if ent.kind not in (EntityKind.CIVILIAN, EntityKind.MONSTER):
                continue
            pos, wp_index = npc_policy(ent, world, rng)
            if pos != ent.pos or wp_index != ent.wp_index:
                entities[eid] = replace(ent, pos=pos, wp_index=wp_index)

    # 3. pickups under the player
    player_pos = entities[pid].pos
    for eid in sorted(entities):
        ent = entities[eid]
        if ent.kind not in PICKUP_KINDS or ent.pos != player_pos:
            continue
        if ent.kind in (EntityKind.MASK_PICKUP, EntityKind.SANITIZER_PICKUP):
            kind = EffectKind.MASK if ent.kind == EntityKind.MASK_PICKUP else EffectKind.SANITIZER
            effects, shield = acquire_effect(effects, kind, now, cfg)
            score += shield
        else:
            quota, score = record_pickup(quota, score, ent.kind, cfg)
        del entities[eid]

    # 4. contacts
    positions = {eid: entities[eid].pos for eid in healths}
    candidates = resolve_contacts(positions, healths, {pid: effects}, now, cfg.contact_rule)
    for ev in candidates:
        if healths[ev.target] is not None:
            continue  # already flipped by an earlier event this tick
        if cfg.transmission_prob < 1.0 and not rng.unit_float() < cfg.transmission_prob:
            continue
        ledger.append(ev)
        healths[ev.target] = now

    # 5. doctor
    if world.tile_at(entities[pid].pos) == TileKind.CLINIC:
        healths[pid], lifeline = visit_doctor(healths[pid], lifeline, cfg, at_clinic=True)

    # 6. decay and expiry
    lifeline = decay_lifeline(lifeline, healths[pid], cfg)
    effects = expire_effects(effects, now)

    # 7. phase
    phase = Phase.PLAYING
    if can_finish(quota, entities[pid].pos, world):
        phase = Phase.WON
    elif lifeline.current == 0:
        phase = Phase.LOST

    # 8. tick
    return GameState(
        tick=now + 1,
        rng_state=rng.state,
        world=world,
        config=cfg,
        player_id=pid,
        entities=entities,
        healths=healths,
        effects=effects,
        lifeline=lifeline,
        ledger=tuple(ledger),
        quota=quota,
        score=score,
        phase=phase,
    )


_MAP_DIGEST_ATTR = "_map_digest"


def map_digest(world: WorldMap) -> int:
    """64-bit digest of the logical map (tiles, spawns, behaviors)."""
    cached = getattr(world, _MAP_DIGEST_ATTR, None)
    if cached is not None:
        return cached
    words: list[int] = [world.width, world.height]
    words.extend(int(t) for t in world.tiles)
    words.append(len(world.spawns))
    for s in world.spawns:
        wps = s.waypoints or ()
        words.extend((int(s.kind), s.pos[0], s.pos[1], int(s.infected)))
        words.append(0 if s.waypoints is None else 1 + len(wps))
        for wp in wps:
            words.extend((wp[0], wp[1]))
    digest = digest_words(np.array(words, dtype=np.uint64))
    object.__setattr__(world, _MAP_DIGEST_ATTR, digest)
    return digest


def hash_state(state: GameState) -> int:
    """Canonical 64-bit digest of the dynamic game state."""
    words: list[int] = [
        _STATE_DIGEST_VERSION,
        map_digest(state.world),
        state.tick,
        state.rng_state,
        len(state.entities),
    ]
    for eid in sorted(state.entities):
        ent = state.entities[eid]
        if eid not in state.healths:
            health_word = 0  # pickups carry no health
        else:
            health = state.healths[eid]
            health_word = 1 if health is None else 2 + health
        words.extend((eid, int(ent.kind), ent.pos[0], ent.pos[1], ent.wp_index, health_word))
    words.append(len(state.effects))
    for eff in state.effects:
        words.extend((int(eff.kind), eff.expires_at_tick))
    words.extend((state.lifeline.current, state.lifeline.maximum))
    words.append(len(state.ledger))
    for ev in state.ledger:
        words.extend((ev.tick, ev.source, ev.target))
    words.extend(
        (
            state.quota.groceries_required,
            state.quota.medicines_required,
            state.quota.groceries_collected,
            state.quota.medicines_collected,
            state.score,
            int(state.phase),
        )
    )
    return digest_words(np.array(words, dtype=np.uint64))
