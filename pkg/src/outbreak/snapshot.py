"""Render snapshots: a versioned JSON projection of the game state.

Schema id: ``outbreak.render-snapshot/1``.  A snapshot is a pure projection
of one GameState and carries everything a client needs to draw a frame:

- ``grid``: width, height, and tile rows as strings over the glyphs
  ``.`` Floor, ``#`` Wall, ``G`` GroceryShop, ``R`` Pharmacy, ``C`` Clinic,
  ``H`` Home,
- ``entities``: kind, position, infected flag, in stable id order,
- ``lifeline`` current/max,
- ``effects``: remaining ticks and configured duration per effect kind
  (remaining is 0 when inactive, at least 1 while the effect still protects),
- ``shield``: true while any protection effect is active,
- ``infected_count``: people infected by the player, directly or through
  onward spread,
- ``quota`` collected/required pairs, ``score``, ``tick``, ``phase``.

Durations ride along so a client can draw bars as remaining/duration
without loading the config file.
"""

from __future__ import annotations

import json
from typing import Any

from outbreak.effects import EffectKind
from outbreak.engine import GameState, Phase
from outbreak.infection import is_protected, ledger_counts
from outbreak.worldmap import EntityKind, TileKind

SCHEMA_ID = "outbreak.render-snapshot/1"

_TILE_GLYPHS = {
    TileKind.FLOOR: ".",
    TileKind.WALL: "#",
    TileKind.GROCERY_SHOP: "G",
    TileKind.PHARMACY: "R",
    TileKind.CLINIC: "C",
    TileKind.HOME: "H",
}

_ENTITY_NAMES = {
    EntityKind.PLAYER: "player",
    EntityKind.CIVILIAN: "civilian",
    EntityKind.MONSTER: "monster",
    EntityKind.MASK_PICKUP: "mask",
    EntityKind.SANITIZER_PICKUP: "sanitizer",
    EntityKind.GROCERY_PICKUP: "grocery",
    EntityKind.MEDICINE_PICKUP: "medicine",
}

_PHASE_NAMES = {Phase.PLAYING: "playing", Phase.WON: "won", Phase.LOST: "lost"}


def to_snapshot(state: GameState) -> dict[str, Any]:
    """Build the schema/1 document for one state. Pure; JSON-serializable."""
    world = state.world
    rows = [
        "".join(
            _TILE_GLYPHS[world.tiles[y * world.width + x]] for x in range(world.width)
        )
        for y in range(world.height)
    ]
    entities = []
    for eid in sorted(state.entities):
        ent = state.entities[eid]
        infected = state.healths.get(eid) is not None if eid in state.healths else False
        entities.append(
            {
                "kind": _ENTITY_NAMES[ent.kind],
                "x": ent.pos[0],
                "y": ent.pos[1],
                "infected": infected,
            }
        )
    remaining = {EffectKind.MASK: 0, EffectKind.SANITIZER: 0}
    for eff in state.effects:
        remaining[eff.kind] = max(0, eff.expires_at_tick - state.tick)
    direct, indirect = ledger_counts(state.ledger, state.player_id)
    cfg = state.config
    return {
        "schema": SCHEMA_ID,
        "tick": state.tick,
        "phase": _PHASE_NAMES[state.phase],
        "grid": {"width": world.width, "height": world.height, "tiles": rows},
        "entities": entities,
        "lifeline": {"current": state.lifeline.current, "max": state.lifeline.maximum},
        "effects": {
            "mask": {
                "remaining": remaining[EffectKind.MASK],
                "duration": cfg.mask_duration,
            },
            "sanitizer": {
                "remaining": remaining[EffectKind.SANITIZER],
                "duration": cfg.sanitizer_duration,
            },
        },
        "shield": is_protected(state.effects, state.tick),
        "infected_count": direct + indirect,
        "quota": {
            "groceries": {
                "collected": state.quota.groceries_collected,
                "required": state.quota.groceries_required,
            },
            "medicines": {
                "collected": state.quota.medicines_collected,
                "required": state.quota.medicines_required,
            },
        },
        "score": state.score,
    }


def snapshot_json(state: GameState) -> str:
    return json.dumps(to_snapshot(state), separators=(",", ":"))
