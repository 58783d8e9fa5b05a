"""Cached BFS distance fields and deterministic shortest-path stepping.

Fields are keyed by target tile and cached per WorldMap instance (maps are
immutable, so a field never goes stale).  Stepping descends the distance
gradient; ties break in the fixed neighbor order up, down, left, right.
"""

from __future__ import annotations

import numpy as np

from outbreak import kernels
from outbreak.worldmap import TilePos, WorldMap

_CACHE_ATTR = "_path_fields"

# Normative direction order for all tie-breaking.
STEP_ORDER: tuple[TilePos, ...] = (
    TilePos(0, -1),  # up
    TilePos(0, 1),  # down
    TilePos(-1, 0),  # left
    TilePos(1, 0),  # right
)


def distance_field(world: WorldMap, target: TilePos) -> np.ndarray:
    """BFS distances (int32, -1 unreachable) from every cell to ``target``."""
    cache: dict[TilePos, np.ndarray] | None = getattr(world, _CACHE_ATTR, None)
    if cache is None:
        cache = {}
        object.__setattr__(world, _CACHE_ATTR, cache)
    key = TilePos(*target)
    field = cache.get(key)
    if field is None:
        field = kernels.grid_distances(world.walkable_grid(), key.x, key.y)
        field.setflags(write=False)
        cache[key] = field
    return field


def distance_to(world: WorldMap, pos: TilePos, target: TilePos) -> int:
    """Steps from pos to target, or -1 when unreachable."""
    return int(distance_field(world, target)[pos[1], pos[0]])


def next_step_toward(world: WorldMap, pos: TilePos, target: TilePos) -> TilePos | None:
    """First step of a shortest path; None when already there or unreachable."""
    field = distance_field(world, target)
    here = field[pos[1], pos[0]]
    if here <= 0:
        return None
    for dx, dy in STEP_ORDER:
        nx, ny = pos[0] + dx, pos[1] + dy
        if 0 <= nx < world.width and 0 <= ny < world.height and field[ny, nx] == here - 1:
            return TilePos(nx, ny)
    return None
