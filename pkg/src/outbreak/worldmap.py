"""City map model and the ``OUTBREAK-MAP v1`` text format.

A map file is UTF-8 text with four sections::

    OUTBREAK-MAP v1
    legend:
    <glyph> = <KindName>        one line per glyph used in the grid
    grid:
    <equal-length rows of glyphs>
    behaviors:                  optional
    <x>,<y> loop <x1>,<y1> <x2>,<y2> ...
    <x>,<y> walk

Structure glyphs set the tile kind; entity glyphs spawn an entity and imply
a Floor tile beneath it.  The ``behaviors:`` section tags NPC spawns (by
their grid position) with either a waypoint patrol loop or an explicit
random walk.  Untagged civilians random-walk; untagged monsters hold a
stationary one-waypoint loop.

Maps are immutable after parsing and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Mapping, NamedTuple

import numpy as np


class TileKind(IntEnum):
    FLOOR = 0
    WALL = 1
    GROCERY_SHOP = 2
    PHARMACY = 3
    CLINIC = 4
    HOME = 5


class EntityKind(IntEnum):
    PLAYER = 0
    CIVILIAN = 1
    MONSTER = 2
    MASK_PICKUP = 3
    SANITIZER_PICKUP = 4
    GROCERY_PICKUP = 5
    MEDICINE_PICKUP = 6


LIVING_KINDS = frozenset({EntityKind.PLAYER, EntityKind.CIVILIAN, EntityKind.MONSTER})
PICKUP_KINDS = frozenset(
    {
        EntityKind.MASK_PICKUP,
        EntityKind.SANITIZER_PICKUP,
        EntityKind.GROCERY_PICKUP,
        EntityKind.MEDICINE_PICKUP,
    }
)


class TilePos(NamedTuple):
    x: int
    y: int


class MapError(ValueError):
    """Base class for map file problems."""


class UnknownGlyph(MapError):
    def __init__(self, glyph: str, line: int, column: int) -> None:
        super().__init__(f"unknown glyph {glyph!r} at line {line}, column {column}")
        self.glyph = glyph
        self.line = line
        self.column = column


class NoPlayerSpawn(MapError):
    pass


class MultiplePlayerSpawns(MapError):
    pass


class RaggedRows(MapError):
    pass


class MissingClinicOrHome(MapError):
    pass


class OutOfBounds(MapError):
    pass


@dataclass(frozen=True)
class Spawn:
    kind: EntityKind
    pos: TilePos
    infected: bool = False
    # None = random walk (civilians only); tuple = patrol loop waypoints.
    waypoints: tuple[TilePos, ...] | None = None


@dataclass(frozen=True, eq=False)
class WorldMap:
    width: int
    height: int
    tiles: tuple[TileKind, ...]  # row-major, length width*height
    spawns: tuple[Spawn, ...]

    # Caches filled lazily; excluded from equality/repr.
    _walkable: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WorldMap):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and self.tiles == other.tiles
            and self.spawns == other.spawns
        )

    def __hash__(self) -> int:
        return hash((self.width, self.height, self.tiles, self.spawns))

    def in_bounds(self, p: TilePos) -> bool:
        return 0 <= p[0] < self.width and 0 <= p[1] < self.height

    def tile_at(self, p: TilePos) -> TileKind:
        if not self.in_bounds(p):
            raise OutOfBounds(f"{tuple(p)} outside {self.width}x{self.height} map")
        return self.tiles[p[1] * self.width + p[0]]

    def walkable_grid(self) -> np.ndarray:
        """(height, width) bool array, True where the tile is not a Wall."""
        if self._walkable is None:
            arr = np.array(
                [k != TileKind.WALL for k in self.tiles], dtype=bool
            ).reshape(self.height, self.width)
            arr.setflags(write=False)
            object.__setattr__(self, "_walkable", arr)
        return self._walkable

    def tiles_of_kind(self, kind: TileKind) -> tuple[TilePos, ...]:
        return tuple(
            TilePos(i % self.width, i // self.width)
            for i, k in enumerate(self.tiles)
            if k == kind
        )

    def player_spawn(self) -> Spawn:
        return next(s for s in self.spawns if s.kind == EntityKind.PLAYER)

    def count_spawns(self, kind: EntityKind) -> int:
        return sum(1 for s in self.spawns if s.kind == kind)


def is_walkable(world: WorldMap, p: TilePos) -> bool:
    """True iff the tile at p is not a Wall; OutOfBounds outside the grid."""
    return world.tile_at(p) != TileKind.WALL


def entities_at(positions: Mapping[int, TilePos], p: TilePos) -> list[int]:
    """Ids of all entities located exactly at p, ascending."""
    px, py = p
    return sorted(eid for eid, q in positions.items() if q[0] == px and q[1] == py)


# Glyph vocabulary of the standard legend.  A map file must declare every
# glyph it uses; names are fixed, glyph characters are per-file.
_STRUCTURE_KINDS: dict[str, TileKind] = {
    "Wall": TileKind.WALL,
    "Floor": TileKind.FLOOR,
    "GroceryShop": TileKind.GROCERY_SHOP,
    "Pharmacy": TileKind.PHARMACY,
    "Clinic": TileKind.CLINIC,
    "Home": TileKind.HOME,
}
_ENTITY_KINDS: dict[str, tuple[EntityKind, bool]] = {
    "Player": (EntityKind.PLAYER, False),
    "Civilian": (EntityKind.CIVILIAN, False),
    "InfectedCivilian": (EntityKind.CIVILIAN, True),
    "Monster": (EntityKind.MONSTER, False),
    "MaskPickup": (EntityKind.MASK_PICKUP, False),
    "SanitizerPickup": (EntityKind.SANITIZER_PICKUP, False),
    "GroceryPickup": (EntityKind.GROCERY_PICKUP, False),
    "MedicinePickup": (EntityKind.MEDICINE_PICKUP, False),
}

STANDARD_LEGEND: dict[str, str] = {
    "#": "Wall",
    ".": "Floor",
    "P": "Player",
    "c": "Civilian",
    "i": "InfectedCivilian",
    "m": "Monster",
    "M": "MaskPickup",
    "S": "SanitizerPickup",
    "g": "GroceryPickup",
    "d": "MedicinePickup",
    "C": "Clinic",
    "H": "Home",
    "G": "GroceryShop",
    "R": "Pharmacy",
}

_HEADER = "OUTBREAK-MAP v1"


def _parse_pos(token: str, where: str) -> TilePos:
    try:
        xs, ys = token.split(",")
        return TilePos(int(xs), int(ys))
    except ValueError as exc:
        raise MapError(f"bad coordinate {token!r} in {where}") from exc


def parse_map(text: str) -> WorldMap:
    """Parse and validate a map file. Pure and deterministic."""
    lines = text.replace("\r\n", "\n").split("\n")
    if not lines or lines[0].strip() != _HEADER:
        raise MapError(f"first line must be {_HEADER!r}")

    # Section split.
    idx = 1
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx >= len(lines) or lines[idx].strip() != "legend:":
        raise MapError("missing 'legend:' section")
    idx += 1

    legend: dict[str, str] = {}
    while idx < len(lines):
        raw = lines[idx].strip()
        if raw == "grid:":
            break
        if raw:
            parts = raw.split("=", 1)
            if len(parts) != 2:
                raise MapError(f"bad legend line {idx + 1}: {lines[idx]!r}")
            glyph = parts[0].strip()
            name = parts[1].strip()
            if len(glyph) != 1:
                raise MapError(f"legend glyph must be one character, got {glyph!r}")
            if glyph in legend:
                raise MapError(f"duplicate legend glyph {glyph!r}")
            if name not in _STRUCTURE_KINDS and name not in _ENTITY_KINDS:
                raise MapError(f"unknown legend kind {name!r}")
            legend[glyph] = name
        idx += 1
    else:
        raise MapError("missing 'grid:' section")
    idx += 1

    grid_rows: list[tuple[int, str]] = []  # (file line number, row text)
    while idx < len(lines):
        raw = lines[idx]
        if raw.strip() == "behaviors:":
            break
        if raw.strip():
            grid_rows.append((idx + 1, raw.rstrip("\n")))
        elif grid_rows:
            # Blank line after rows ends the grid unless behaviors follow.
            nxt = idx + 1
            while nxt < len(lines) and not lines[nxt].strip():
                nxt += 1
            if nxt < len(lines) and lines[nxt].strip() == "behaviors:":
                idx = nxt
                break
            if nxt < len(lines):
                raise MapError(f"unexpected content after grid at line {nxt + 1}")
            idx = nxt
            break
        idx += 1
    behavior_lines: list[tuple[int, str]] = []
    if idx < len(lines) and lines[idx].strip() == "behaviors:":
        for j in range(idx + 1, len(lines)):
            if lines[j].strip():
                behavior_lines.append((j + 1, lines[j].strip()))

    if not grid_rows:
        raise MapError("empty grid")
    width = len(grid_rows[0][1])
    height = len(grid_rows)
    if any(len(row) != width for _, row in grid_rows):
        raise RaggedRows("grid rows have unequal lengths")

    tiles: list[TileKind] = []
    spawn_cells: dict[TilePos, tuple[EntityKind, bool]] = {}
    for y, (lineno, row) in enumerate(grid_rows):
        for x, glyph in enumerate(row):
            name = legend.get(glyph)
            if name is None:
                raise UnknownGlyph(glyph, lineno, x + 1)
            if name in _STRUCTURE_KINDS:
                tiles.append(_STRUCTURE_KINDS[name])
            else:
                kind, infected = _ENTITY_KINDS[name]
                tiles.append(TileKind.FLOOR)
                spawn_cells[TilePos(x, y)] = (kind, infected)

    behaviors: dict[TilePos, tuple[TilePos, ...] | None] = {}
    for lineno, raw in behavior_lines:
        tokens = raw.split()
        if len(tokens) < 2:
            raise MapError(f"bad behavior line {lineno}: {raw!r}")
        pos = _parse_pos(tokens[0], f"behavior line {lineno}")
        if pos in behaviors:
            raise MapError(f"duplicate behavior for {tuple(pos)} (line {lineno})")
        entry = spawn_cells.get(pos)
        if entry is None or entry[0] not in (EntityKind.CIVILIAN, EntityKind.MONSTER):
            raise MapError(f"behavior line {lineno} does not match an NPC spawn")
        verb = tokens[1]
        if verb == "walk":
            if entry[0] == EntityKind.MONSTER:
                raise MapError(f"monsters patrol loops, not random walks (line {lineno})")
            if len(tokens) != 2:
                raise MapError(f"'walk' takes no arguments (line {lineno})")
            behaviors[pos] = None
        elif verb == "loop":
            if len(tokens) < 3:
                raise MapError(f"'loop' needs at least one waypoint (line {lineno})")
            waypoints = tuple(_parse_pos(t, f"behavior line {lineno}") for t in tokens[2:])
            behaviors[pos] = waypoints
        else:
            raise MapError(f"unknown behavior {verb!r} (line {lineno})")

    spawns: list[Spawn] = []
    for y in range(height):
        for x in range(width):
            pos = TilePos(x, y)
            entry = spawn_cells.get(pos)
            if entry is None:
                continue
            kind, infected = entry
            if kind == EntityKind.CIVILIAN:
                waypoints = behaviors.get(pos, None)
            elif kind == EntityKind.MONSTER:
                waypoints = behaviors.get(pos, (pos,))
            else:
                waypoints = None
            spawns.append(Spawn(kind, pos, infected, waypoints))

    world = WorldMap(width, height, tuple(tiles), tuple(spawns))
    _validate(world)
    return world


def _validate(world: WorldMap) -> None:
    players = world.count_spawns(EntityKind.PLAYER)
    if players == 0:
        raise NoPlayerSpawn("map has no player spawn")
    if players > 1:
        raise MultiplePlayerSpawns(f"map has {players} player spawns")
    if not any(k == TileKind.CLINIC for k in world.tiles) or not any(
        k == TileKind.HOME for k in world.tiles
    ):
        raise MissingClinicOrHome("map needs at least one Clinic and one Home tile")
    for s in world.spawns:
        if not is_walkable(world, s.pos):
            raise MapError(f"spawn {s.kind.name} at {tuple(s.pos)} is on a wall")
        for wp in s.waypoints or ():
            if not world.in_bounds(wp) or not is_walkable(world, wp):
                raise MapError(
                    f"waypoint {tuple(wp)} of spawn at {tuple(s.pos)} is not walkable"
                )


_GLYPH_FOR_KIND = {name: glyph for glyph, name in STANDARD_LEGEND.items()}
_STRUCTURE_GLYPHS = {kind: _GLYPH_FOR_KIND[name] for name, kind in _STRUCTURE_KINDS.items()}


def serialize_map(world: WorldMap) -> str:
    """Canonical text for a map; parse_map(serialize_map(m)) == m.

    Raises MapError for maps the format cannot express (a spawn on a
    non-Floor tile, or two spawns sharing a cell).
    """
    occupied: dict[TilePos, Spawn] = {}
    for s in world.spawns:
        if s.pos in occupied:
            raise MapError(f"two spawns share cell {tuple(s.pos)}")
        if world.tile_at(s.pos) != TileKind.FLOOR:
            raise MapError(f"spawn at {tuple(s.pos)} is not on a Floor tile")
        occupied[s.pos] = s

    out = [_HEADER, "legend:"]
    out.extend(f"{glyph} = {name}" for glyph, name in STANDARD_LEGEND.items())
    out.append("grid:")
    for y in range(world.height):
        row = []
        for x in range(world.width):
            pos = TilePos(x, y)
            s = occupied.get(pos)
            if s is None:
                row.append(_STRUCTURE_GLYPHS[world.tile_at(pos)])
            elif s.kind == EntityKind.CIVILIAN and s.infected:
                row.append(_GLYPH_FOR_KIND["InfectedCivilian"])
            else:
                name = {
                    EntityKind.PLAYER: "Player",
                    EntityKind.CIVILIAN: "Civilian",
                    EntityKind.MONSTER: "Monster",
                    EntityKind.MASK_PICKUP: "MaskPickup",
                    EntityKind.SANITIZER_PICKUP: "SanitizerPickup",
                    EntityKind.GROCERY_PICKUP: "GroceryPickup",
                    EntityKind.MEDICINE_PICKUP: "MedicinePickup",
                }[s.kind]
                row.append(_GLYPH_FOR_KIND[name])
        out.append("".join(row))

    behavior_rows = []
    for s in world.spawns:
        if s.kind == EntityKind.CIVILIAN and s.waypoints is not None:
            wps = " ".join(f"{p[0]},{p[1]}" for p in s.waypoints)
            behavior_rows.append(f"{s.pos[0]},{s.pos[1]} loop {wps}")
        elif s.kind == EntityKind.MONSTER and s.waypoints != (s.pos,):
            wps = " ".join(f"{p[0]},{p[1]}" for p in s.waypoints or ())
            behavior_rows.append(f"{s.pos[0]},{s.pos[1]} loop {wps}")
    if behavior_rows:
        out.append("behaviors:")
        out.extend(behavior_rows)
    return "\n".join(out) + "\n"


def load_map(path: str) -> WorldMap:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_map(fh.read())
