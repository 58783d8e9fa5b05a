"""Distance fields and greedy step selection over them."""

import numpy as np
import pytest

from outbreak.pathing import STEP_ORDER, distance_field, distance_to, next_step_toward
from outbreak.worldmap import TilePos

from conftest import make_map

_MAZE = [
    "#####",
    "#P..#",
    "#.#.#",
    "#.CH#",
    "#####",
]

_SPLIT = [
    "######",
    "#PC#.#",
    "###.H#",
    "######",
]


def test_distance_field_values():
    world = make_map(_MAZE)
    field = distance_field(world, TilePos(3, 3))
    assert field.dtype == np.int32
    assert field[3, 3] == 0
    assert field[1, 3] == 2
    assert field[1, 1] == 4
    assert field[0, 0] == -1  # wall


def test_unreachable_is_minus_one():
    world = make_map(_SPLIT)
    field = distance_field(world, TilePos(4, 2))
    assert field[1, 1] == -1  # player pocket is sealed off
    assert field[1, 4] == 1


def test_distance_to_matches_field():
    world = make_map(_MAZE)
    assert distance_to(world, TilePos(1, 1), TilePos(3, 3)) == 4
    assert distance_to(world, TilePos(3, 3), TilePos(3, 3)) == 0
    assert distance_to(world, TilePos(1, 1), TilePos(0, 0)) == -1


def test_next_step_follows_gradient():
    world = make_map(_MAZE)
    target = TilePos(3, 3)
    # from (1,1) both (1,2) and (2,1) descend; up/down/left/right order picks down
    assert next_step_toward(world, TilePos(1, 1), target) == TilePos(1, 2)
    assert next_step_toward(world, target, target) is None


def test_next_step_none_when_unreachable():
    world = make_map(_SPLIT)
    assert next_step_toward(world, TilePos(1, 1), TilePos(4, 2)) is None


def test_next_step_walks_all_the_way():
    world = make_map(_MAZE)
    target = TilePos(3, 3)
    pos = TilePos(1, 1)
    seen = [pos]
    for _ in range(10):
        nxt = next_step_toward(world, pos, target)
        if nxt is None:
            break
        assert abs(nxt.x - pos.x) + abs(nxt.y - pos.y) == 1
        pos = nxt
        seen.append(pos)
    assert pos == target
    assert len(seen) - 1 == 4  # shortest path length


def test_step_order_is_up_down_left_right():
    assert STEP_ORDER == (TilePos(0, -1), TilePos(0, 1), TilePos(-1, 0), TilePos(1, 0))


def test_field_is_cached_and_read_only():
    world = make_map(_MAZE)
    first = distance_field(world, TilePos(3, 3))
    second = distance_field(world, TilePos(3, 3))
    assert first is second
    with pytest.raises(ValueError):
        first[1, 1] = 99
