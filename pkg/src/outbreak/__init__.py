"""Deterministic outbreak-survival simulation with a headless harness.

Public surface: map parsing (`worldmap`), flat config files (`config`),
the fixed-timestep engine (`engine`), timed protection effects
(`effects`), the transmission ledger (`infection`), collection quota and
score (`quota`), bot policies (`bots`), replay records (`replay`), batch
stats (`harness`), questionnaire scoring (`survey`), and the render
snapshot JSON projection (`snapshot`).
"""

from outbreak.config import GameConfig, load_config, parse_config, serialize_config
from outbreak.engine import (
    Command,
    GameState,
    Phase,
    hash_state,
    map_digest,
    new_game,
    step,
)
from outbreak.worldmap import WorldMap, load_map, parse_map, serialize_map

__version__ = "0.1.0"

__all__ = [
    "Command",
    "GameConfig",
    "GameState",
    "Phase",
    "WorldMap",
    "__version__",
    "hash_state",
    "load_config",
    "load_map",
    "map_digest",
    "new_game",
    "parse_config",
    "parse_map",
    "serialize_config",
    "serialize_map",
    "step",
]
