import pathlib

import pytest

from outbreak.cli import bundled_config_path, bundled_map_path
from outbreak.config import GameConfig, load_config
from outbreak.worldmap import STANDARD_LEGEND, WorldMap, load_map, parse_map

DATA_DIR = pathlib.Path(__file__).parent / "data"

_LEGEND_BLOCK = "\n".join(f"{glyph} = {name}" for glyph, name in STANDARD_LEGEND.items())


def make_map(rows: list[str], behaviors: list[str] | None = None) -> WorldMap:
    """Assemble a map from grid rows using the standard legend."""
    text = "OUTBREAK-MAP v1\nlegend:\n" + _LEGEND_BLOCK + "\ngrid:\n"
    text += "\n".join(rows) + "\n"
    if behaviors:
        text += "behaviors:\n" + "\n".join(behaviors) + "\n"
    return parse_map(text)


def map_text(rows: list[str], behaviors: list[str] | None = None) -> str:
    text = "OUTBREAK-MAP v1\nlegend:\n" + _LEGEND_BLOCK + "\ngrid:\n"
    text += "\n".join(rows) + "\n"
    if behaviors:
        text += "behaviors:\n" + "\n".join(behaviors) + "\n"
    return text


@pytest.fixture(scope="session")
def city_map() -> WorldMap:
    return load_map(bundled_map_path())


@pytest.fixture(scope="session")
def default_cfg() -> GameConfig:
    return load_config(bundled_config_path())
