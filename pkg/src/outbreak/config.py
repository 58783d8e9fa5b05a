"""Game rule constants and the flat ``key=value`` config file.

The file format accepts exactly the thirteen keys below, one per line;
blank lines and ``#`` comments are ignored.  Unknown or duplicate keys are
errors.  Missing keys take the documented defaults.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

CONTACT_SAME_TILE = "same_tile"
CONTACT_ADJACENT = "same_or_adjacent4"

_CONTACT_RULES = (CONTACT_SAME_TILE, CONTACT_ADJACENT)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class GameConfig:
    mask_duration: int = 600  # ticks of protection per mask pickup
    sanitizer_duration: int = 400
    lifeline_max: int = 100
    infection_decay: int = 1  # lifeline points lost per tick while infected
    shield_bonus: int = 25  # score reward for using a mask/sanitizer
    points_per_grocery: int = 10
    points_per_medicine: int = 10
    quota_groceries: int = 5
    quota_medicines: int = 3
    contact_rule: str = CONTACT_ADJACENT
    transmission_prob: float = 1.0
    npc_move_period: int = 1  # NPCs move on ticks divisible by this
    strict_quota: bool = False

    def __post_init__(self) -> None:
        for name in (
            "mask_duration",
            "sanitizer_duration",
            "lifeline_max",
            "infection_decay",
            "shield_bonus",
            "npc_move_period",
        ):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be >= 1")
        for name in ("points_per_grocery", "points_per_medicine", "quota_groceries", "quota_medicines"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be >= 0")
        if self.contact_rule not in _CONTACT_RULES:
            raise ConfigError(f"contact_rule must be one of {_CONTACT_RULES}")
        if not 0.0 <= self.transmission_prob <= 1.0:
            raise ConfigError("transmission_prob must be in [0, 1]")


CONFIG_KEYS = tuple(f.name for f in fields(GameConfig))

_PARSERS = {int: int, float: float}


def _parse_value(name: str, typ: type, raw: str):
    if typ is bool:
        if raw == "true":
            return True
        if raw == "false":
            return False
        raise ConfigError(f"{name} must be 'true' or 'false', got {raw!r}")
    if typ is str:
        return raw
    try:
        return _PARSERS[typ](raw)
    except ValueError as exc:
        raise ConfigError(f"bad value for {name}: {raw!r}") from exc


def parse_config(text: str) -> GameConfig:
    types = {f.name: f.type for f in fields(GameConfig)}
    # dataclass field types arrive as strings under `from __future__ import annotations`
    resolved = {"int": int, "float": float, "str": str, "bool": bool}
    values: dict[str, object] = {}
    for lineno, raw in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("=", 1)
        if len(parts) != 2:
            raise ConfigError(f"bad config line {lineno}: {raw!r}")
        key = parts[0].strip()
        val = parts[1].strip()
        if key not in CONFIG_KEYS:
            raise ConfigError(f"unknown config key {key!r} (line {lineno})")
        if key in values:
            raise ConfigError(f"duplicate config key {key!r} (line {lineno})")
        typ = types[key]
        values[key] = _parse_value(key, resolved[typ] if isinstance(typ, str) else typ, val)
    return GameConfig(**values)  # type: ignore[arg-type]


def serialize_config(cfg: GameConfig) -> str:
    """Canonical serialization: all keys, declaration order."""
    lines = []
    for key in CONFIG_KEYS:
        val = getattr(cfg, key)
        if isinstance(val, bool):
            lines.append(f"{key}={'true' if val else 'false'}")
        elif isinstance(val, float):
            lines.append(f"{key}={val!r}")
        else:
            lines.append(f"{key}={val}")
    return "\n".join(lines) + "\n"


def load_config(path: str) -> GameConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())
