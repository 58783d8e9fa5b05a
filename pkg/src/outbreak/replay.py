"""Input-trace recording and the ``OUTBREAK-REPLAY v1`` text format.

Layout::

    OUTBREAK-REPLAY v1
    map_digest=<16 hex digits>
    seed=<int>
    config.<key>=<value>          all config keys, declaration order
    checkpoint_every=<int>        0 = no checkpoints
    body:
    <command characters, one per tick, wrapped at 64 columns>
    checkpoints:                  present iff any checkpoint was recorded
    <tick>=<16 hex digits>        state digest after that many ticks
    footer:
    final_tick=<int>
    final_phase=<playing|won|lost>
    final_digest=<16 hex digits>

The body length equals final_tick.  Periodic checkpoints let verification
pinpoint the first divergent tick instead of only failing at the footer.
``write_replay(read_replay(text)) == text``: the writer is canonical and
the reader rejects anything it would not itself produce, so replays are
stable fixtures under version control.
"""

from __future__ import annotations

from dataclasses import dataclass

from outbreak.config import CONFIG_KEYS, ConfigError, GameConfig, parse_config, serialize_config
from outbreak.engine import Command, GameState, Phase, hash_state, map_digest, new_game, step
from outbreak.worldmap import WorldMap

FORMAT_HEADER = "OUTBREAK-REPLAY v1"
_BODY_WRAP = 64
_PHASE_LABELS = {Phase.PLAYING: "playing", Phase.WON: "won", Phase.LOST: "lost"}
_PHASES_BY_LABEL = {v: k for k, v in _PHASE_LABELS.items()}

DEFAULT_CHECKPOINT_EVERY = 50


class ReplayError(ValueError):
    """Malformed replay file."""


class MapDigestMismatch(ReplayError):
    def __init__(self, expected: int, actual: int) -> None:
        super().__init__(
            f"replay was recorded on a different map "
            f"(header {expected:016x}, provided map {actual:016x})"
        )
        self.expected = expected
        self.actual = actual


class ConfigMismatch(ReplayError):
    def __init__(self, key: str, header_value: str, provided_value: str) -> None:
        super().__init__(
            f"config key {key!r} differs: replay has {header_value}, "
            f"provided config has {provided_value}"
        )
        self.key = key


class DigestDivergence(ReplayError):
    def __init__(self, tick: int, expected: int, actual: int) -> None:
        super().__init__(
            f"state digest diverges at tick {tick}: "
            f"recorded {expected:016x}, replayed {actual:016x}"
        )
        self.tick = tick
        self.expected = expected
        self.actual = actual


@dataclass(frozen=True)
class Replay:
    map_digest: int
    seed: int
    config: GameConfig
    checkpoint_every: int
    commands: str  # one character per tick
    checkpoints: tuple[tuple[int, int], ...]  # (tick, digest), ascending ticks
    final_tick: int
    final_phase: Phase
    final_digest: int


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    ticks: int
    final_phase: Phase
    final_digest: int
    checkpoints_checked: int


_COMMAND_CHARS = frozenset(c.value for c in Command)


def record(
    world: WorldMap,
    cfg: GameConfig,
    seed: int,
    commands: str,
    checkpoint_every: int = DEFAULT_CHECKPOINT_EVERY,
) -> Replay:
    """Simulate a command string and package the result as a Replay."""
    state = new_game(world, cfg, seed)
    checkpoints: list[tuple[int, int]] = []
    for ch in commands:
        state = step(state, Command.from_char(ch))
        if checkpoint_every > 0 and state.tick % checkpoint_every == 0:
            checkpoints.append((state.tick, hash_state(state)))
    return Replay(
        map_digest=map_digest(world),
        seed=seed,
        config=cfg,
        checkpoint_every=checkpoint_every,
        commands=commands,
        checkpoints=tuple(checkpoints),
        final_tick=state.tick,
        final_phase=state.phase,
        final_digest=hash_state(state),
    )


def write_replay(replay: Replay) -> str:
    out = [FORMAT_HEADER]
    out.append(f"map_digest={replay.map_digest:016x}")
    out.append(f"seed={replay.seed}")
    out.extend(f"config.{line}" for line in serialize_config(replay.config).splitlines())
    out.append(f"checkpoint_every={replay.checkpoint_every}")
    out.append("body:")
    body = replay.commands
    for i in range(0, len(body), _BODY_WRAP):
        out.append(body[i : i + _BODY_WRAP])
    if replay.checkpoints:
        out.append("checkpoints:")
        out.extend(f"{tick}={digest:016x}" for tick, digest in replay.checkpoints)
    out.append("footer:")
    out.append(f"final_tick={replay.final_tick}")
    out.append(f"final_phase={_PHASE_LABELS[replay.final_phase]}")
    out.append(f"final_digest={replay.final_digest:016x}")
    return "\n".join(out) + "\n"


def _take_kv(lines: list[str], pos: int, key: str) -> tuple[str, int]:
    if pos >= len(lines) or not lines[pos].startswith(key + "="):
        raise ReplayError(f"expected '{key}=' at line {pos + 1}")
    return lines[pos][len(key) + 1 :], pos + 1


def _parse_hex_digest(text: str, what: str) -> int:
    if len(text) != 16:
        raise ReplayError(f"{what} must be 16 hex digits, got {text!r}")
    try:
        return int(text, 16)
    except ValueError:
        raise ReplayError(f"{what} must be 16 hex digits, got {text!r}") from None


def read_replay(text: str) -> Replay:
    lines = text.replace("\r\n", "\n").split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != FORMAT_HEADER:
        raise ReplayError(f"first line must be {FORMAT_HEADER!r}")
    pos = 1
    raw, pos = _take_kv(lines, pos, "map_digest")
    mdigest = _parse_hex_digest(raw, "map_digest")
    raw, pos = _take_kv(lines, pos, "seed")
    try:
        seed = int(raw)
    except ValueError:
        raise ReplayError(f"bad seed {raw!r}") from None

    cfg_lines = []
    for key in CONFIG_KEYS:
        raw, pos = _take_kv(lines, pos, f"config.{key}")
        cfg_lines.append(f"{key}={raw}")
    try:
        cfg = parse_config("\n".join(cfg_lines))
    except ConfigError as exc:
        raise ReplayError(f"bad config in header: {exc}") from exc

    raw, pos = _take_kv(lines, pos, "checkpoint_every")
    try:
        checkpoint_every = int(raw)
    except ValueError:
        raise ReplayError(f"bad checkpoint_every {raw!r}") from None
    if checkpoint_every < 0:
        raise ReplayError("checkpoint_every must be >= 0")

    if pos >= len(lines) or lines[pos] != "body:":
        raise ReplayError("missing 'body:' section")
    pos += 1
    body_parts: list[str] = []
    while pos < len(lines) and lines[pos] not in ("checkpoints:", "footer:"):
        part = lines[pos]
        if not part or any(ch not in _COMMAND_CHARS for ch in part):
            raise ReplayError(f"bad body line {pos + 1}: {part!r}")
        if body_parts and len(body_parts[-1]) != _BODY_WRAP:
            raise ReplayError(f"body line {pos} is short but not the last")
        if len(part) > _BODY_WRAP:
            raise ReplayError(f"body line {pos + 1} exceeds {_BODY_WRAP} columns")
        body_parts.append(part)
        pos += 1
    commands = "".join(body_parts)

    checkpoints: list[tuple[int, int]] = []
    if pos < len(lines) and lines[pos] == "checkpoints:":
        pos += 1
        while pos < len(lines) and lines[pos] != "footer:":
            part = lines[pos]
            tick_s, _, digest_s = part.partition("=")
            try:
                tick = int(tick_s)
            except ValueError:
                raise ReplayError(f"bad checkpoint line {pos + 1}: {part!r}") from None
            digest = _parse_hex_digest(digest_s, f"checkpoint at tick {tick}")
            if checkpoints and tick <= checkpoints[-1][0]:
                raise ReplayError("checkpoint ticks must be ascending")
            checkpoints.append((tick, digest))
            pos += 1
        if not checkpoints:
            raise ReplayError("'checkpoints:' section is empty")

    if pos >= len(lines) or lines[pos] != "footer:":
        raise ReplayError("missing 'footer:' section")
    pos += 1
    raw, pos = _take_kv(lines, pos, "final_tick")
    try:
        final_tick = int(raw)
    except ValueError:
        raise ReplayError(f"bad final_tick {raw!r}") from None
    raw, pos = _take_kv(lines, pos, "final_phase")
    if raw not in _PHASES_BY_LABEL:
        raise ReplayError(f"bad final_phase {raw!r}")
    final_phase = _PHASES_BY_LABEL[raw]
    raw, pos = _take_kv(lines, pos, "final_digest")
    final_digest = _parse_hex_digest(raw, "final_digest")
    if pos != len(lines):
        raise ReplayError(f"trailing content at line {pos + 1}")

    if final_tick != len(commands):
        raise ReplayError(
            f"body has {len(commands)} commands but final_tick={final_tick}"
        )
    for tick, _ in checkpoints:
        if not 0 < tick <= final_tick:
            raise ReplayError(f"checkpoint tick {tick} outside 1..{final_tick}")

    return Replay(
        map_digest=mdigest,
        seed=seed,
        config=cfg,
        checkpoint_every=checkpoint_every,
        commands=commands,
        checkpoints=tuple(checkpoints),
        final_tick=final_tick,
        final_phase=final_phase,
        final_digest=final_digest,
    )


def replay_verify(replay: Replay, world: WorldMap, cfg: GameConfig) -> VerifyReport:
    """Re-simulate the body and check every recorded digest.

    Raises MapDigestMismatch or ConfigMismatch before simulating, and
    DigestDivergence at the first checkpoint (or the footer) whose digest
    disagrees with the recorded one.  Returns a passing report otherwise.
    """
    actual_map = map_digest(world)
    if replay.map_digest != actual_map:
        raise MapDigestMismatch(replay.map_digest, actual_map)
    header_cfg = serialize_config(replay.config).splitlines()
    provided_cfg = serialize_config(cfg).splitlines()
    for key, header_line, provided_line in zip(CONFIG_KEYS, header_cfg, provided_cfg):
        if header_line != provided_line:
            raise ConfigMismatch(
                key,
                header_line.split("=", 1)[1],
                provided_line.split("=", 1)[1],
            )

    expected_at = dict(replay.checkpoints)
    state = new_game(world, cfg, replay.seed)
    checked = 0
    for ch in replay.commands:
        state = step(state, Command.from_char(ch))
        want = expected_at.get(state.tick)
        if want is not None:
            got = hash_state(state)
            if got != want:
                raise DigestDivergence(state.tick, want, got)
            checked += 1

    final = hash_state(state)
    if final != replay.final_digest or state.phase != replay.final_phase:
        raise DigestDivergence(state.tick, replay.final_digest, final)
    return VerifyReport(
        passed=True,
        ticks=state.tick,
        final_phase=state.phase,
        final_digest=final,
        checkpoints_checked=checked,
    )


def load_replay(path: str) -> Replay:
    with open(path, "r", encoding="utf-8") as fh:
        return read_replay(fh.read())


def save_replay(replay: Replay, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(write_replay(replay))
