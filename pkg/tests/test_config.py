import dataclasses

import pytest

from outbreak.config import (
    CONFIG_KEYS,
    CONTACT_SAME_TILE,
    ConfigError,
    GameConfig,
    parse_config,
    serialize_config,
)


def test_empty_text_gives_defaults():
    assert parse_config("") == GameConfig()


def test_comments_and_blanks_ignored():
    cfg = parse_config("# hi\n\nmask_duration=9   # trailing\n")
    assert cfg.mask_duration == 9


def test_all_keys_parse():
    text = serialize_config(GameConfig())
    assert parse_config(text) == GameConfig()
    assert len(text.strip().splitlines()) == len(CONFIG_KEYS) == 13


def test_unknown_key_rejected():
    with pytest.raises(ConfigError, match="unknown config key"):
        parse_config("gravity=9.8\n")


def test_duplicate_key_rejected():
    with pytest.raises(ConfigError, match="duplicate"):
        parse_config("mask_duration=1\nmask_duration=2\n")


def test_bad_values_rejected():
    with pytest.raises(ConfigError, match="bad value"):
        parse_config("lifeline_max=lots\n")
    with pytest.raises(ConfigError, match="true"):
        parse_config("strict_quota=yes\n")
    with pytest.raises(ConfigError, match="bad config line"):
        parse_config("just words\n")


def test_validation_ranges():
    with pytest.raises(ConfigError):
        parse_config("mask_duration=0\n")
    with pytest.raises(ConfigError):
        parse_config("transmission_prob=1.5\n")
    with pytest.raises(ConfigError):
        parse_config("quota_groceries=-1\n")
    with pytest.raises(ConfigError):
        parse_config("contact_rule=telepathy\n")
    with pytest.raises(ConfigError):
        GameConfig(npc_move_period=0)


def test_round_trip_non_defaults():
    cfg = GameConfig(
        mask_duration=5,
        transmission_prob=0.25,
        contact_rule=CONTACT_SAME_TILE,
        strict_quota=True,
    )
    assert parse_config(serialize_config(cfg)) == cfg


def test_config_is_immutable():
    with pytest.raises(dataclasses.FrozenInstanceError):
        GameConfig().mask_duration = 1  # type: ignore[misc]
