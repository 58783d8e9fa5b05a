"""Timed protective effects, the lifeline, and the doctor cure.

Masks and sanitizers protect until their expiry tick; expiry is exclusive
(an effect with ``expires_at_tick == now`` no longer protects at ``now``).
Picking up a second item of the same kind replaces the expiry rather than
stacking.  Every acquisition also grants the safety-shield score bonus.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import IntEnum

from outbreak.config import GameConfig

# Health of a living entity: None = healthy, int = tick it became infected.
Health = int | None


class EffectKind(IntEnum):
    MASK = 0
    SANITIZER = 1


@dataclass(frozen=True)
class ActiveEffect:
    kind: EffectKind
    expires_at_tick: int


Effects = tuple[ActiveEffect, ...]


@dataclass(frozen=True)
class Lifeline:
    current: int
    maximum: int

    def __post_init__(self) -> None:
        if not 0 <= self.current <= self.maximum:
            raise ValueError(f"lifeline {self.current} outside [0, {self.maximum}]")


class NotAtClinic(RuntimeError):
    """visit_doctor was sequenced while the player was off a Clinic tile."""


def effect_duration(kind: EffectKind, cfg: GameConfig) -> int:
    return cfg.mask_duration if kind == EffectKind.MASK else cfg.sanitizer_duration


def acquire_effect(
    effects: Effects, kind: EffectKind, now: int, cfg: GameConfig
) -> tuple[Effects, int]:
    """Apply a pickup: (re)set the effect's expiry, grant the shield bonus."""
    expires = now + effect_duration(kind, cfg)
    kept = tuple(e for e in effects if e.kind != kind)
    updated = tuple(sorted(kept + (ActiveEffect(kind, expires),), key=lambda e: e.kind))
    return updated, cfg.shield_bonus


def expire_effects(effects: Effects, now: int) -> Effects:
    return tuple(e for e in effects if e.expires_at_tick > now)


def decay_lifeline(life: Lifeline, health: Health, cfg: GameConfig) -> Lifeline:
    if health is None:
        return life
    return replace(life, current=max(0, life.current - cfg.infection_decay))


def visit_doctor(
    health: Health, life: Lifeline, cfg: GameConfig, *, at_clinic: bool
) -> tuple[Health, Lifeline]:
    """Cure and fully revive; the caller asserts the clinic-tile precondition."""
    if not at_clinic:
        raise NotAtClinic("visit_doctor called while not on a Clinic tile")
    return None, Lifeline(cfg.lifeline_max, cfg.lifeline_max)
