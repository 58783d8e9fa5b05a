"""Collection quota, scoring, and the quota-gated finish rule."""

from __future__ import annotations

from dataclasses import dataclass, replace

from outbreak.config import GameConfig
from outbreak.worldmap import EntityKind, TileKind, TilePos, WorldMap


class UnsatisfiableQuota(ValueError):
    """Strict mode: the map holds fewer pickups than the config demands."""


@dataclass(frozen=True)
class Quota:
    groceries_required: int
    medicines_required: int
    groceries_collected: int = 0
    medicines_collected: int = 0


def assign_quota(world: WorldMap, cfg: GameConfig) -> Quota:
    """Quota for a fresh game: config targets capped by available pickups."""
    avail_g = world.count_spawns(EntityKind.GROCERY_PICKUP)
    avail_d = world.count_spawns(EntityKind.MEDICINE_PICKUP)
    if cfg.strict_quota and (cfg.quota_groceries > avail_g or cfg.quota_medicines > avail_d):
        raise UnsatisfiableQuota(
            f"map offers {avail_g} groceries / {avail_d} medicines, "
            f"config demands {cfg.quota_groceries} / {cfg.quota_medicines}"
        )
    return Quota(min(cfg.quota_groceries, avail_g), min(cfg.quota_medicines, avail_d))


def record_pickup(
    quota: Quota, score: int, kind: EntityKind, cfg: GameConfig
) -> tuple[Quota, int]:
    """Count a consumed pickup; surplus beyond the quota still scores."""
    if kind == EntityKind.GROCERY_PICKUP:
        quota = replace(
            quota,
            groceries_collected=min(quota.groceries_collected + 1, quota.groceries_required),
        )
        score += cfg.points_per_grocery
    elif kind == EntityKind.MEDICINE_PICKUP:
        quota = replace(
            quota,
            medicines_collected=min(quota.medicines_collected + 1, quota.medicines_required),
        )
        score += cfg.points_per_medicine
    else:
        raise ValueError(f"not a quota pickup kind: {kind!r}")
    return quota, score


def quota_met(quota: Quota) -> bool:
    return (
        quota.groceries_collected == quota.groceries_required
        and quota.medicines_collected == quota.medicines_required
    )


def can_finish(quota: Quota, player_pos: TilePos, world: WorldMap) -> bool:
    return quota_met(quota) and world.tile_at(player_pos) == TileKind.HOME
