"""Touch transmission between entities and the player's infection ledger.

Contact is evaluated over all unordered pairs of living entities.  A pair
transmits when exactly one side is infected and the healthy side has no
active protection; the infected side is the event source.  NPC-to-NPC
pairs transmit too, so chains keep spreading away from the player.

The ledger attributes infections to the player: *direct* targets are those
the player touched; *indirect* targets are everyone else reachable from the
player in the directed transmission graph.  Chains rooted at monsters or
pre-infected civilians never count toward the player.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from outbreak import kernels
from outbreak.config import CONTACT_SAME_TILE
from outbreak.effects import ActiveEffect, Effects, Health
from outbreak.worldmap import TilePos


@dataclass(frozen=True, order=True)
class TransmissionEvent:
    tick: int
    source: int
    target: int


Ledger = tuple[TransmissionEvent, ...]


def is_protected(effects: Iterable[ActiveEffect], now: int) -> bool:
    """True iff any mask/sanitizer effect is still live (expiry exclusive)."""
    return any(e.expires_at_tick > now for e in effects)


def resolve_contacts(
    positions: Mapping[int, TilePos],
    healths: Mapping[int, Health],
    effects_by_id: Mapping[int, Effects],
    now: int,
    contact_rule: str,
) -> list[TransmissionEvent]:
    """Candidate transmissions among living entities, sorted by (source, target).

    Pure function of its inputs: entities are the keys of ``healths``;
    one event per qualifying contact pair.  The caller applies the events
    (and any transmission-probability filtering) to the game state.
    """
    ids = sorted(healths)
    n = len(ids)
    if n < 2:
        return []
    xs = np.fromiter((positions[i][0] for i in ids), dtype=np.int64, count=n)
    ys = np.fromiter((positions[i][1] for i in ids), dtype=np.int64, count=n)
    max_dist = 0 if contact_rule == CONTACT_SAME_TILE else 1
    ai, aj = kernels.contact_pairs(xs, ys, max_dist)

    events = []
    for k in range(ai.shape[0]):
        a = ids[int(ai[k])]
        b = ids[int(aj[k])]
        a_inf = healths[a] is not None
        b_inf = healths[b] is not None
        if a_inf == b_inf:
            continue
        source, target = (a, b) if a_inf else (b, a)
        if is_protected(effects_by_id.get(target, ()), now):
            continue
        events.append(TransmissionEvent(now, source, target))
    events.sort(key=lambda e: (e.source, e.target))
    return events


def ledger_counts(ledger: Iterable[TransmissionEvent], player: int) -> tuple[int, int]:
    """(direct, indirect) distinct infection counts attributed to the player."""
    events = list(ledger)
    direct = {e.target for e in events if e.source == player}
    # Reachability over the directed event graph via set expansion.
    adjacency: dict[int, set[int]] = {}
    for e in events:
        adjacency.setdefault(e.source, set()).add(e.target)
    reached: set[int] = set()
    frontier = set(adjacency.get(player, ()))
    while frontier:
        reached |= frontier
        frontier = {
            t for s in frontier for t in adjacency.get(s, ()) if t not in reached
        }
    indirect = reached - direct - {player}
    return len(direct), len(indirect)
