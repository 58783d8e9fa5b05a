"""Pure-numpy kernel backend (vectorized, no JIT)."""

from __future__ import annotations

import numpy as np

from outbreak.kernels._common import (
    U64_GOLDEN,
    U64_LEN_SALT,
    U64_MIX_A,
    U64_MIX_B,
    U64_S27,
    U64_S30,
    U64_S31,
)

BACKEND = "numpy"


def _mix64(z: np.ndarray | np.uint64):
    # uint64 wraparound is the point here; numpy flags it as overflow.
    with np.errstate(over="ignore"):
        z = (z ^ (z >> U64_S30)) * U64_MIX_A
        z = (z ^ (z >> U64_S27)) * U64_MIX_B
        return z ^ (z >> U64_S31)


def digest_words(words: np.ndarray) -> int:
    """64-bit digest of a uint64 word stream (position-salted xor fold)."""
    n = words.shape[0]
    acc = np.uint64(0)
    if n:
        with np.errstate(over="ignore"):
            idx = np.arange(1, n + 1, dtype=np.uint64) * U64_GOLDEN
        acc = np.bitwise_xor.reduce(_mix64(words.astype(np.uint64, copy=False) ^ idx))
    with np.errstate(over="ignore"):
        return int(_mix64(acc ^ (np.uint64(n) + U64_LEN_SALT)))


def grid_distances(walkable: np.ndarray, sx: int, sy: int) -> np.ndarray:
    """BFS distance in steps from (sx, sy) over 4-connected walkable cells.

    Returns an int32 grid shaped like ``walkable``; unreachable cells get -1.
    """
    h, w = walkable.shape
    dist = np.full((h, w), -1, dtype=np.int32)
    if not (0 <= sx < w and 0 <= sy < h) or not walkable[sy, sx]:
        return dist
    frontier = np.zeros((h, w), dtype=bool)
    frontier[sy, sx] = True
    d = 0
    while frontier.any():
        dist[frontier] = d
        grown = np.zeros((h, w), dtype=bool)
        grown[:-1, :] |= frontier[1:, :]
        grown[1:, :] |= frontier[:-1, :]
        grown[:, :-1] |= frontier[:, 1:]
        grown[:, 1:] |= frontier[:, :-1]
        frontier = grown & walkable & (dist < 0)
        d += 1
    return dist


def contact_pairs(xs: np.ndarray, ys: np.ndarray, max_dist: int) -> tuple[np.ndarray, np.ndarray]:
    """All index pairs (i, j), i < j, with manhattan distance <= max_dist.

    Pairs come out in lexicographic (i, j) order.
    """
    n = xs.shape[0]
    if n < 2:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    dx = np.abs(xs[:, None] - xs[None, :])
    dy = np.abs(ys[:, None] - ys[None, :])
    close = (dx + dy) <= max_dist
    close &= np.triu(np.ones((n, n), dtype=bool), k=1)
    i_idx, j_idx = np.nonzero(close)
    return i_idx.astype(np.int64), j_idx.astype(np.int64)
