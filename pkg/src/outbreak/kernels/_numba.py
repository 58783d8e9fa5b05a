"""Numba kernel backend: njit loops, bit-identical to the numpy backend."""

from __future__ import annotations

import numpy as np
from numba import njit

from outbreak.kernels._common import (
    U64_GOLDEN,
    U64_LEN_SALT,
    U64_MIX_A,
    U64_MIX_B,
    U64_S27,
    U64_S30,
    U64_S31,
)

BACKEND = "numba"


@njit(cache=True)
def _digest_words(words):
    acc = np.uint64(0)
    n = np.uint64(words.shape[0])
    for i in range(words.shape[0]):
        z = words[i] ^ (np.uint64(i + 1) * U64_GOLDEN)
        z = (z ^ (z >> U64_S30)) * U64_MIX_A
        z = (z ^ (z >> U64_S27)) * U64_MIX_B
        acc ^= z ^ (z >> U64_S31)
    z = acc ^ (n + U64_LEN_SALT)
    z = (z ^ (z >> U64_S30)) * U64_MIX_A
    z = (z ^ (z >> U64_S27)) * U64_MIX_B
    return z ^ (z >> U64_S31)


def digest_words(words: np.ndarray) -> int:
    return int(_digest_words(np.ascontiguousarray(words, dtype=np.uint64)))


@njit(cache=True)
def _grid_distances(walkable, sx, sy):
    h, w = walkable.shape
    dist = np.full((h, w), -1, dtype=np.int32)
    if sx < 0 or sx >= w or sy < 0 or sy >= h or not walkable[sy, sx]:
        return dist
    queue = np.empty(h * w, dtype=np.int64)
    head = 0
    tail = 0
    queue[tail] = sy * w + sx
    tail += 1
    dist[sy, sx] = 0
    while head < tail:
        cell = queue[head]
        head += 1
        cy = cell // w
        cx = cell % w
        d = dist[cy, cx] + 1
        # up, down, left, right
        if cy > 0 and walkable[cy - 1, cx] and dist[cy - 1, cx] < 0:
            dist[cy - 1, cx] = d
            queue[tail] = (cy - 1) * w + cx
            tail += 1
        if cy < h - 1 and walkable[cy + 1, cx] and dist[cy + 1, cx] < 0:
            dist[cy + 1, cx] = d
            queue[tail] = (cy + 1) * w + cx
            tail += 1
        if cx > 0 and walkable[cy, cx - 1] and dist[cy, cx - 1] < 0:
            dist[cy, cx - 1] = d
            queue[tail] = cy * w + cx - 1
            tail += 1
        if cx < w - 1 and walkable[cy, cx + 1] and dist[cy, cx + 1] < 0:
            dist[cy, cx + 1] = d
            queue[tail] = cy * w + cx + 1
            tail += 1
    return dist


def grid_distances(walkable: np.ndarray, sx: int, sy: int) -> np.ndarray:
    return _grid_distances(np.ascontiguousarray(walkable, dtype=np.bool_), sx, sy)


@njit(cache=True)
def _contact_pairs(xs, ys, max_dist):
    n = xs.shape[0]
    cap = n * (n - 1) // 2
    out_i = np.empty(cap, dtype=np.int64)
    out_j = np.empty(cap, dtype=np.int64)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            d = abs(xs[i] - xs[j]) + abs(ys[i] - ys[j])
            if d <= max_dist:
                out_i[k] = i
                out_j[k] = j
                k += 1
    return out_i[:k], out_j[:k]


def contact_pairs(xs: np.ndarray, ys: np.ndarray, max_dist: int) -> tuple[np.ndarray, np.ndarray]:
    if xs.shape[0] < 2:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    return _contact_pairs(
        np.ascontiguousarray(xs, dtype=np.int64),
        np.ascontiguousarray(ys, dtype=np.int64),
        max_dist,
    )
