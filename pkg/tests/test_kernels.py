"""Kernel backends must agree bit for bit and match slow reference code."""

from collections import deque

import numpy as np
import pytest

from outbreak import kernels
from outbreak.kernels import _numpy as knp

numba = pytest.importorskip("numba")
from outbreak.kernels import _numba as knb  # noqa: E402


def _rand_words(rng, n):
    return rng.integers(0, 2**64, size=n, dtype=np.uint64)


@pytest.mark.parametrize("n", [0, 1, 2, 7, 64, 513])
def test_digest_backends_agree(n):
    rng = np.random.default_rng(n + 1)
    words = _rand_words(rng, n)
    assert knp.digest_words(words) == knb.digest_words(words)


def test_digest_distinguishes_length_and_order():
    one = np.array([5], dtype=np.uint64)
    padded = np.array([5, 0], dtype=np.uint64)
    swapped = np.array([0, 5], dtype=np.uint64)
    empty = np.empty(0, dtype=np.uint64)
    digests = {
        kernels.digest_words(w) for w in (one, padded, swapped, empty)
    }
    assert len(digests) == 4


def test_digest_position_salted():
    a = np.array([1, 2], dtype=np.uint64)
    b = np.array([2, 1], dtype=np.uint64)
    assert kernels.digest_words(a) != kernels.digest_words(b)


def _bfs_reference(walkable, sx, sy):
    h, w = walkable.shape
    dist = np.full((h, w), -1, dtype=np.int32)
    if not (0 <= sx < w and 0 <= sy < h) or not walkable[sy, sx]:
        return dist
    dist[sy, sx] = 0
    q = deque([(sx, sy)])
    while q:
        x, y = q.popleft()
        for dx, dy in ((0, -1), (0, 1), (-1, 0), (1, 0)):
            nx, ny = x + dx, y + dy
            if 0 <= nx < w and 0 <= ny < h and walkable[ny, nx] and dist[ny, nx] < 0:
                dist[ny, nx] = dist[y, x] + 1
                q.append((nx, ny))
    return dist


@pytest.mark.parametrize("seed", range(12))
def test_grid_distances_match_reference_and_each_other(seed):
    rng = np.random.default_rng(seed)
    h, w = rng.integers(2, 14, size=2)
    walkable = rng.random((h, w)) > 0.35
    sx, sy = int(rng.integers(0, w)), int(rng.integers(0, h))
    ref = _bfs_reference(walkable, sx, sy)
    assert np.array_equal(knp.grid_distances(walkable, sx, sy), ref)
    assert np.array_equal(knb.grid_distances(walkable, sx, sy), ref)


def test_grid_distances_blocked_start_all_unreachable():
    walkable = np.array([[False, True], [True, True]])
    out = kernels.grid_distances(walkable, 0, 0)
    assert (out == -1).all()


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("max_dist", [0, 1, 3])
def test_contact_pairs_match_bruteforce(seed, max_dist):
    rng = np.random.default_rng(seed * 7 + max_dist)
    n = int(rng.integers(0, 12))
    xs = rng.integers(0, 6, size=n).astype(np.int64)
    ys = rng.integers(0, 6, size=n).astype(np.int64)
    want = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if abs(int(xs[i]) - int(xs[j])) + abs(int(ys[i]) - int(ys[j])) <= max_dist
    ]
    for impl in (knp, knb):
        ai, aj = impl.contact_pairs(xs, ys, max_dist)
        assert list(zip(ai.tolist(), aj.tolist())) == want


def test_contact_pairs_lexicographic_order():
    xs = np.array([0, 1, 0, 1], dtype=np.int64)
    ys = np.array([0, 0, 1, 1], dtype=np.int64)
    ai, aj = kernels.contact_pairs(xs, ys, 1)
    pairs = list(zip(ai.tolist(), aj.tolist()))
    assert pairs == sorted(pairs)
    assert pairs == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_backend_selection_reports_a_backend():
    assert kernels.BACKEND in ("numba", "numpy")
