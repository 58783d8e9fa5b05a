"""Microbenchmark: numba kernels vs the pure-numpy fallback.

Imports both backend modules directly (bypassing the OUTBREAK_KERNELS
switch), checks they agree on every input, and prints per-call timings.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from outbreak.kernels import _numpy as knp

try:
    from outbreak.kernels import _numba as knb
except ImportError:
    knb = None


def _time_call(fn, *args, repeat: int) -> float:
    fn(*args)  # warmup; also triggers jit compilation
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def _row(label: str, size: str, t_nb: float | None, t_np: float) -> None:
    if t_nb is None:
        print(f"{label:<16} {size:>10} {'-':>12} {t_np * 1e6:>12.1f}")
    else:
        print(
            f"{label:<16} {size:>10} {t_nb * 1e6:>12.1f} {t_np * 1e6:>12.1f}"
            f" {t_np / t_nb:>9.1f}x"
        )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=200, help="timed calls per case")
    args = parser.parse_args()
    repeat = args.repeat

    if knb is None:
        print("numba backend unavailable; timing the numpy fallback only\n")
    rng = np.random.default_rng(42)
    print(f"{'kernel':<16} {'size':>10} {'numba us':>12} {'numpy us':>12} {'speedup':>10}")

    for n in (16, 256, 4096):
        words = rng.integers(0, 1 << 63, size=n, dtype=np.uint64)
        t_np = _time_call(knp.digest_words, words, repeat=repeat)
        t_nb = None
        if knb is not None:
            assert knb.digest_words(words) == knp.digest_words(words)
            t_nb = _time_call(knb.digest_words, words, repeat=repeat)
        _row("digest_words", f"{n}w", t_nb, t_np)

    for side in (64, 256):
        walkable = rng.random((side, side)) < 0.7
        walkable[0, 0] = True
        t_np = _time_call(knp.grid_distances, walkable, 0, 0, repeat=repeat)
        t_nb = None
        if knb is not None:
            assert np.array_equal(
                knb.grid_distances(walkable, 0, 0), knp.grid_distances(walkable, 0, 0)
            )
            t_nb = _time_call(knb.grid_distances, walkable, 0, 0, repeat=repeat)
        _row("grid_distances", f"{side}x{side}", t_nb, t_np)

    for n in (16, 128, 1024):
        xs = rng.integers(0, 64, size=n).astype(np.int64)
        ys = rng.integers(0, 64, size=n).astype(np.int64)
        t_np = _time_call(knp.contact_pairs, xs, ys, 1, repeat=repeat)
        t_nb = None
        if knb is not None:
            a = knb.contact_pairs(xs, ys, 1)
            b = knp.contact_pairs(xs, ys, 1)
            assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
            t_nb = _time_call(knb.contact_pairs, xs, ys, 1, repeat=repeat)
        _row("contact_pairs", f"{n}pts", t_nb, t_np)


if __name__ == "__main__":
    main()
