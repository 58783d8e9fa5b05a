"""Hot numeric kernels with two interchangeable backends.

Three inner loops dominate simulation throughput: the per-tick state digest,
pairwise contact detection, and grid BFS for path fields.  Each has a numba
``@njit`` implementation and a pure-numpy implementation producing bit-equal
results.  Selection order:

* ``OUTBREAK_KERNELS=numpy`` forces the pure-numpy path,
* ``OUTBREAK_KERNELS=numba`` requires numba (import error propagates),
* unset: numba when importable, else the numpy fallback.

``benchmarks/bench_kernels.py`` compares the two backends.
"""

from __future__ import annotations

import os

_requested = os.environ.get("OUTBREAK_KERNELS", "").strip().lower()

if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(f"OUTBREAK_KERNELS must be 'numba' or 'numpy', got {_requested!r}")

if _requested == "numpy":
    from outbreak.kernels import _numpy as _impl
elif _requested == "numba":
    from outbreak.kernels import _numba as _impl
else:
    try:
        from outbreak.kernels import _numba as _impl  # type: ignore[no-redef]
    except ImportError:
        from outbreak.kernels import _numpy as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND

digest_words = _impl.digest_words
grid_distances = _impl.grid_distances
contact_pairs = _impl.contact_pairs

__all__ = ["BACKEND", "digest_words", "grid_distances", "contact_pairs"]
