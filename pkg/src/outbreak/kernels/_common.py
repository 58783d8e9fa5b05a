"""Constants shared by both kernel backends.

The digest is a position-salted xor fold: word ``i`` (0-based) is xored with
``(i+1) * GOLDEN`` and passed through the SplitMix64 finalizer; the folded
accumulator is finalized together with the word count.  All arithmetic is
wrapping uint64, so numba, numpy and pure Python agree bit for bit.
"""

from __future__ import annotations

import numpy as np

U64_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
U64_MIX_A = np.uint64(0xBF58476D1CE4E5B9)
U64_MIX_B = np.uint64(0x94D049BB133111EB)
U64_LEN_SALT = np.uint64(0xA0B0C0D0E0F01234)
U64_S30 = np.uint64(30)
U64_S27 = np.uint64(27)
U64_S31 = np.uint64(31)

# Neighbor order is normative wherever ties are broken by direction:
# up, down, left, right (y-1, y+1, x-1, x+1).
NEIGHBOR_DX = np.array([0, 0, -1, 1], dtype=np.int64)
NEIGHBOR_DY = np.array([-1, 1, 0, 0], dtype=np.int64)
