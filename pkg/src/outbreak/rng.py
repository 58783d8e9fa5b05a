"""Deterministic 64-bit PRNG used by the simulation and the bot harness.

The generator is SplitMix64: the state advances by the 64-bit golden-gamma
constant 0x9E3779B97F4A7C15 each draw and the output is the SplitMix64
finalizer applied to the new state.  The algorithm is fully specified by the
three constants below, uses only wrapping 64-bit integer arithmetic, and
therefore reproduces identical streams on every platform.  The platform RNG
is never used anywhere in the engine.

Bot policies draw from a separate stream derived from the same seed via
``bot_stream(seed)`` so that bot randomness never perturbs the in-game RNG
consumption.
"""

from __future__ import annotations

MASK64 = 0xFFFFFFFFFFFFFFFF
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB

# Domain-separation salt for the bot-policy stream.
_BOT_STREAM_SALT = 0xB07C0DE5EEDFACE5


def mix64(z: int) -> int:
    """SplitMix64 finalizer: a bijective 64-bit avalanche mix."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX_A) & MASK64
    z = ((z ^ (z >> 27)) * _MIX_B) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Resumable SplitMix64 stream; ``state`` is the whole internal state."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform-ish draw in [0, n). Modulo bias is irrelevant for tiny n."""
        if n <= 0:
            raise ValueError("n must be positive")
        return self.next_u64() % n

    def unit_float(self) -> float:
        """Float in [0, 1) built from the top 53 bits of a draw."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def bot_stream(seed: int) -> SplitMix64:
    """Bot-policy RNG for a run seed, domain-separated from the game stream."""
    return SplitMix64(mix64((seed & MASK64) ^ _BOT_STREAM_SALT))
