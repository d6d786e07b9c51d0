"""Deterministic 64-bit PRNG for reproducible corpora and witnesses.

SplitMix64: the same seed yields the same stream on every platform and
Python version, which is the stability contract the corpora and audit
witnesses rely on.  Not suitable for cryptography.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


def mix64(z: int) -> int:
    """One SplitMix64 output step applied to ``z``."""
    z = (z + 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Stateful SplitMix64 stream."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), bound >= 1, via rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = _MASK - (_MASK + 1) % bound
        while True:
            x = self.next_u64()
            if x <= limit:
                return x % bound

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in the inclusive range [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]


def substream(seed: int, *indices: int) -> SplitMix64:
    """Independent stream addressed by (seed, *indices).

    The same address always yields the same stream, so corpora can be
    generated out of order or in parallel with identical results.
    """
    z = seed & _MASK
    for ix in indices:
        z = mix64(z ^ mix64(ix & _MASK))
    return SplitMix64(z)
