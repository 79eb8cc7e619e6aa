"""Deterministic 64-bit PRNG (splitmix finalizer) backing every seeded operation."""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """Tiny deterministic generator; identical seeds give identical streams."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return (z ^ (z >> 31)) & MASK64

    def next_float(self) -> float:
        # 53 mantissa bits -> uniform in [0, 1)
        return (self.next_u64() >> 11) * 2.0**-53

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.next_float()

    def randint(self, n: int) -> int:
        return self.next_u64() % n

    def shuffle(self, seq: list) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.next_u64() % (i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def disk_points(self, count: int) -> np.ndarray:
        """`count` points uniform in the open unit disk (rejection sampled)."""
        out = np.empty((count, 2))
        k = 0
        while k < count:
            x = self.uniform(-1.0, 1.0)
            y = self.uniform(-1.0, 1.0)
            if x * x + y * y < 1.0:
                out[k, 0] = x
                out[k, 1] = y
                k += 1
        return out

    def ball_points(self, count: int) -> np.ndarray:
        """`count` points uniform in the open unit ball of R^3."""
        out = np.empty((count, 3))
        k = 0
        while k < count:
            p = (self.uniform(-1, 1), self.uniform(-1, 1), self.uniform(-1, 1))
            if p[0] ** 2 + p[1] ** 2 + p[2] ** 2 < 1.0:
                out[k] = p
                k += 1
        return out


def stream_seed(seed: int, index: int) -> int:
    """Independent per-index seed so indexed work units can run in any order."""
    return (seed ^ ((index * _GAMMA) & MASK64)) & MASK64
