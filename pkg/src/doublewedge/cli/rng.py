"""SplitMix64 generator used by ``verify`` so reports reproduce everywhere.

Step::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    out = z ^ (z >> 31)

Doubles take the top 53 bits: ``(out >> 11) * 2**-53`` in ``[0, 1)``.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int):
        self.state = int(seed) & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _M1) & _MASK
        z = ((z ^ (z >> 27)) * _M2) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, n: int, lo: float = -1.0, hi: float = 1.0) -> np.ndarray:
        return np.array([lo + (hi - lo) * self.random() for _ in range(n)])

    def matrix(self, n: int, m: int | None = None) -> np.ndarray:
        m = n if m is None else m
        return self.uniform(n * m).reshape(n, m)
