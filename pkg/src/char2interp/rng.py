"""SplitMix64: the fixed pseudo-random generator for reproducible runs."""
from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    """Standard splitmix64 stream; identical seeds give identical streams."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_nonzero(self) -> int:
        while True:
            x = self.next()
            if x:
                return x

    def bits(self, n: int) -> int:
        """n pseudo-random bits, n <= 64."""
        return self.next() >> (64 - n) if n else 0
