"""Portable seeded random numbers for simulation noise.

SplitMix64: a 64-bit state advanced by the golden-ratio increment 0x9E3779B97F4A7C15 and
mixed with the constants 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB (shifts 30, 27, 31).
Uniform doubles take the top 53 bits of each output times 2**-53, giving [0, 1).
Gaussian draws use the cosine branch of Box-Muller on two fresh uniforms:
u1 = 1 - uniform() (so u1 is in (0, 1]), u2 = uniform(),
z = sqrt(-2 ln u1) * cos(2 pi u2). Any port following these steps reproduces traces bit for bit.
"""
import math

from src.core.errors import ConfigurationError

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_1 = 0xBF58476D1CE4E5B9
MIX_2 = 0x94D049BB133111EB
DOUBLE_UNIT = 2.0 ** -53


class SplitMix64:
    """Seeded 64-bit generator with uniform and Gaussian draws."""

    def __init__(self, seed: int = 0):
        if not 0 <= seed <= MASK64:
            raise ConfigurationError(f"Seed must be an unsigned 64-bit integer, got {seed}")
        self._state = seed

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * MIX_1) & MASK64
        z = ((z ^ (z >> 27)) * MIX_2) & MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Double in [0, 1)."""
        return (self.next_u64() >> 11) * DOUBLE_UNIT

    def standard_normal(self) -> float:
        u1 = 1.0 - self.uniform()
        u2 = self.uniform()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def gauss(self, mu: float = 0.0, sigma: float = 1.0) -> float:
        return mu + sigma * self.standard_normal()
