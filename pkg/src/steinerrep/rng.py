"""SplitMix64: a tiny, fully specified 64-bit generator.

Used instead of :mod:`random` so seeded outputs stay identical across Python
versions and platforms.
"""

from __future__ import annotations

from .poly import PolyRing, Polynomial

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Integer in ``[0, n)`` by rejection sampling (no modulo bias)."""
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next()
            if x < limit:
                return x % n


# coefficient range for random forms over Q: small integers keep fractions tame
Q_COEFF_RANGE = 10


def random_coefficient(ring: PolyRing, gen: SplitMix64):
    p = ring.field.characteristic
    if p:
        return gen.below(p)
    return gen.below(2 * Q_COEFF_RANGE + 1) - Q_COEFF_RANGE


def random_linear_forms(ring: PolyRing, count: int, seed: int) -> list[Polynomial]:
    """``count`` seeded random linear forms in all variables of ``ring``."""
    if count < 1:
        raise ValueError("count must be positive")
    gen = SplitMix64(seed)
    n = ring.nvars
    forms = []
    for _ in range(count):
        coeffs = [random_coefficient(ring, gen) for _ in range(n)]
        forms.append(ring.from_terms((c, tuple(int(i == v) for i in range(n))) for v, c in enumerate(coeffs)))
    return forms


def random_combination(polys: list[Polynomial], gen: SplitMix64) -> Polynomial:
    ring = polys[0].ring
    out = ring.zero
    for f in polys:
        out = out + f.scale(random_coefficient(ring, gen))
    return out
