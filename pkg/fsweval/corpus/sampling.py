"""Seeded sampling that reproduces bit-for-bit across implementations.

Generator: xorshift64* (Vigna) with shifts 12, 25, 27 and output multiplier
0x2545F4914F6CDD1D. The 64-bit state is the output of one splitmix64 step
applied to the user seed (seed taken modulo 2**64):

    z = (seed + 0x9E3779B97F4A7C15) mod 2**64
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2**64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2**64
    state = z ^ (z >> 31)            (0 is replaced by 0x9E3779B97F4A7C15)

``below(bound)`` draws by rejection: outputs >= floor(2**64 / bound) * bound
are discarded, the rest are reduced modulo ``bound``. ``sample_signs`` runs a
partial Fisher-Yates shuffle: for i in 0..n-1 swap item i with item
i + below(len - i), then returns the first n items.
"""
from typing import List, Sequence, TypeVar

from fsweval.common.exceptions import SampleTooLarge


T = TypeVar("T")

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
SPLITMIX_MUL1 = 0xBF58476D1CE4E5B9
SPLITMIX_MUL2 = 0x94D049BB133111EB
XORSHIFT_MUL = 0x2545F4914F6CDD1D


def splitmix64(seed: int) -> int:
    z = (seed + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * SPLITMIX_MUL1) & MASK64
    z = ((z ^ (z >> 27)) * SPLITMIX_MUL2) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.seed = seed
        self.state = splitmix64(seed & MASK64) or GOLDEN_GAMMA

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * XORSHIFT_MUL) & MASK64

    def below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = ((1 << 64) // bound) * bound
        while True:
            value = self.next_u64()
            if value < limit:
                return value % bound


def sample_signs(corpus: Sequence[T], n: int, seed: int) -> List[T]:
    """Uniform sample of ``n`` entries without replacement."""
    if n < 0:
        raise ValueError(f"sample size must be non-negative, got {n}")
    if n > len(corpus):
        raise SampleTooLarge("sample is larger than the corpus", required=n, available=len(corpus))
    rng = XorShift64Star(seed)
    items = list(corpus)
    for i in range(n):
        j = i + rng.below(len(items) - i)
        items[i], items[j] = items[j], items[i]
    return items[:n]
