"""
Seeded xorshift64* generator

Streams depend only on the 64-bit seed, so every generator output can be
rebuilt from its provenance record.
"""
from typing import List, MutableSequence

MASK64 = (1 << 64) - 1


def splitmix64(seed: int) -> int:
    z = (seed + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    """
    xorshift64* with shifts 12/25/27 and multiplier 0x2545F4914F6CDD1D

    Args:
        seed: Any integer; reduced mod 2**64 and scrambled by splitmix64
    """

    def __init__(self, seed: int):
        self.seed = seed & MASK64
        self.state = splitmix64(self.seed) or 1  # the zero state is a fixed point

    def next64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection sampling"""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next64()
            if x < limit:
                return x % bound

    def bernoulli(self, p: float) -> bool:
        """True with probability p; always consumes exactly one draw"""
        return (self.next64() >> 11) < int(p * (1 << 53))

    def shuffle(self, items: MutableSequence) -> None:
        """Fisher-Yates, in place"""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, n: int) -> List[int]:
        order = list(range(n))
        self.shuffle(order)
        return order
