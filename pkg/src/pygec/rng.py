"""Portable deterministic random number generation.

Dataset synthesis must be reproducible bit-for-bit from a single 64-bit
seed, independent of Python version and platform.  We therefore avoid
``random.Random`` and use two small, fully specified generators:

* splitmix64 (Vigna) for seeding and stream derivation:
      x += 0x9E3779B97F4A7C15
      z = x; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
      z = (z ^ z>>27) * 0x94D049BB133111EB
      return z ^ z>>31
* xoshiro256** (Blackman & Vigna) for the actual draws, its state
  initialised from four successive splitmix64 outputs of the seed.

Per-sentence substreams are seeded with
``substream_seed(master, i) = mix64(mix64(master) ^ mix64(i ^ GOLDEN))``
where ``mix64`` is the splitmix64 finalizer and GOLDEN is 0x9E3779B97F4A7C15,
so parallel synthesis does not depend on scheduling order.

All arithmetic is modulo 2**64.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """splitmix64 finalizer (no state increment)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Seeding generator; one 64-bit state word."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class Xoshiro256StarStar:
    """xoshiro256** with helpers for floats, ranges and sampling."""

    def __init__(self, seed: int):
        sm = SplitMix64(seed)
        self._s = [sm.next_u64() for _ in range(4)]

    def next_u64(self) -> int:
        s = self._s
        result = (_rotl((s[1] * 5) & MASK64, 7) * 9) & MASK64
        t = (s[1] << 17) & MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def random(self) -> float:
        """Uniform float in [0, 1) with 53-bit resolution."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def randbelow(self, n: int) -> int:
        """Unbiased integer in [0, n) by rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = ((1 << 64) // n) * n
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def choice(self, seq):
        if not seq:
            raise IndexError("choice from empty sequence")
        return seq[self.randbelow(len(seq))]

    def sample_indices(self, n: int, k: int) -> list[int]:
        """k distinct indices from range(n), via partial Fisher-Yates.

        Order of the returned indices is the draw order (itself random).
        """
        if k > n:
            raise ValueError("sample larger than population")
        pool = list(range(n))
        out = []
        for i in range(k):
            j = i + self.randbelow(n - i)
            pool[i], pool[j] = pool[j], pool[i]
            out.append(pool[i])
        return out


def substream_seed(master_seed: int, index: int) -> int:
    """Derive the seed of the index-th independent substream."""
    return mix64(mix64(master_seed) ^ mix64((index ^ GOLDEN) & MASK64))
