"""Deterministic 64-bit PRNG used by every seeded operation in the toolkit.

The generator is pinned down to exact integer update equations so that a
seed reproduces the same stream on any platform or in any reimplementation.

State initialisation (splitmix64, one step of):

    s     = (seed + 0x9E3779B97F4A7C15) mod 2^64
    z     = s
    z     = ((z XOR (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z     = ((z XOR (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    state = z XOR (z >> 31)          (if 0, replaced by 0x9E3779B97F4A7C15)

Stream (xorshift64*), per draw:

    x = state
    x = x XOR (x >> 12)
    x = (x XOR (x << 25)) mod 2^64
    x = x XOR (x >> 27)
    state = x
    output = (x * 0x2545F4914F6CDD1D) mod 2^64

Derived draws:

    u53()      = output >> 11                       (53 uniform bits)
    uniform()  = u53() / 2^53                       (float in [0, 1))
    below(n)   = (output * n) >> 64                 (integer in [0, n))
    shuffle    = Fisher-Yates, i = len-1 .. 1, j = below(i + 1)

``below`` uses the multiply-shift reduction; its bias is at most n / 2^64,
which is irrelevant at the scales this toolkit works at and keeps the
reduction trivially portable.
"""

_MASK64 = (1 << 64) - 1
_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
_MULT = 0x2545F4914F6CDD1D


def _splitmix64(x: int) -> int:
    x = (x + _SPLITMIX_GAMMA) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Stable per-index sub-seed, for fanning one master seed out to many cells."""
    return _splitmix64((seed & _MASK64) ^ _splitmix64(index & _MASK64))


class Xorshift64Star:
    """xorshift64* stream seeded through one splitmix64 step."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        state = _splitmix64(seed & _MASK64)
        self._state = state if state != 0 else _SPLITMIX_GAMMA

    def next_u64(self) -> int:
        x = self._state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK64
        x ^= x >> 27
        self._state = x
        return (x * _MULT) & _MASK64

    def next_u53(self) -> int:
        return self.next_u64() >> 11

    def uniform(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return self.next_u53() * (2.0**-53)

    def below(self, n: int) -> int:
        """Integer in [0, n) by multiply-shift reduction."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        return (self.next_u64() * n) >> 64

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
