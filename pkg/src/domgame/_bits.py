"""Bit-mask helpers for vertex sets.

A vertex set over {0, ..., n-1} is a plain Python int used as a bit mask
(bit v set <=> vertex v in the set). n is capped at 64 so every set fits
one machine word on the accelerated paths.
"""

from __future__ import annotations

from typing import Iterator

MAX_VERTICES = 64

MASK64 = (1 << 64) - 1


def full_mask(n: int) -> int:
    """All-ones mask over the first n bits."""
    return (1 << n) - 1


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit indices of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def complement(mask: int, n: int) -> int:
    """Complement within {0, ..., n-1}."""
    return ~mask & full_mask(n)


def pair_index(i: int, j: int) -> int:
    """Column-order index of the unordered pair {i, j}, i < j.

    Order: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... -- the same bit
    order used by the graph6 encoding and by labeled enumeration.
    """
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def splitmix64(state: int) -> tuple[int, int]:
    """One step of the splitmix64 generator: (output, next_state).

    Fixed-width integer arithmetic only, so streams are identical on
    every platform.
    """
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31), state


def splitmix64_below(state: int, bound: int) -> tuple[int, int]:
    """Exact uniform draw from [0, bound) via rejection sampling."""
    if bound <= 0:
        raise ValueError("bound must be positive")
    limit = (MASK64 + 1) - (MASK64 + 1) % bound
    while True:
        value, state = splitmix64(state)
        if value < limit:
            return value % bound, state
