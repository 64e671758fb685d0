"""Vertex sets as Python int bitmasks.

Bit ``v`` set means vertex ``v`` is a member.  Python ints are unbounded, so
the same code covers the word-sized fast path and larger ground sets.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex {v}")
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def full(n: int) -> int:
    return (1 << n) - 1


def compact(mask: int, keep: int) -> int:
    """Re-index ``mask`` onto the members of ``keep``, preserving order.

    The i-th smallest member of ``keep`` becomes bit i.  Bits of ``mask``
    outside ``keep`` are dropped.
    """
    out = 0
    i = 0
    for v in iter_bits(keep):
        if mask >> v & 1:
            out |= 1 << i
        i += 1
    return out


def expand(mask: int, keep: int) -> int:
    """Inverse of :func:`compact`: send bit i to the i-th member of ``keep``."""
    out = 0
    for i, v in enumerate(iter_bits(keep)):
        if mask >> i & 1:
            out |= 1 << v
    return out


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical face order: by size, then lexicographically by members."""
    return popcount(mask), members(mask)
