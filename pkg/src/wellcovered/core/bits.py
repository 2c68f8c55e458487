"""Small helpers for vertex sets encoded as Python ints."""

from __future__ import annotations

from typing import Iterable, Iterator

VertexSet = int


def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: VertexSet) -> Iterator[int]:
    """Yield the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: VertexSet) -> list[int]:
    return list(iter_bits(mask))


def popcount(mask: VertexSet) -> int:
    return mask.bit_count()


def lowest(mask: VertexSet) -> int:
    """Index of the lowest set bit; ``mask`` must be nonzero."""
    return (mask & -mask).bit_length() - 1


def is_singleton(mask: VertexSet) -> bool:
    return mask != 0 and mask & (mask - 1) == 0
