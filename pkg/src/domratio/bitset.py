"""Vertex sets as integer bitmasks.

Every set of vertices in this package is a plain ``int`` whose bit ``v``
records membership of vertex ``v``. Python integers give us arbitrary-width
bitsets with branch-free union/intersection/difference, which is all the
solvers need. Helpers here convert between masks and explicit vertex lists.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def bit(v: int) -> int:
    """Mask containing only vertex ``v``."""
    return 1 << v


def full_mask(n: int) -> int:
    """Mask containing vertices ``0..n-1``."""
    return (1 << n) - 1


def mask_of(vertices: Iterable[int]) -> int:
    """Mask containing exactly the given vertices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the vertices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_list(mask: int) -> list[int]:
    """Vertices of ``mask`` as an ascending list (the JSON wire form)."""
    return list(iter_bits(mask))


def popcount(mask: int) -> int:
    """Number of vertices in ``mask``."""
    return mask.bit_count()


def lowest_bit(mask: int) -> int:
    """Smallest vertex in a nonempty ``mask``."""
    return (mask & -mask).bit_length() - 1
