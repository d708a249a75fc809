"""Edge subsets as integer bitmasks.

Ground sets here are always 0..m-1, so a subset is an int with bit i set
for member i.  Python ints are unbounded, so the same code covers ground
sets past 64 elements without a separate wide path.
"""

from collections.abc import Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    """Bitmask with one bit per index."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_of(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))
