"""Helpers for vertex sets stored as integer bitsets."""


def popcount(mask):
    return bin(mask).count('1')


def iter_bits(mask):
    """Yields the indices of the set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask):
    return (mask & -mask).bit_length() - 1


def to_mask(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def full_mask(n):
    return (1 << n) - 1
