"""Bitmask helpers for subsets of small carriers (at most 64 points).

A subset of {0, .., n-1} is an int whose bit i is set iff i is a member.
Families of subsets are sorted tuples of masks, which makes equality of
families plain tuple equality.
"""


def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits(mask):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_subset(a, b):
    return not (a & ~b)


def format_mask(mask, labels):
    return "{" + ",".join(labels[i] for i in bits(mask)) + "}"
