"""Bitmask helpers: a subset of ``range(n)`` is an int whose bit i marks i."""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def members(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def to_list(mask: int) -> list[int]:
    return list(members(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_atom(mask: int) -> bool:
    return mask != 0 and mask & (mask - 1) == 0


def atom_index(mask: int) -> int:
    return mask.bit_length() - 1


def subset(a: int, b: int) -> bool:
    return a & ~b == 0
