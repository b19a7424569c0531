"""Pure-Python implementations of the hot loops.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same results; ``pointfree.kernels`` picks one at import time.
Elements of a powerset algebra are ints used as bitmasks.
"""

from __future__ import annotations


def or_zeta(seed: list[int], n_bits: int) -> list[int]:
    """Superset OR-transform: ``out[a] = OR of seed[b] over all b ⊆ a``.

    ``seed`` has length ``2**n_bits`` and is not modified.
    """
    out = list(seed)
    size = 1 << n_bits
    bit = 1
    while bit < size:
        for a in range(size):
            if a & bit:
                out[a] |= out[a ^ bit]
        bit <<= 1
    return out


def join_below(n_bits: int, keys: list[int], values: list[int]) -> list[int]:
    """``out[a] = OR{values[i] : keys[i] ⊆ a}`` for every ``a`` in ``2**n_bits``."""
    seed = [0] * (1 << n_bits)
    for k, v in zip(keys, values):
        seed[k] |= v
    return or_zeta(seed, n_bits)


def compose_tables(outer: list[int], inner: list[int]) -> list[int]:
    return [outer[x] for x in inner]


def meet_failure(table: list[int]) -> tuple[int, int]:
    """First pair ``(a, b)`` with ``t[a & b] != t[a] & t[b]``, or ``(-1, -1)``."""
    size = len(table)
    for a in range(size):
        ta = table[a]
        for b in range(a + 1, size):
            if table[a & b] != ta & table[b]:
                return a, b
    return -1, -1


def join_failure(table: list[int]) -> tuple[int, int]:
    """First pair ``(a, b)`` with ``t[a | b] != t[a] | t[b]``, or ``(-1, -1)``."""
    size = len(table)
    for a in range(size):
        ta = table[a]
        for b in range(a + 1, size):
            if table[a | b] != ta | table[b]:
                return a, b
    return -1, -1


def closed_families(n_points: int) -> list[int]:
    """Every topology on ``n_points`` labelled points, by brute force.

    A family of subsets is encoded as a ``2**n_points``-bit mask whose bit ``s``
    says whether subset ``s`` is open. All families containing the empty set
    and the full set are tried, and those closed under union and intersection
    are kept. Exponential in ``2**n_points``; meant for ``n_points <= 4``.
    """
    size = 1 << n_points
    full = size - 1
    if n_points == 0:
        return [1]
    free = [s for s in range(1, full)]
    m = len(free)
    found = []
    for choice in range(1 << m):
        members = [0, full]
        fam = 1 | (1 << full)
        for i in range(m):
            if choice >> i & 1:
                members.append(free[i])
                fam |= 1 << free[i]
        ok = True
        k = len(members)
        for i in range(k):
            u = members[i]
            for j in range(i + 1, k):
                v = members[j]
                if not (fam >> (u | v) & 1) or not (fam >> (u & v) & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(fam)
    return found
