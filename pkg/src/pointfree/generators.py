"""Instance generators: topologies, posets, frames, MT-algebras and morphisms.

Exhaustive topologies come from specialization preorders (every finite
topology is Alexandrov); ``topologies_by_closure`` is an independent
brute-force enumerator used to cross-check the counts.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from itertools import permutations, product

from pointfree import kernels
from pointfree.errors import TooLarge
from pointfree.frame import Frame, FrameMorphism, frame_morphisms
from pointfree.guards import MAX_ATOMS, MAX_POINTS
from pointfree.mt import MTAlgebra
from pointfree.order import FinPoset, downsets, lattice_of_sets
from pointfree.space import FinSpace


def _check_points(n: int, limit: int = MAX_POINTS) -> None:
    if n > limit:
        raise TooLarge(f"{n} points exceeds the guard of {limit}")


def preorders(n: int) -> Iterator[tuple[int, ...]]:
    """Every preorder on ``n`` labelled points, as the up-set mask of each point."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in product((0, 1), repeat=len(pairs)):
        up = [1 << i for i in range(n)]
        for (i, j), b in zip(pairs, bits):
            if b:
                up[i] |= 1 << j
        # transitive iff each up-set contains the up-sets of its members
        if all(up[j] & ~up[i] == 0 for i in range(n) for j in range(n) if up[i] >> j & 1):
            yield tuple(up)


def alexandrov(up: tuple[int, ...]) -> FinSpace:
    n = len(up)
    opens = frozenset(
        s for s in range(1 << n) if all(up[i] & ~s == 0 for i in range(n) if s >> i & 1)
    )
    return FinSpace(n, opens)


def _close(n: int, family) -> frozenset[int]:
    full = (1 << n) - 1
    out = set(family) | {0, full}
    while True:
        fresh = {a | b for a in out for b in out} | {a & b for a in out for b in out}
        fresh -= out
        if not fresh:
            return frozenset(out)
        out |= fresh


def gen_spaces(n: int, mode: str = "exhaustive", seed: int = 0, count: int = 50) -> Iterator[FinSpace]:
    """Topologies on ``n`` labelled points.

    ``exhaustive`` yields each exactly once; ``random`` closes random families.
    """
    if mode == "exhaustive":
        _check_points(n)
        for up in preorders(n):
            yield alexandrov(up)
    elif mode == "random":
        _check_points(n, MAX_ATOMS)
        rng = random.Random(seed)
        for _ in range(count):
            k = rng.randint(0, n + 1)
            fam = [rng.randrange(1 << n) for _ in range(k)]
            yield FinSpace(n, _close(n, fam))
    else:
        raise ValueError(f"unknown mode {mode!r}")


def topologies_by_closure(n: int) -> list[FinSpace]:
    """Oracle: all union/intersection-closed families, found by brute force."""
    _check_points(n)
    out = []
    for fam in kernels.closed_families(n):
        out.append(FinSpace(n, frozenset(s for s in range(1 << n) if fam >> s & 1)))
    return out


def gen_mt(n: int, mode: str = "exhaustive", seed: int = 0, count: int = 50) -> Iterator[MTAlgebra]:
    """MT-algebras on ``n`` atoms: one per topology."""
    for x in gen_spaces(n, mode, seed, count):
        yield MTAlgebra(x.n, x.opens)


def all_spaces(max_points: int) -> list[FinSpace]:
    return [x for n in range(1, max_points + 1) for x in gen_spaces(n)]


def all_mt(max_atoms: int) -> list[MTAlgebra]:
    return [m for n in range(1, max_atoms + 1) for m in gen_mt(n)]


def _canonical(p: FinPoset) -> tuple:
    return min(
        tuple(p.leq[perm[i]][perm[j]] for i in range(p.n) for j in range(p.n))
        for perm in permutations(range(p.n))
    )


def gen_posets(n: int) -> list[FinPoset]:
    """Partial orders on ``n`` points, one per isomorphism class."""
    _check_points(n)
    seen = {}
    for up in preorders(n):
        if any(up[i] >> j & 1 and up[j] >> i & 1 for i in range(n) for j in range(n) if i != j):
            continue
        p = FinPoset(n, tuple(tuple(bool(up[i] >> j & 1) for j in range(n)) for i in range(n)))
        seen.setdefault(_canonical(p), p)
    return [seen[k] for k in sorted(seen)]


def downset_frame(p: FinPoset) -> Frame:
    sets = downsets(p)
    return Frame(lattice_of_sets(sets), tuple(sets))


def gen_frames(max_poset: int) -> list[Frame]:
    """Downset frames of posets with ``1..max_poset`` points, up to isomorphism."""
    return [downset_frame(p) for n in range(1, max_poset + 1) for p in gen_posets(n)]


def frame_morphism_sample(frames: list[Frame], pairs: int, seed: int) -> list[FrameMorphism]:
    """Every frame morphism between ``pairs`` ordered pairs drawn with ``seed``."""
    rng = random.Random(seed)
    all_pairs = [(a, b) for a in range(len(frames)) for b in range(len(frames))]
    chosen = all_pairs if len(all_pairs) <= pairs else sorted(rng.sample(all_pairs, pairs))
    out = []
    for a, b in chosen:
        out.extend(frame_morphisms(frames[a], frames[b]))
    return out


__all__ = [
    "preorders",
    "alexandrov",
    "gen_spaces",
    "topologies_by_closure",
    "gen_mt",
    "all_spaces",
    "all_mt",
    "gen_posets",
    "downset_frame",
    "gen_frames",
    "frame_morphism_sample",
]
