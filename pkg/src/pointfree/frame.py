"""Finite frames, frame morphisms, points and the spectra pt / pt_D.

A finite frame is a finite distributive lattice. Points (completely prime
filters) are handled through their prime elements ``p``; the filter of ``p``
is ``{a : a ≰ p}``. Filters are bitmasks over the frame's element indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

from pointfree.bits import mask_of, members
from pointfree.errors import InvalidStructure, NotDistributive, NotFrameMorphism
from pointfree.order import (
    FinLattice,
    covers,
    distributivity_witness,
    lattice_of_sets,
)
from pointfree.report import PASS, Verdict, fail
from pointfree.space import FinSpace


@dataclass(frozen=True)
class Frame:
    """A finite distributive lattice.

    ``sets`` is optional: when the frame is a family of subsets (opens of a
    space or of an MT-algebra), ``sets[i]`` is the bitmask of element ``i``.
    """

    lattice: FinLattice
    sets: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        w = distributivity_witness(self.lattice)
        if w is not None:
            raise NotDistributive(f"distributivity fails at {w}")
        if self.sets is not None and len(self.sets) != self.lattice.n:
            raise InvalidStructure("one set label per element is required")

    @classmethod
    def of_sets(cls, sets) -> Frame:
        """Frame of a union- and intersection-closed family of bitmasks."""
        ordered = sorted(set(sets), key=lambda s: (bin(s).count("1"), s))
        return cls(lattice_of_sets(ordered), tuple(ordered))

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    def le(self, a: int, b: int) -> bool:
        return self.lattice.poset.leq[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.lattice.meet[a][b]

    def join(self, a: int, b: int) -> int:
        return self.lattice.join[a][b]

    @cached_property
    def index_of_set(self) -> dict[int, int]:
        if self.sets is None:
            raise InvalidStructure("frame has no set labels")
        return {s: i for i, s in enumerate(self.sets)}

    @cached_property
    def cover_pairs(self) -> frozenset[tuple[int, int]]:
        return covers(self.lattice.poset)


@dataclass(frozen=True)
class FrameMorphism:
    source: Frame
    target: Frame
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.map) != self.source.n or any(not 0 <= v < self.target.n for v in self.map):
            raise InvalidStructure("map must be a total table into the target")

    def __call__(self, a: int) -> int:
        return self.map[a]

    def then(self, g: FrameMorphism) -> FrameMorphism:
        """``g ∘ self``."""
        return FrameMorphism(self.source, g.target, tuple(g.map[v] for v in self.map))


def identity_morphism(frame: Frame) -> FrameMorphism:
    return FrameMorphism(frame, frame, tuple(range(frame.n)))


@dataclass(frozen=True)
class FramePoint:
    """A completely prime filter, kept together with its prime element."""

    filter: int
    prime: int

    def elements(self) -> list[int]:
        return list(members(self.filter))


def heyting_implication(frame: Frame, u: int, v: int) -> int:
    """``u → v``, the join of all ``w`` with ``w ∧ u ≤ v``."""
    return frame.lattice.join_all(w for w in range(frame.n) if frame.le(frame.meet(w, u), v))


def co_implication(lat: FinLattice, c: int, d: int) -> int:
    """``c ← d``, the least ``w`` with ``d ≤ c ∨ w`` (co-Heyting difference)."""
    cands = [w for w in range(lat.n) if lat.le(d, lat.join[c][w])]
    out = lat.meet_all(cands)
    if out not in cands:
        raise NotDistributive("co-implication does not exist")
    return out


def is_frame_morphism(f: FrameMorphism) -> Verdict:
    src, dst, t = f.source, f.target, f.map
    if t[src.bottom] != dst.bottom:
        return fail(("bottom", src.bottom), "bottom not preserved")
    if t[src.top] != dst.top:
        return fail(("top", src.top), "top not preserved")
    for a, b in product(range(src.n), repeat=2):
        if t[src.meet(a, b)] != dst.meet(t[a], t[b]):
            return fail(("meet", a, b), "binary meet not preserved")
        if t[src.join(a, b)] != dst.join(t[a], t[b]):
            return fail(("join", a, b), "binary join not preserved")
    return PASS


def require_frame_morphism(f: FrameMorphism) -> None:
    v = is_frame_morphism(f)
    if not v:
        raise NotFrameMorphism(f"{v.reason}: {v.witness}")


def is_prime(frame: Frame, p: int) -> bool:
    if p == frame.top:
        return False
    return all(
        frame.le(a, p) or frame.le(b, p)
        for a, b in product(range(frame.n), repeat=2)
        if frame.le(frame.meet(a, b), p)
    )


def prime_elements(frame: Frame) -> tuple[int, ...]:
    return tuple(p for p in range(frame.n) if is_prime(frame, p))


def point_of_prime(frame: Frame, p: int) -> FramePoint:
    return FramePoint(mask_of(a for a in range(frame.n) if not frame.le(a, p)), p)


def prime_of_point(frame: Frame, filt: int) -> int:
    """``⋁(L ∖ P)``."""
    return frame.lattice.join_all(a for a in range(frame.n) if not filt >> a & 1)


def is_filter(frame: Frame, s: int) -> bool:
    if s == 0:
        return False
    for a in members(s):
        for b in range(frame.n):
            if frame.le(a, b) and not s >> b & 1:
                return False
        for b in members(s):
            if not s >> frame.meet(a, b) & 1:
                return False
    return True


def is_completely_prime_filter(frame: Frame, s: int) -> bool:
    """Finite joins suffice; the empty join is the bottom, which must be excluded."""
    if not is_filter(frame, s) or s >> frame.bottom & 1:
        return False
    return all(
        (s >> a & 1) or (s >> b & 1)
        for a, b in product(range(frame.n), repeat=2)
        if s >> frame.join(a, b) & 1
    )


def is_slicing_filter(frame: Frame, s: int) -> bool:
    """Prime filter splitting some cover pair ``a ⋖ b`` with ``b ∈ F``, ``a ∉ F``."""
    if not is_completely_prime_filter(frame, s):
        return False
    return any((s >> b & 1) and not (s >> a & 1) for a, b in frame.cover_pairs)


def is_covered(frame: Frame, p: int) -> bool:
    return any(a == p for a, _ in frame.cover_pairs)


def is_completely_meet_irreducible(frame: Frame, p: int) -> bool:
    """``p ≠ 1`` and ``p`` has a unique upper cover (finite case)."""
    if p == frame.top:
        return False
    return sum(1 for a, _ in frame.cover_pairs if a == p) == 1


@dataclass(frozen=True)
class Spectrum:
    """A space of frame points: point ``i`` is the filter of ``primes[i]``.

    ``opens_of[a]`` is the open set of points containing ``a`` (σ or δ).
    """

    frame: Frame
    primes: tuple[int, ...]
    space: FinSpace
    opens_of: tuple[int, ...]

    def point(self, i: int) -> FramePoint:
        return point_of_prime(self.frame, self.primes[i])

    @cached_property
    def index_of_prime(self) -> dict[int, int]:
        return {p: i for i, p in enumerate(self.primes)}


def _spectrum(frame: Frame, primes: tuple[int, ...]) -> Spectrum:
    opens_of = tuple(
        mask_of(i for i, p in enumerate(primes) if not frame.le(a, p)) for a in range(frame.n)
    )
    return Spectrum(frame, primes, FinSpace.from_opens(len(primes), set(opens_of)), opens_of)


def sigma_preserves(frame: Frame, spec: Spectrum) -> Verdict:
    s = spec.opens_of
    if s[frame.bottom] != 0 or s[frame.top] != (1 << len(spec.primes)) - 1:
        return fail("bounds", "σ does not preserve bounds")
    for a, b in product(range(frame.n), repeat=2):
        if s[frame.meet(a, b)] != s[a] & s[b] or s[frame.join(a, b)] != s[a] | s[b]:
            return fail((a, b), "σ does not preserve meets/joins")
    return PASS


@lru_cache(maxsize=None)
def pt_space(frame: Frame) -> Spectrum:
    """Space of completely prime filters with opens ``σ(a)``."""
    spec = _spectrum(frame, prime_elements(frame))
    v = sigma_preserves(frame, spec)
    if not v:
        raise AssertionError(f"sigma is not a frame map: {v.witness}")
    return spec


def slicing_characterizations(frame: Frame) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Primes whose point is slicing, computed three independent ways.

    1. the filter satisfies the slicing definition directly;
    2. the prime is covered;
    3. the prime is completely meet-irreducible.
    """
    primes = prime_elements(frame)
    by_def = frozenset(p for p in primes if is_slicing_filter(frame, point_of_prime(frame, p).filter))
    by_cover = frozenset(p for p in primes if is_covered(frame, p))
    by_cmi = frozenset(p for p in primes if is_completely_meet_irreducible(frame, p))
    return by_def, by_cover, by_cmi


@lru_cache(maxsize=None)
def slicing_filters(frame: Frame) -> tuple[FramePoint, ...]:
    by_def, by_cover, by_cmi = slicing_characterizations(frame)
    if not by_def == by_cover == by_cmi:
        raise AssertionError(f"slicing characterizations disagree: {by_def} {by_cover} {by_cmi}")
    return tuple(point_of_prime(frame, p) for p in sorted(by_def))


@lru_cache(maxsize=None)
def ptD_space(frame: Frame) -> Spectrum:
    """Subspace of ``pt_space`` on the slicing filters, with opens ``δ(a)``."""
    return _spectrum(frame, tuple(pt.prime for pt in slicing_filters(frame)))


def preimage_filter(f: FrameMorphism, filt: int) -> int:
    return mask_of(a for a in range(f.source.n) if filt >> f.map[a] & 1)


def is_D_morphism_frame(f: FrameMorphism) -> Verdict:
    """Preimage of every slicing filter of the target is slicing.

    The witness is the prime of the offending target filter.
    """
    require_frame_morphism(f)
    for pt in slicing_filters(f.target):
        if not is_slicing_filter(f.source, preimage_filter(f, pt.filter)):
            return fail(pt.prime, "preimage of a slicing filter is not slicing")
    return PASS


def is_frame_isomorphism(f: FrameMorphism) -> bool:
    return bool(is_frame_morphism(f)) and sorted(f.map) == list(range(f.target.n)) and f.source.n == f.target.n


def frame_morphisms(src: Frame, dst: Frame) -> list[FrameMorphism]:
    """All frame morphisms by backtracking over a linear extension of ``src``.

    Bottom and top are pinned; each new value is checked against every
    already-assigned element for meet and join preservation.
    """
    order = sorted(range(src.n), key=lambda a: bin(src.lattice.poset.down[a]).count("1"))
    table = [-1] * src.n
    out: list[FrameMorphism] = []

    def consistent(a: int) -> bool:
        va = table[a]
        for b in range(src.n):
            vb = table[b]
            if vb < 0:
                continue
            m, j = src.meet(a, b), src.join(a, b)
            if table[m] >= 0 and table[m] != dst.meet(va, vb):
                return False
            if table[j] >= 0 and table[j] != dst.join(va, vb):
                return False
            if src.le(a, b) and not dst.le(va, vb):
                return False
            if src.le(b, a) and not dst.le(vb, va):
                return False
        # pairs assigned earlier whose meet or join is ``a``
        for b in range(src.n):
            vb = table[b]
            if vb < 0:
                continue
            for c in range(b, src.n):
                vc = table[c]
                if vc < 0:
                    continue
                if src.join(b, c) == a and dst.join(vb, vc) != va:
                    return False
                if src.meet(b, c) == a and dst.meet(vb, vc) != va:
                    return False
        return True

    def go(k: int) -> None:
        if k == len(order):
            out.append(FrameMorphism(src, dst, tuple(table)))
            return
        a = order[k]
        if a == src.bottom:
            choices = [dst.bottom]
        elif a == src.top:
            choices = [dst.top]
        else:
            choices = range(dst.n)
        for v in choices:
            table[a] = v
            if consistent(a):
                go(k + 1)
            table[a] = -1

    go(0)
    return out
