"""Finite topological spaces, continuous maps and sober maps.

Points are ``0..n-1``; a subset of points is a bitmask. Spaces keep their
open family explicitly, so non-T_0 spaces are ordinary values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

from pointfree.bits import mask_of, members, popcount
from pointfree.errors import InvalidStructure, Mismatch, NotContinuous
from pointfree.guards import MAX_ATOMS, TooLarge
from pointfree.report import PASS, Verdict, fail


@dataclass(frozen=True)
class FinSpace:
    n: int
    opens: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidStructure("negative point count")
        if self.n > MAX_ATOMS:
            raise TooLarge(f"space has {self.n} points; guard is {MAX_ATOMS}")
        full = (1 << self.n) - 1
        if 0 not in self.opens or full not in self.opens:
            raise InvalidStructure("opens must contain the empty and the full set")
        for u in self.opens:
            if u & ~full:
                raise InvalidStructure(f"open {u:b} mentions a point outside the space")
        for u, v in product(self.opens, repeat=2):
            if u | v not in self.opens:
                raise InvalidStructure(f"opens not closed under union: {u:b}, {v:b}")
            if u & v not in self.opens:
                raise InvalidStructure(f"opens not closed under intersection: {u:b}, {v:b}")

    @classmethod
    def from_opens(cls, n: int, opens) -> FinSpace:
        return cls(n, frozenset(opens))

    @classmethod
    def generated(cls, n: int, family) -> FinSpace:
        """Coarsest topology containing ``family``."""
        full = (1 << n) - 1
        opens = {0, full} | set(family)
        while True:
            fresh = {u | v for u in opens for v in opens} | {u & v for u in opens for v in opens}
            fresh -= opens
            if not fresh:
                break
            opens |= fresh
        return cls(n, frozenset(opens))

    @classmethod
    def discrete(cls, n: int) -> FinSpace:
        return cls(n, frozenset(range(1 << n)))

    @classmethod
    def indiscrete(cls, n: int) -> FinSpace:
        return cls(n, frozenset({0, (1 << n) - 1}))

    @classmethod
    def sierpinski(cls) -> FinSpace:
        """Points ``x = 0`` (closed) and ``y = 1`` (open)."""
        return cls(2, frozenset({0, 0b10, 0b11}))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def sorted_opens(self) -> tuple[int, ...]:
        return tuple(sorted(self.opens, key=lambda u: (popcount(u), u)))

    @cached_property
    def closeds(self) -> frozenset[int]:
        return frozenset(self.full ^ u for u in self.opens)

    def is_open(self, s: int) -> bool:
        return s in self.opens

    def is_closed(self, s: int) -> bool:
        return self.full ^ s in self.opens

    def interior(self, s: int) -> int:
        out = 0
        for u in self.opens:
            if u & ~s == 0:
                out |= u
        return out

    def closure(self, s: int) -> int:
        return self.full ^ self.interior(self.full ^ s)

    @cached_property
    def neighbourhood(self) -> tuple[int, ...]:
        """Smallest open set containing each point."""
        out = []
        for x in range(self.n):
            m = self.full
            for u in self.opens:
                if u >> x & 1:
                    m &= u
            out.append(m)
        return tuple(out)

    def specialization_le(self, x: int, y: int) -> bool:
        """``x ≤ y`` iff ``x`` lies in the closure of ``y``."""
        return bool(self.closure(1 << y) >> x & 1)


@dataclass(frozen=True)
class ContMap:
    source: FinSpace
    target: FinSpace
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.map) != self.source.n or any(not 0 <= y < self.target.n for y in self.map):
            raise InvalidStructure("map must be a total point table into the target")
        v = continuity(self.source, self.target, self.map)
        if not v:
            raise NotContinuous(f"preimage of open {v.witness:b} is not open")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def preimage(self, s: int) -> int:
        return preimage(self.map, s)

    def image(self, s: int) -> int:
        return mask_of(self.map[x] for x in members(s))

    def then(self, g: ContMap) -> ContMap:
        """``g ∘ self``."""
        if g.source != self.target:
            raise Mismatch("maps are not composable")
        return ContMap(self.source, g.target, tuple(g.map[y] for y in self.map))


def preimage(table, s: int) -> int:
    return mask_of(x for x, y in enumerate(table) if s >> y & 1)


def continuity(src: FinSpace, dst: FinSpace, table) -> Verdict:
    for v in dst.sorted_opens:
        if preimage(table, v) not in src.opens:
            return fail(v, "preimage of an open set is not open")
    return PASS


def identity_map(x: FinSpace) -> ContMap:
    return ContMap(x, x, tuple(range(x.n)))


def continuous_maps(src: FinSpace, dst: FinSpace) -> list[ContMap]:
    out = []
    for table in product(range(dst.n), repeat=src.n):
        if continuity(src, dst, table):
            out.append(ContMap(src, dst, tuple(table)))
    return out


def is_homeomorphism(f: ContMap) -> bool:
    if f.source.n != f.target.n or sorted(f.map) != list(range(f.target.n)):
        return False
    return all(f.image(u) in f.target.opens for u in f.source.opens)


def is_locally_closed_point(x: FinSpace, p: int) -> bool:
    """``{p} = U ∩ C`` for some open ``U`` and closed ``C``."""
    single = 1 << p
    return any(u & c == single for u in x.opens for c in x.closeds)


def locally_closed_points(x: FinSpace) -> int:
    return mask_of(p for p in range(x.n) if is_locally_closed_point(x, p))


def is_T0_space(x: FinSpace) -> bool:
    return all(
        any((u >> a & 1) != (u >> b & 1) for u in x.opens)
        for a in range(x.n)
        for b in range(a + 1, x.n)
    )


def is_TD_space(x: FinSpace) -> bool:
    return locally_closed_points(x) == x.full


def subspace(x: FinSpace, pts: int) -> tuple[FinSpace, ContMap]:
    """Subspace on ``pts`` (points renumbered in increasing order) and its inclusion."""
    keep = list(members(pts))
    pos = {p: i for i, p in enumerate(keep)}

    def restrict(u: int) -> int:
        return mask_of(pos[p] for p in members(u & pts))

    sub = FinSpace(len(keep), frozenset(restrict(u) for u in x.opens))
    return sub, ContMap(sub, x, tuple(keep))


def td_subspace(x: FinSpace) -> tuple[FinSpace, ContMap]:
    """The subspace ``X_D`` of locally closed points and the inclusion ``i_D``."""
    return subspace(x, locally_closed_points(x))


def is_locally_closed_map(f: ContMap) -> Verdict:
    """Locally closed points go to locally closed points; witness is a source point."""
    lc_dst = locally_closed_points(f.target)
    for p in members(locally_closed_points(f.source)):
        if not lc_dst >> f.map[p] & 1:
            return fail(p, "image of a locally closed point is not locally closed")
    return PASS


def disjoint_sum(x: FinSpace, y: FinSpace) -> FinSpace:
    """Points of ``x`` first, then those of ``y`` shifted by ``x.n``."""
    return FinSpace(x.n + y.n, frozenset(u | (v << x.n) for u in x.opens for v in y.opens))


def irreducible_closed_sets(x: FinSpace) -> list[int]:
    out = []
    for c in sorted(x.closeds):
        if c == 0:
            continue
        proper = [d for d in x.closeds if d != c and d & ~c == 0]
        if not any(d | e == c for d in proper for e in proper):
            out.append(c)
    return out


def is_sober(x: FinSpace) -> bool:
    """Every irreducible closed set is the closure of exactly one point."""
    return all(
        sum(1 for p in range(x.n) if x.closure(1 << p) == c) == 1 for c in irreducible_closed_sets(x)
    )


@dataclass(frozen=True)
class Soberification:
    """``sX = pt ΩX`` together with ``ΩX`` and ``λ_X``.

    Point ``i`` of ``space`` is the prime ``spectrum.primes[i]`` of ``omega``;
    ``omega.sets`` gives each frame element as an open set of ``X``.
    """

    base: FinSpace
    omega: object
    spectrum: object
    lam: ContMap

    @property
    def space(self) -> FinSpace:
        return self.spectrum.space

    def point_of_open(self, u: int) -> int:
        """Point of ``sX`` whose prime element is the open set ``u``."""
        return self.spectrum.index_of_prime[self.omega.index_of_set[u]]

    def prime_set(self, i: int) -> int:
        return self.omega.sets[self.spectrum.primes[i]]


@lru_cache(maxsize=None)
def soberify(x: FinSpace) -> Soberification:
    from pointfree.frame import Frame, pt_space

    omega = Frame.of_sets(x.opens)
    spec = pt_space(omega)
    sobered = Soberification(x, omega, spec, None)  # type: ignore[arg-type]
    lam = tuple(
        sobered.point_of_open(mask_of_union(u for u in x.opens if not u >> p & 1)) for p in range(x.n)
    )
    lam_map = ContMap(x, spec.space, lam)
    return Soberification(x, omega, spec, lam_map)


def mask_of_union(sets) -> int:
    out = 0
    for s in sets:
        out |= s
    return out


def soberification(x: FinSpace) -> FinSpace:
    return soberify(x).space


def lambda_map(x: FinSpace) -> ContMap:
    """``λ_X(x) = F_x``, the point of ``ΩX`` of opens containing ``x``."""
    return soberify(x).lam


def s_map(f: ContMap) -> ContMap:
    """``s f : sX → sY``; the prime ``P`` goes to ``⋁{V : f⁻¹(V) ⊆ P}``."""
    sx, sy = soberify(f.source), soberify(f.target)
    table = []
    for i in range(sx.space.n):
        p = sx.prime_set(i)
        q = mask_of_union(v for v in f.target.opens if f.preimage(v) & ~p == 0)
        table.append(sy.point_of_open(q))
    return ContMap(sx.space, sy.space, tuple(table))


@dataclass(frozen=True)
class SoberMap:
    """A sober map ``X ⤳ Y``: a continuous map ``X → sY``."""

    source: FinSpace
    target: FinSpace
    carrier: ContMap

    def __post_init__(self) -> None:
        if self.carrier.source != self.source or self.carrier.target != soberification(self.target):
            raise Mismatch("carrier must run from the source into the soberification of the target")


def sober_maps(x: FinSpace, y: FinSpace) -> list[SoberMap]:
    return [SoberMap(x, y, c) for c in continuous_maps(x, soberification(y))]


def powerset_MT(x: FinSpace):
    """``𝒫X``: atoms are the points, opens are ``ΩX``. The empty space gives
    the one-element algebra."""
    from pointfree.mt import MTAlgebra

    return MTAlgebra(x.n, x.opens, degenerate=(x.n == 0))


def powerset_of_map(f: ContMap):
    """``𝒫f = f⁻¹ : 𝒫Y → 𝒫X``."""
    from pointfree.mt import preimage_morphism, require_MT_morphism

    g = preimage_morphism(powerset_MT(f.target), powerset_MT(f.source), f.map)
    require_MT_morphism(g)
    return g


def epsilon(x: FinSpace) -> ContMap:
    """``ε_X : X → at 𝒫X``, ``x ↦ {x}``; checked to be a homeomorphism."""
    from pointfree.mt import at_space

    e = ContMap(x, at_space(powerset_MT(x)), tuple(range(x.n)))
    if not is_homeomorphism(e):
        raise AssertionError("ε is not a homeomorphism")
    return e
