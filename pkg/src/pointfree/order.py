"""Finite posets and lattices on dense indices ``0..n-1``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from pointfree.bits import mask_of, members, popcount
from pointfree.errors import InvalidStructure, NotDistributive
from pointfree.guards import check_carrier


@dataclass(frozen=True)
class FinPoset:
    """A finite partial order given by its ``n × n`` truth table ``leq``."""

    n: int
    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        check_carrier(self.n, "poset")
        if len(self.leq) != self.n or any(len(row) != self.n for row in self.leq):
            raise InvalidStructure("leq must be an n x n table")
        r = self.leq
        for i in range(self.n):
            if not r[i][i]:
                raise InvalidStructure(f"not reflexive at {i}")
        for i, j in product(range(self.n), repeat=2):
            if i != j and r[i][j] and r[j][i]:
                raise InvalidStructure(f"not antisymmetric at ({i}, {j})")
        for i, j in product(range(self.n), repeat=2):
            if r[i][j]:
                for k in range(self.n):
                    if r[j][k] and not r[i][k]:
                        raise InvalidStructure(f"not transitive at ({i}, {j}, {k})")

    @classmethod
    def from_relation(cls, n: int, pairs) -> FinPoset:
        """Reflexive-transitive closure of ``pairs`` (which must be acyclic)."""
        rel = [[i == j for j in range(n)] for i in range(n)]
        for a, b in pairs:
            rel[a][b] = True
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    for j in range(n):
                        if rel[k][j]:
                            rel[i][j] = True
        return cls(n, tuple(tuple(row) for row in rel))

    @classmethod
    def chain(cls, n: int) -> FinPoset:
        return cls(n, tuple(tuple(i <= j for j in range(n)) for i in range(n)))

    @classmethod
    def antichain(cls, n: int) -> FinPoset:
        return cls(n, tuple(tuple(i == j for j in range(n)) for i in range(n)))

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq[a][b]

    @cached_property
    def up(self) -> tuple[int, ...]:
        return tuple(mask_of(j for j in range(self.n) if self.leq[i][j]) for i in range(self.n))

    @cached_property
    def down(self) -> tuple[int, ...]:
        return tuple(mask_of(j for j in range(self.n) if self.leq[j][i]) for i in range(self.n))

    def lower_bounds(self, s: int) -> int:
        out = (1 << self.n) - 1
        for i in members(s):
            out &= self.down[i]
        return out

    def upper_bounds(self, s: int) -> int:
        out = (1 << self.n) - 1
        for i in members(s):
            out &= self.up[i]
        return out

    def is_downset(self, s: int) -> bool:
        return all(self.down[i] & ~s == 0 for i in members(s))

    def greatest(self, s: int) -> int | None:
        for i in members(s):
            if s & ~self.down[i] == 0:
                return i
        return None

    def least(self, s: int) -> int | None:
        for i in members(s):
            if s & ~self.up[i] == 0:
                return i
        return None


@dataclass(frozen=True)
class FinLattice:
    poset: FinPoset
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    def __post_init__(self) -> None:
        p = self.poset
        n = p.n
        if n == 0:
            raise InvalidStructure("a lattice has at least one element")
        if p.least((1 << n) - 1) != self.bottom or p.greatest((1 << n) - 1) != self.top:
            raise InvalidStructure("bottom/top are not least/greatest")
        for a, b in product(range(n), repeat=2):
            if p.greatest(p.down[a] & p.down[b]) != self.meet[a][b]:
                raise InvalidStructure(f"meet table wrong at ({a}, {b})")
            if p.least(p.up[a] & p.up[b]) != self.join[a][b]:
                raise InvalidStructure(f"join table wrong at ({a}, {b})")

    @classmethod
    def from_poset(cls, p: FinPoset) -> FinLattice:
        n = p.n
        if n == 0:
            raise InvalidStructure("the empty poset is not a lattice")
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for a, b in product(range(n), repeat=2):
            m = p.greatest(p.down[a] & p.down[b])
            j = p.least(p.up[a] & p.up[b])
            if m is None or j is None:
                raise InvalidStructure(f"({a}, {b}) has no meet or join")
            meet[a][b] = m
            join[a][b] = j
        full = (1 << n) - 1
        bottom, top = p.least(full), p.greatest(full)
        if bottom is None or top is None:
            raise InvalidStructure("no bottom or top")
        return cls(p, tuple(map(tuple, meet)), tuple(map(tuple, join)), bottom, top)

    @property
    def n(self) -> int:
        return self.poset.n

    def le(self, a: int, b: int) -> bool:
        return self.poset.leq[a][b]

    def join_all(self, elems) -> int:
        out = self.bottom
        for e in elems:
            out = self.join[out][e]
        return out

    def meet_all(self, elems) -> int:
        out = self.top
        for e in elems:
            out = self.meet[out][e]
        return out

    @cached_property
    def complement(self) -> tuple[int | None, ...]:
        """A complement of each element, or ``None`` where there is none."""
        out = []
        for a in range(self.n):
            c = next(
                (b for b in range(self.n) if self.meet[a][b] == self.bottom and self.join[a][b] == self.top),
                None,
            )
            out.append(c)
        return tuple(out)


def covers(p: FinPoset) -> frozenset[tuple[int, int]]:
    out = set()
    for a, b in product(range(p.n), repeat=2):
        if p.lt(a, b):
            between = p.up[a] & p.down[b] & ~(1 << a) & ~(1 << b)
            if between == 0:
                out.add((a, b))
    return frozenset(out)


def distributivity_witness(lat: FinLattice) -> tuple[int, int, int] | None:
    m, j = lat.meet, lat.join
    for a, b, c in product(range(lat.n), repeat=3):
        if m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
            return a, b, c
    return None


def is_distributive(lat: FinLattice) -> bool:
    return distributivity_witness(lat) is None


def is_boolean(lat: FinLattice) -> bool:
    return is_distributive(lat) and all(c is not None for c in lat.complement)


def join_irreducibles(lat: FinLattice) -> frozenset[int]:
    """Elements ``j != bottom`` with ``j = a ∨ b`` only when ``j in {a, b}``."""
    w = distributivity_witness(lat)
    if w is not None:
        raise NotDistributive(f"distributivity fails at {w}")
    out = set()
    for j in range(lat.n):
        if j == lat.bottom:
            continue
        if all(lat.join[a][b] != j or j in (a, b) for a, b in product(range(lat.n), repeat=2)):
            out.add(j)
    return frozenset(out)


def lower_cover_join(lat: FinLattice, x: int) -> int:
    """Join of all elements strictly below ``x``."""
    return lat.join_all(y for y in range(lat.n) if lat.poset.lt(y, x))


def downsets(p: FinPoset) -> list[int]:
    """All down-closed subsets as bitmasks, sorted by (size, mask)."""
    check_carrier(1 << p.n, "downset enumeration")
    found = [s for s in range(1 << p.n) if p.is_downset(s)]
    found.sort(key=lambda s: (popcount(s), s))
    return found


def lattice_of_sets(sets: list[int]) -> FinLattice:
    """Lattice of the given subsets under inclusion (must form a lattice)."""
    check_carrier(len(sets), "lattice")
    n = len(sets)
    leq = tuple(tuple(sets[i] & ~sets[j] == 0 for j in range(n)) for i in range(n))
    return FinLattice.from_poset(FinPoset(n, leq))


def downset_lattice(p: FinPoset) -> FinLattice:
    return lattice_of_sets(downsets(p))


def macneille_completion(p: FinPoset) -> tuple[FinLattice, tuple[int, ...]]:
    """Lattice of cuts of ``p`` and the embedding ``x ↦ ↓x``.

    A cut is stored by its lower half ``A``; the closed lower halves are the
    intersections of principal downsets (the full carrier being the empty
    intersection), and for each of them ``A = lower(upper(A))`` is asserted.
    """
    full = (1 << p.n) - 1
    closed = {full} | {p.down[b] for b in range(p.n)}
    while True:
        fresh = {s & t for s in closed for t in closed} - closed
        if not fresh:
            break
        closed |= fresh
    cuts = sorted(closed, key=lambda s: (popcount(s), s))
    for a in cuts:
        if p.lower_bounds(p.upper_bounds(a)) != a:
            raise AssertionError(f"{a:b} is not a cut")
    lat = lattice_of_sets(cuts)
    index = {a: i for i, a in enumerate(cuts)}
    embedding = tuple(index[p.down[x]] for x in range(p.n))
    return lat, embedding


def poset_of_lattice(lat: FinLattice) -> FinPoset:
    return lat.poset


def is_order_embedding(p: FinPoset, q: FinPoset, table) -> bool:
    return all(p.leq[a][b] == q.leq[table[a]][table[b]] for a, b in product(range(p.n), repeat=2))


def hasse_dot(p: FinPoset, labels=None, name: str = "hasse") -> str:
    """Graphviz source of the Hasse diagram (edges are the cover pairs)."""
    lab = labels or [str(i) for i in range(p.n)]
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i in range(p.n):
        lines.append(f'  n{i} [label="{lab[i]}"];')
    for a, b in sorted(covers(p)):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
