"""Finite MT-algebras: the powerset of an atom set with a subframe of opens.

An element is a bitmask over the atoms. ``□a`` is the union of the opens
below ``a`` and ``◇a = ¬□¬a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import NamedTuple

from pointfree import kernels
from pointfree.bits import atom_index, is_atom, mask_of, members, popcount
from pointfree.errors import (
    InvalidStructure,
    Mismatch,
    NotMTMorphism,
    NotSlicing,
    NotT0,
)
from pointfree.frame import Frame, is_slicing_filter, pt_space, ptD_space
from pointfree.guards import MAX_ATOMS, TooLarge
from pointfree.report import PASS, Verdict, fail
from pointfree.space import ContMap, FinSpace, subspace


def _close(family: set[int], ops) -> frozenset[int]:
    out = set(family)
    while True:
        fresh = {op(a, b) for op in ops for a in out for b in out} - out
        if not fresh:
            return frozenset(out)
        out |= fresh


def _or(a: int, b: int) -> int:
    return a | b


def _and(a: int, b: int) -> int:
    return a & b


class Families(NamedTuple):
    opens: frozenset[int]
    closed: frozenset[int]
    lc: frozenset[int]
    cons: frozenset[int]
    saturated: frozenset[int]
    wlc: frozenset[int]


@dataclass(frozen=True)
class MTAlgebra:
    """Atoms ``0..n-1`` and a family of opens closed under ``|`` and ``&``.

    ``degenerate=True`` admits ``n = 0`` (the one-element algebra), which only
    arises as a reflection target.
    """

    n: int
    opens: frozenset[int]
    degenerate: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if self.n > MAX_ATOMS:
            raise TooLarge(f"{self.n} atoms; guard is {MAX_ATOMS}")
        if self.n < 0 or (self.n == 0 and not self.degenerate):
            raise InvalidStructure("an MT-algebra needs at least one atom (0 != 1)")
        top = self.top
        if 0 not in self.opens or top not in self.opens:
            raise InvalidStructure("opens must contain 0 and 1")
        for u in self.opens:
            if u & ~top:
                raise InvalidStructure(f"open {u:b} mentions an atom outside the algebra")
        for u in self.opens:
            for v in self.opens:
                if u | v not in self.opens or u & v not in self.opens:
                    raise InvalidStructure(f"opens not a subframe at {u:b}, {v:b}")
        w = kuratowski_failure(self)
        if w is not None:
            raise InvalidStructure(f"interior fails a Kuratowski axiom at {w}")

    @classmethod
    def of(cls, n: int, opens) -> MTAlgebra:
        return cls(n, frozenset(opens))

    @property
    def top(self) -> int:
        return (1 << self.n) - 1

    @property
    def size(self) -> int:
        return 1 << self.n

    def neg(self, a: int) -> int:
        return self.top ^ a

    @cached_property
    def box_table(self) -> tuple[int, ...]:
        ops = sorted(self.opens)
        return tuple(kernels.join_below(self.n, ops, ops))

    @cached_property
    def diamond_table(self) -> tuple[int, ...]:
        box, top = self.box_table, self.top
        return tuple(top ^ box[top ^ a] for a in range(self.size))

    def box(self, a: int) -> int:
        return self.box_table[a]

    def diamond(self, a: int) -> int:
        return self.diamond_table[a]

    @cached_property
    def sorted_opens(self) -> tuple[int, ...]:
        return tuple(sorted(self.opens, key=lambda u: (popcount(u), u)))

    @cached_property
    def families(self) -> Families:
        return _families(self)


def kuratowski_failure(m: MTAlgebra):
    box = m.box_table
    top = m.top
    if box[top] != top:
        return ("□1 = 1", top)
    for a in range(m.size):
        if box[a] & ~a:
            return ("□a ≤ a", a)
        if box[box[a]] != box[a]:
            return ("□a ≤ □□a", a)
    a, b = kernels.meet_failure(list(box))
    if a >= 0:
        return ("□(a∧b) = □a∧□b", (a, b))
    return None


def interior(m: MTAlgebra, a: int) -> int:
    return m.box(a)


def closure(m: MTAlgebra, a: int) -> int:
    return m.diamond(a)


def _families(m: MTAlgebra) -> Families:
    top = m.top
    opens = m.opens
    closed = frozenset(top ^ u for u in opens)
    lc = frozenset(u & c for u in opens for c in closed)
    two_sided = frozenset(m.box(b) & m.diamond(c) for b in range(m.size) for c in range(m.size))
    one_sided = frozenset(u & m.diamond(x) for u in opens for x in range(m.size))
    if not lc == two_sided == one_sided:
        raise AssertionError("locally closed elements disagree across definitions")
    cons = _close(set(lc), [_or])
    generated = _close(set(opens) | {top ^ u for u in opens}, [_or, _and])
    if cons != generated:
        raise AssertionError("join-closure of LC differs from the boolean algebra generated by opens")
    saturated = _close(set(opens), [_and])
    wlc = frozenset(s & c for s in saturated for c in closed)
    return Families(opens, closed, lc, cons, saturated, wlc)


def element_families(m: MTAlgebra) -> Families:
    return m.families


def _join_generates(m: MTAlgebra, family: frozenset[int]) -> bool:
    fam = sorted(family)
    below = kernels.join_below(m.n, fam, fam)
    by_joins = all(below[a] == a for a in range(m.size))
    by_atoms = all(1 << i in family for i in range(m.n))
    if by_joins != by_atoms:
        raise AssertionError("join generation and atom membership disagree")
    return by_joins


def is_TD(m: MTAlgebra) -> bool:
    return _join_generates(m, m.families.lc)


def is_T0(m: MTAlgebra) -> bool:
    return _join_generates(m, m.families.wlc)


def is_spatial(m: MTAlgebra) -> bool:
    """Always true: the carrier is a finite powerset, so η is injective."""
    return True


def eta(m: MTAlgebra, a: int) -> int:
    """Atoms below ``a``; with atoms as bits this is ``a`` itself."""
    return mask_of(i for i in range(m.n) if a >> i & 1)


def at_space(m: MTAlgebra) -> FinSpace:
    """Atoms topologized by ``η[𝒪M]``."""
    return FinSpace(m.n, frozenset(eta(m, u) for u in m.opens))


def lc_atoms(m: MTAlgebra) -> int:
    lc = m.families.lc
    return mask_of(i for i in range(m.n) if 1 << i in lc)


def atD_space(m: MTAlgebra) -> tuple[FinSpace, ContMap]:
    """Subspace of locally closed atoms, with its inclusion into ``at_space``."""
    return subspace(at_space(m), lc_atoms(m))


@lru_cache(maxsize=None)
def opens_frame(m: MTAlgebra) -> Frame:
    return Frame.of_sets(m.opens)


def theta_prime_of(m: MTAlgebra, frame: Frame, x: int) -> int:
    """Prime element of ``↑x ∩ 𝒪M``: the union of opens missing atom ``x``."""
    out = 0
    for u in m.opens:
        if not u >> x & 1:
            out |= u
    return frame.index_of_set[out]


def theta(m: MTAlgebra) -> ContMap:
    """``θ : at M → pt 𝒪M``, ``x ↦ ↑x ∩ 𝒪M``."""
    frame = opens_frame(m)
    spec = pt_space(frame)
    table = []
    for x in range(m.n):
        p = theta_prime_of(m, frame, x)
        filt = mask_of(i for i, u in enumerate(frame.sets) if u >> x & 1)
        if spec.point(spec.index_of_prime[p]).filter != filt:
            raise AssertionError("filter of θ(x) does not match its prime")
        table.append(spec.index_of_prime[p])
    return ContMap(at_space(m), spec.space, tuple(table))


def theta_prime(m: MTAlgebra) -> ContMap:
    """``θ′ : at_D M → pt_D 𝒪M``, the restriction and corestriction of ``θ``.

    Raises ``Mismatch`` when a locally closed atom lands outside pt_D.
    """
    frame = opens_frame(m)
    spec_d = ptD_space(frame)
    sub, incl = atD_space(m)
    table = []
    for x in incl.map:
        p = theta_prime_of(m, frame, x)
        if p not in spec_d.index_of_prime:
            raise Mismatch(f"θ sends locally closed atom {x} outside pt_D")
        table.append(spec_d.index_of_prime[p])
    return ContMap(sub, spec_d.space, tuple(table))


def witness_atom(m: MTAlgebra, filt) -> int:
    """Atom ``x = ⋀F ∧ ⋀{¬u : u ∈ 𝒪M ∖ F}`` for a slicing filter ``F`` of opens.

    ``filt`` is an iterable of open sets. The returned value is an atom index;
    atomicity, ``F = ↑x ∩ 𝒪M`` and local closedness are re-verified.
    """
    if not is_T0(m):
        raise NotT0("witness atoms need a T_0 algebra")
    fam = frozenset(filt)
    frame = opens_frame(m)
    if not fam <= m.opens:
        raise NotSlicing("filter contains a non-open element")
    fmask = mask_of(frame.index_of_set[u] for u in fam)
    if not is_slicing_filter(frame, fmask):
        raise NotSlicing("not a slicing filter of the opens")
    x = m.top
    for u in m.opens:
        x &= u if u in fam else m.top ^ u
    if not is_atom(x):
        raise AssertionError(f"witness {x:b} is not an atom")
    if frozenset(u for u in m.opens if u & x) != fam:
        raise AssertionError("filter is not the trace of the witness atom")
    if x not in m.families.lc:
        raise AssertionError("witness atom is not locally closed")
    return atom_index(x)


def atom_T0_characterization(m: MTAlgebra, check_hypothesis: bool = True) -> Verdict:
    """For every element ``x``: atom iff (``x ≤ u`` iff ``x ≰ ¬u``) for all opens ``u``.

    The witness is the first element where the two sides differ.
    """
    if check_hypothesis and not is_T0(m):
        raise NotT0("the characterization assumes a T_0 algebra")
    for x in range(m.size):
        rhs = all(((x & ~u) == 0) == (x & u != 0) for u in m.opens)
        if rhs != is_atom(x):
            return fail(x, "atomicity and the open-trace condition differ")
    return PASS


@dataclass(frozen=True)
class MTMorphism:
    """``f : M → N`` as a table indexed by the elements of ``M``."""

    source: MTAlgebra
    target: MTAlgebra
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.map) != self.source.size or any(v & ~self.target.top for v in self.map):
            raise InvalidStructure("map must be a total table into the target")

    def __call__(self, a: int) -> int:
        return self.map[a]

    def then(self, g: MTMorphism) -> MTMorphism:
        """``g ∘ self``."""
        if g.source != self.target:
            raise Mismatch("morphisms are not composable")
        return MTMorphism(self.source, g.target, tuple(g.map[v] for v in self.map))


def identity_mt(m: MTAlgebra) -> MTMorphism:
    return MTMorphism(m, m, tuple(range(m.size)))


def preimage_morphism(m: MTAlgebra, n: MTAlgebra, table) -> MTMorphism:
    """``a ↦ {y : table[y] ∈ a}`` for a function ``atoms(N) → atoms(M)``."""
    keys = [1 << table[y] for y in range(n.n)]
    vals = [1 << y for y in range(n.n)]
    return MTMorphism(m, n, tuple(kernels.join_below(m.n, keys, vals)))


def is_MT_morphism(f: MTMorphism) -> Verdict:
    m, n, t = f.source, f.target, list(f.map)
    if t[0] != 0 or t[m.top] != n.top:
        return fail("bounds", "bounds not preserved")
    a, b = kernels.meet_failure(t)
    if a >= 0:
        return fail((a, b), "meet not preserved")
    a, b = kernels.join_failure(t)
    if a >= 0:
        return fail((a, b), "join not preserved")
    for a in range(m.size):
        if t[m.box(a)] & ~n.box(t[a]):
            return fail(a, "h(□a) ≰ □h(a)")
    return PASS


def require_MT_morphism(f: MTMorphism) -> None:
    v = is_MT_morphism(f)
    if not v:
        raise NotMTMorphism(f"{v.reason}: {v.witness}")


def left_adjoint(f: MTMorphism) -> tuple[int, ...]:
    """``f*(x) = ⋀{a : x ≤ f(a)}``, tabulated over the target; adjunction checked."""
    m, n = f.source, f.target
    out = []
    for x in range(n.size):
        acc = m.top
        for a in range(m.size):
            if x & ~f.map[a] == 0:
                acc &= a
        out.append(acc)
    for x in range(n.size):
        for a in range(m.size):
            if (out[x] & ~a == 0) != (x & ~f.map[a] == 0):
                raise AssertionError(f"adjunction fails at ({x}, {a})")
    return tuple(out)


def dual_map(f: MTMorphism) -> ContMap:
    """``f*`` restricted to atoms, as a continuous map ``at N → at M``."""
    require_MT_morphism(f)
    adj = left_adjoint(f)
    table = []
    for y in range(f.target.n):
        v = adj[1 << y]
        if not is_atom(v):
            raise AssertionError("left adjoint does not send atoms to atoms")
        table.append(atom_index(v))
    return ContMap(at_space(f.target), at_space(f.source), tuple(table))


def mt_morphisms(m: MTAlgebra, n: MTAlgebra) -> list[MTMorphism]:
    """Every MT-morphism ``M → N``, as preimage maps of point functions."""
    from itertools import product

    out = []
    for table in product(range(m.n), repeat=n.n):
        f = preimage_morphism(m, n, table)
        if is_MT_morphism(f):
            out.append(f)
    return out


@dataclass(frozen=True)
class ConsAlgebra:
    """``Cons M`` as an MT-algebra on its own atoms (blocks).

    ``embed[s]`` is the element of ``M`` made of the blocks in ``s``;
    ``index`` inverts ``embed``.
    """

    base: MTAlgebra
    blocks: tuple[int, ...]
    algebra: MTAlgebra
    embed: tuple[int, ...]

    @cached_property
    def index(self) -> dict[int, int]:
        return {v: s for s, v in enumerate(self.embed)}


@lru_cache(maxsize=None)
def cons_algebra(m: MTAlgebra) -> ConsAlgebra:
    cons = m.families.cons
    blocks = tuple(
        sorted(
            (c for c in cons if c and not any(d and d != c and d & ~c == 0 for d in cons)),
            key=lambda c: c & -c,
        )
    )
    k = len(blocks)
    embed = tuple(
        sum(blocks[i] for i in range(k) if s >> i & 1) for s in range(1 << k)
    )
    if set(embed) != set(cons):
        raise AssertionError("blocks do not generate Cons M")
    index = {v: s for s, v in enumerate(embed)}
    alg = MTAlgebra(k, frozenset(index[u] for u in m.opens))
    return ConsAlgebra(m, blocks, alg, embed)


def is_order_isomorphic(m: MTAlgebra, n: MTAlgebra) -> bool:
    """Whether some atom bijection carries the opens of ``m`` onto those of ``n``."""
    from itertools import permutations

    if m.n != n.n or len(m.opens) != len(n.opens):
        return False
    for perm in permutations(range(n.n)):
        if frozenset(mask_of(perm[i] for i in members(u)) for u in m.opens) == n.opens:
            return True
    return False


def powerset_of_space(x: FinSpace) -> MTAlgebra:
    return MTAlgebra(x.n, x.opens)


def fixture(name: str) -> MTAlgebra:
    """Named small algebras: ``"2"``, ``"M4"``, ``"SIER"``."""
    table = {
        "2": (1, {0, 1}),
        "M4": (2, {0, 3}),
        "SIER": (2, {0, 0b10, 0b11}),
    }
    if name not in table:
        raise KeyError(name)
    n, opens = table[name]
    return MTAlgebra(n, frozenset(opens))


__all__ = [
    "MTAlgebra",
    "MTMorphism",
    "ConsAlgebra",
    "Families",
    "interior",
    "closure",
    "element_families",
    "is_T0",
    "is_TD",
    "is_spatial",
    "eta",
    "at_space",
    "atD_space",
    "lc_atoms",
    "theta",
    "theta_prime",
    "witness_atom",
    "atom_T0_characterization",
    "is_MT_morphism",
    "left_adjoint",
    "dual_map",
    "mt_morphisms",
    "preimage_morphism",
    "identity_mt",
    "cons_algebra",
    "opens_frame",
    "is_order_isomorphic",
    "fixture",
]
