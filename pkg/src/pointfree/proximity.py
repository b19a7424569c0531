"""Cons-below relations and proximity morphisms between MT-algebras.

A ``ProxMap`` is any total table ``M → N``; ``is_proximity_morphism``
decides the four axioms (opens go by a frame map; binary meets; finite
joins of locally closed elements; determination by locally closed
elements) and returns witnesses instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from pointfree import kernels
from pointfree.errors import (
    InternalInconsistency,
    InvalidStructure,
    NotMTMorphism,
    NotSubalgebra,
    SourceTargetMismatch,
)
from pointfree.frame import frame_morphisms, pt_space
from pointfree.guards import check_candidates
from pointfree.mt import (
    MTAlgebra,
    MTMorphism,
    is_MT_morphism,
    is_TD,
    opens_frame,
)
from pointfree.report import PASS, Verdict, fail


@dataclass(frozen=True)
class ProxMap:
    source: MTAlgebra
    target: MTAlgebra
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.map) != self.source.size or any(v & ~self.target.top for v in self.map):
            raise InvalidStructure("map must be a total table into the target")

    def __call__(self, a: int) -> int:
        return self.map[a]

    @classmethod
    def from_lc(cls, source: MTAlgebra, target: MTAlgebra, values) -> ProxMap:
        """Extend values given on locally closed elements by ``a ↦ ⋁{f(x) : x ≤ a}``."""
        vals = dict(values)
        lc = sorted(source.families.lc)
        if set(vals) != set(lc):
            raise InvalidStructure("values must be given on exactly the locally closed elements")
        return cls(source, target, tuple(kernels.join_below(source.n, lc, [vals[x] for x in lc])))

    @cached_property
    def report(self) -> ProxReport:
        return is_proximity_morphism(self)

    @property
    def verified(self) -> bool:
        return self.report.ok


@dataclass(frozen=True)
class ProxReport:
    p1: Verdict
    p2: Verdict
    p3: Verdict
    p4: Verdict

    @property
    def ok(self) -> bool:
        return bool(self.p1 and self.p2 and self.p3 and self.p4)

    def passed(self) -> tuple[str, ...]:
        return tuple(k for k in ("p1", "p2", "p3", "p4") if getattr(self, k))

    def as_dict(self) -> dict:
        return {
            k: {"ok": v.ok, "witness": v.witness, "reason": v.reason}
            for k, v in (("P1", self.p1), ("P2", self.p2), ("P3", self.p3), ("P4", self.p4))
        }


def check_p1(f: ProxMap) -> Verdict:
    m, n, t = f.source, f.target, f.map
    for u in m.sorted_opens:
        if t[u] not in n.opens:
            return fail(u, "an open goes to a non-open")
    if t[0] != 0 or t[m.top] != n.top:
        return fail("bounds", "bounds of the opens not preserved")
    for u, v in product(m.sorted_opens, repeat=2):
        if t[u & v] != t[u] & t[v]:
            return fail((u, v), "meet of opens not preserved")
        if t[u | v] != t[u] | t[v]:
            return fail((u, v), "join of opens not preserved")
    return PASS


def check_p2(f: ProxMap) -> Verdict:
    a, b = kernels.meet_failure(list(f.map))
    if a >= 0:
        return fail((a, b), "binary meet not preserved")
    return PASS


def check_p3(f: ProxMap) -> Verdict:
    """Every finite ``S ⊆ LC``: reachable pairs ``(⋁S, ⋁f[S])`` are explored breadth-first.

    The witness is a pair ``(⋁S, ⋁f[S])`` with ``f(⋁S) ≠ ⋁f[S]``.
    """
    t = f.map
    lc = sorted(f.source.families.lc)
    seen = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        nxt = []
        for j, fj in frontier:
            if t[j] != fj:
                return fail((j, fj), "join of locally closed elements not preserved")
            for x in lc:
                pair = (j | x, fj | t[x])
                if pair not in seen:
                    seen.add(pair)
                    nxt.append(pair)
        frontier = nxt
    return PASS


def p4_table(f: ProxMap) -> list[int]:
    lc = sorted(f.source.families.lc)
    return kernels.join_below(f.source.n, lc, [f.map[x] for x in lc])


def check_p4(f: ProxMap) -> Verdict:
    for a, v in enumerate(p4_table(f)):
        if f.map[a] != v:
            return fail(a, "value not determined by locally closed elements below")
    return PASS


def is_proximity_morphism(f: ProxMap) -> ProxReport:
    return ProxReport(check_p1(f), check_p2(f), check_p3(f), check_p4(f))


class ConsBelow:
    """``a ≺ b`` iff some ``c ∈ B`` has ``a ≤ c ≤ b`` (``B`` defaults to ``Cons M``)."""

    def __init__(self, algebra: MTAlgebra, sub: frozenset[int] | None = None) -> None:
        self.algebra = algebra
        self.sub = algebra.families.cons if sub is None else frozenset(sub)
        # least element of B above a; B is meet-closed, so it exists
        hull = []
        for a in range(algebra.size):
            acc = algebra.top
            for c in self.sub:
                if a & ~c == 0:
                    acc &= c
            hull.append(acc)
        self.hull = tuple(hull)

    def holds(self, a: int, b: int) -> bool:
        return self.hull[a] & ~b == 0

    @cached_property
    def relation(self) -> frozenset[tuple[int, int]]:
        size = self.algebra.size
        return frozenset((a, b) for a in range(size) for b in range(size) if self.holds(a, b))


def cons_below(m: MTAlgebra) -> ConsBelow:
    return ConsBelow(m)


def _require_boolean_subalgebra(m: MTAlgebra, sub: frozenset[int]) -> None:
    if 0 not in sub or m.top not in sub:
        raise NotSubalgebra("subalgebra must contain 0 and 1")
    for a in sub:
        if m.top ^ a not in sub:
            raise NotSubalgebra(f"not closed under complement at {a}")
        for b in sub:
            if a | b not in sub or a & b not in sub:
                raise NotSubalgebra(f"not closed under meet/join at ({a}, {b})")


def check_S_axioms(m: MTAlgebra, sub=None) -> dict[str, Verdict]:
    b = m.families.cons if sub is None else frozenset(sub)
    _require_boolean_subalgebra(m, b)
    rel = ConsBelow(m, b)
    top = m.top
    pairs = sorted(rel.relation)
    out: dict[str, Verdict] = {}

    out["S1"] = PASS if rel.holds(top, top) else fail((top, top), "1 is not below 1")

    out["S2"] = next((fail(p, "related pair is not ordered") for p in pairs if p[0] & ~p[1]), PASS)

    # a ≤ a' ≺ c' ≤ c follows from one-bit steps on each side
    s3 = PASS
    for a, c in pairs:
        for i in range(m.n):
            bit = 1 << i
            if a & bit and not rel.holds(a ^ bit, c):
                s3 = fail((a ^ bit, c), "not closed downward on the left")
                break
            if not c & bit and not rel.holds(a, c | bit):
                s3 = fail((a, c | bit), "not closed upward on the right")
                break
        if not s3:
            break
    out["S3"] = s3

    by_left: dict[int, list[int]] = {}
    for a, c in pairs:
        by_left.setdefault(a, []).append(c)
    s4 = PASS
    for a, cs in by_left.items():
        for c, d in product(cs, repeat=2):
            if not rel.holds(a, c & d):
                s4 = fail((a, c, d), "not closed under meets on the right")
                break
        if not s4:
            break
    out["S4"] = s4

    out["S5"] = next(
        (fail((a, c), "negation does not reverse the relation") for a, c in pairs if not rel.holds(top ^ c, top ^ a)),
        PASS,
    )

    out["S6"] = next(
        (
            fail((a, c), "no interpolant in the subalgebra")
            for a, c in pairs
            if not any(rel.holds(a, x) and rel.holds(x, c) for x in b)
        ),
        PASS,
    )
    return out


def is_deVries(m: MTAlgebra) -> bool:
    """``a = ⋁{c : c ≺ a}`` for every ``a``; asserted equal to ``is_TD``."""
    rel = cons_below(m)
    ok = all(
        a == _join(c for c in range(m.size) if rel.holds(c, a))
        for a in range(m.size)
    )
    if ok != is_TD(m):
        raise InternalInconsistency("de Vries condition and T_D disagree")
    return ok


def _join(elems) -> int:
    out = 0
    for e in elems:
        out |= e
    return out


@dataclass(frozen=True)
class DerivedReport:
    negation: Verdict
    coframe: Verdict
    lc_to_lc: Verdict
    boolean_on_cons: Verdict

    @property
    def ok(self) -> bool:
        return bool(self.negation and self.coframe and self.lc_to_lc and self.boolean_on_cons)


def derived_properties(f: ProxMap) -> DerivedReport:
    """Consequences that every proximity morphism must satisfy."""
    m, n, t = f.source, f.target, f.map
    fam_m, fam_n = m.families, n.families

    neg = PASS
    for x in sorted(fam_m.opens | fam_m.closed):
        if t[m.top ^ x] != n.top ^ t[x]:
            neg = fail(x, "negation of an open or closed element not preserved")
            break

    cof = PASS
    closed = sorted(fam_m.closed)
    for c in closed:
        if t[c] not in fam_n.closed:
            cof = fail(c, "a closed element goes to a non-closed one")
            break
    if cof:
        for c, d in product(closed, repeat=2):
            if t[c & d] != t[c] & t[d] or t[c | d] != t[c] | t[d]:
                cof = fail((c, d), "closed meets/joins not preserved")
                break

    lcv = next((fail(x, "locally closed element leaves LC") for x in sorted(fam_m.lc) if t[x] not in fam_n.lc), PASS)

    boo = PASS
    cons = sorted(fam_m.cons)
    for a in cons:
        if t[a] not in fam_n.cons:
            boo = fail(a, "constructible element leaves Cons")
            break
        if t[m.top ^ a] != n.top ^ t[a]:
            boo = fail(a, "complement in Cons not preserved")
            break
    if boo:
        for a, b in product(cons, repeat=2):
            if t[a | b] != t[a] | t[b] or t[a & b] != t[a] & t[b]:
                boo = fail((a, b), "Cons meets/joins not preserved")
                break

    rep = DerivedReport(neg, cof, lcv, boo)
    if f.verified and not rep.ok:
        raise InternalInconsistency(f"derived property fails for a verified morphism: {rep}")
    return rep


@dataclass(frozen=True)
class FormulationReport:
    preconditions: bool
    p3: bool
    two_pair: bool
    negated: bool

    @property
    def equivalent(self) -> bool:
        return self.p3 == self.two_pair == self.negated


def equivalent_formulations(f: ProxMap) -> FormulationReport:
    """Evaluate P3, the two-pair condition and the negated condition.

    All three are computed even when P1, P2 or P4 fail; ``preconditions``
    records whether the equivalence is actually promised.
    """
    m, n, t = f.source, f.target, f.map
    pre = bool(check_p1(f) and check_p2(f) and check_p4(f))
    rm, rn = cons_below(m), cons_below(n)
    pairs = sorted(rm.relation)

    two_pair = True
    for (a1, b1), (a2, b2) in product(pairs, repeat=2):
        if not rn.holds(t[a1 | a2], t[b1] | t[b2]):
            two_pair = False
            break

    negated = all(rn.holds(n.top ^ t[m.top ^ a], t[b]) for a, b in pairs)
    return FormulationReport(pre, bool(check_p3(f)), two_pair, negated)


def star(g: ProxMap, f: ProxMap) -> ProxMap:
    """``(g ⋆ f)(a) = ⋁{g(f(x)) : x ∈ LC, x ≤ a}``."""
    if f.target != g.source:
        raise SourceTargetMismatch("g ⋆ f needs f's target to be g's source")
    lc = sorted(f.source.families.lc)
    vals = [g.map[f.map[x]] for x in lc]
    return ProxMap(f.source, g.target, tuple(kernels.join_below(f.source.n, lc, vals)))


def identity_prox(m: MTAlgebra) -> ProxMap:
    """``1_M(a) = ⋁{x ∈ LC : x ≤ a}``."""
    lc = sorted(m.families.lc)
    return ProxMap(m, m, tuple(kernels.join_below(m.n, lc, lc)))


def restrict_to_opens(f: ProxMap) -> dict[int, int]:
    return {u: f.map[u] for u in f.source.sorted_opens}


@dataclass(frozen=True)
class Classification:
    iso: bool
    mono: bool
    epi: bool
    injective: bool
    surjective: bool
    order_iso: bool


def _boolean_closure(top: int, gens) -> frozenset[int]:
    out = {0, top} | set(gens) | {top ^ g for g in gens}
    while True:
        fresh = {a | b for a in out for b in out} | {a & b for a in out for b in out}
        fresh |= {top ^ a for a in out}
        fresh -= out
        if not fresh:
            return frozenset(out)
        out |= fresh


def _spectrum_map_injective(f: ProxMap) -> bool:
    """Whether ``pt(𝒪f) : pt 𝒪N → pt 𝒪M`` is injective."""
    fm, fn = opens_frame(f.source), opens_frame(f.target)
    spec_n = pt_space(fn)
    images = set()
    for p in spec_n.primes:
        prime_set = fn.sets[p]
        # preimage filter {u : f(u) ⊄ p} has prime ⋃{u : f(u) ⊆ p}
        q = _join(u for u in f.source.opens if f.map[u] & ~prime_set == 0)
        images.add(fm.index_of_set[q])
    return len(images) == len(spec_n.primes)


def classify_morphism(f: ProxMap) -> Classification:
    """Iso/mono/epi read off the restriction to opens.

    Epi means: every open of ``N`` lies in the boolean subalgebra generated by
    the image of the opens of ``M``; this is cross-checked against
    injectivity of the induced map on points.
    """
    m, n, t = f.source, f.target, f.map
    on_opens = [t[u] for u in m.sorted_opens]
    mono = len(set(on_opens)) == len(on_opens)
    gen = _boolean_closure(n.top, on_opens)
    epi = all(v in gen for v in n.opens)
    if epi != _spectrum_map_injective(f):
        raise InternalInconsistency("epi criteria disagree")
    iso = mono and set(on_opens) == set(n.opens)
    injective = len(set(t)) == len(t)
    surjective = set(t) == set(range(n.size))
    order_iso = injective and surjective and all(
        (a & ~b == 0) == (t[a] & ~t[b] == 0) for a in range(m.size) for b in range(m.size)
    )
    if is_TD(m) and is_TD(n):
        # an order-isomorphism is a proximity iso exactly when its inverse is a proximity map
        if iso and not order_iso:
            raise InternalInconsistency("a proximity iso between T_D algebras is not an order-isomorphism")
        inverse_ok = order_iso and _inverse(f).verified
        if iso != inverse_ok:
            raise InternalInconsistency("iso and invertible order-isomorphism disagree between T_D algebras")
    return Classification(iso, mono, epi, injective, surjective, order_iso)


def _inverse(f: ProxMap) -> ProxMap:
    inv = [0] * f.target.size
    for a, b in enumerate(f.map):
        inv[b] = a
    return ProxMap(f.target, f.source, tuple(inv))


def gamma(g: MTMorphism) -> ProxMap:
    """``Γg = g ∘ 1_M``, i.e. ``a ↦ ⋁{g(x) : x ∈ LC M, x ≤ a}``.

    Post-composing with ``1_N`` instead can break determination by locally
    closed elements (``gamma_literal`` keeps that form for comparison).
    """
    v = is_MT_morphism(g)
    if not v:
        raise NotMTMorphism(f"{v.reason}: {v.witness}")
    one = identity_prox(g.source)
    out = ProxMap(g.source, g.target, tuple(g.map[x] for x in one.map))
    if not out.verified:
        raise InternalInconsistency(f"Γg is not a proximity morphism: {out.report}")
    return out


def gamma_literal(g: MTMorphism) -> ProxMap:
    """``1_N ∘ g``, unverified."""
    one = identity_prox(g.target)
    return ProxMap(g.source, g.target, tuple(one.map[x] for x in g.map))


def _lc_values_from_opens(m: MTAlgebra, n: MTAlgebra, h: dict[int, int]) -> dict[int, int] | None:
    """``x = u ∧ ¬v ↦ h(u) ∧ ¬h(v)``; ``None`` if two presentations disagree."""
    vals: dict[int, int] = {}
    for u in m.opens:
        for v in m.opens:
            x = u & (m.top ^ v)
            y = h[u] & (n.top ^ h[v])
            if vals.setdefault(x, y) != y:
                return None
    return vals


def enumerate_proximity_morphisms(m: MTAlgebra, n: MTAlgebra) -> list[ProxMap]:
    """All proximity morphisms ``M → N``.

    Candidates come from frame morphisms between the opens; each is extended
    to locally closed elements and then to ``M`` by join, and verified.
    """
    fm, fn = opens_frame(m), opens_frame(n)
    homs = frame_morphisms(fm, fn)
    check_candidates(len(homs), "proximity morphism enumeration")
    out = []
    for h in homs:
        on_opens = {fm.sets[i]: fn.sets[h.map[i]] for i in range(fm.n)}
        vals = _lc_values_from_opens(m, n, on_opens)
        if vals is None:
            continue
        f = ProxMap.from_lc(m, n, vals)
        if f.verified:
            out.append(f)
    return sorted(out, key=lambda f: f.map)


def brute_force_proximity_morphisms(m: MTAlgebra, n: MTAlgebra) -> list[ProxMap]:
    """Oracle: every assignment of values on ``LC M``, extended and verified."""
    lc = sorted(m.families.lc)
    check_candidates(n.size ** len(lc), "brute-force proximity enumeration")
    found: dict[tuple[int, ...], ProxMap] = {}
    for vals in product(range(n.size), repeat=len(lc)):
        f = ProxMap.from_lc(m, n, dict(zip(lc, vals)))
        # distinct assignments can join out to the same table
        if f.map not in found and f.verified:
            found[f.map] = f
    return [found[k] for k in sorted(found)]
