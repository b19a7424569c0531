"""Sober maps and the duality between spaces with sober maps and MT-algebras
with proximity morphisms.

A sober map ``X ⤳ Y`` is a continuous map ``X → sY``. The identification
``sY = ssY`` is made explicit: ``λ_{sY}`` is a homeomorphism and its inverse
is applied wherever a map lands in ``ssY``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from pointfree.envelope import phi, td_iff_envelope, transport_frame, zeta
from pointfree.errors import InternalInconsistency, Mismatch
from pointfree.frame import FrameMorphism, pt_space
from pointfree.mt import (
    MTAlgebra,
    MTMorphism,
    at_space,
    eta,
    is_TD,
    opens_frame,
    theta,
)
from pointfree.proximity import (
    ProxMap,
    classify_morphism,
    gamma,
    identity_prox,
    star,
)
from pointfree.space import (
    ContMap,
    FinSpace,
    SoberMap,
    epsilon,
    is_homeomorphism,
    is_TD_space,
    lambda_map,
    mask_of_union,
    powerset_MT,
    s_map,
    soberification,
    soberify,
)


def unlambda(z: FinSpace) -> ContMap:
    """``λ_z⁻¹ : sz → z`` for a sober ``z``."""
    lam = lambda_map(z)
    if not is_homeomorphism(lam):
        raise Mismatch("λ is invertible only on sober spaces")
    inv = [0] * z.n
    for x, p in enumerate(lam.map):
        inv[p] = x
    return ContMap(lam.target, z, tuple(inv))


def identity_sober(x: FinSpace) -> SoberMap:
    return SoberMap(x, x, lambda_map(x))


def Lambda(f: ContMap) -> SoberMap:
    """``Λf = λ_Y ∘ f``."""
    return SoberMap(f.source, f.target, f.then(lambda_map(f.target)))


def sober_compose(g: SoberMap, f: SoberMap) -> SoberMap:
    """``g • f = λ_{sZ}⁻¹ ∘ sg ∘ f``."""
    if f.target != g.source:
        raise Mismatch("g • f needs f's target to be g's source")
    sg = s_map(g.carrier)
    back = unlambda(soberification(g.target))
    return SoberMap(f.source, g.target, f.carrier.then(sg).then(back))


def s_point_map(f: SoberMap) -> ContMap:
    """``sf : sX → sY`` with ``ssY`` read back as ``sY``."""
    return s_map(f.carrier).then(unlambda(soberification(f.target)))


@dataclass(frozen=True)
class SoberIso:
    iso: bool
    inverse: SoberMap | None = None


def sober_iso(f: SoberMap) -> SoberIso:
    """Iso exactly when ``sf`` is a homeomorphism; the inverse is ``g′ ∘ λ_Y``."""
    sf = s_point_map(f)
    if not is_homeomorphism(sf):
        return SoberIso(False)
    inv = [0] * sf.target.n
    for p, q in enumerate(sf.map):
        inv[q] = p
    g_prime = ContMap(sf.target, sf.source, tuple(inv))
    g = SoberMap(f.target, f.source, lambda_map(f.target).then(g_prime))
    if sober_compose(g, f) != identity_sober(f.source) or sober_compose(f, g) != identity_sober(f.target):
        raise InternalInconsistency("constructed inverse is not two-sided")
    return SoberIso(True, g)


@dataclass(frozen=True)
class LiftH:
    """``h_X : 𝒫X → 𝒫sX``."""

    space: FinSpace
    prox: ProxMap

    @property
    def table(self) -> tuple[int, ...]:
        return self.prox.map


def _sigma_of_opens(x: FinSpace) -> dict[int, int]:
    """``Ω(λ_X)⁻¹``: an open ``U`` goes to the points of ``sX`` it belongs to."""
    sob = soberify(x)
    out = {u: sob.spectrum.opens_of[sob.omega.index_of_set[u]] for u in x.opens}
    for u, v in out.items():
        if sob.lam.preimage(v) != u:
            raise InternalInconsistency("σ is not inverse to the preimage under λ")
    return out


@lru_cache(maxsize=None)
def lift_h(x: FinSpace) -> LiftH:
    """Built twice: as ``ζ_{𝒫sX} ⋆ ℱΩ(λ_X)⁻¹ ⋆ φ_{𝒫X}`` and from the closed
    form ``U ∧ ¬V ↦ σU ∧ ¬σV`` on locally closed elements."""
    p, ps = powerset_MT(x), powerset_MT(soberification(x))
    sig = _sigma_of_opens(x)
    fp, fs = opens_frame(p), opens_frame(ps)
    h = FrameMorphism(fp, fs, tuple(fs.index_of_set[sig[u]] for u in fp.sets))
    piped = star(zeta(ps), star(transport_frame(h, p, ps), phi(p)))

    vals: dict[int, int] = {}
    for u in x.opens:
        for v in x.opens:
            d, e = u & ~v, sig[u] & ~sig[v]
            if vals.setdefault(d, e) != e:
                raise InternalInconsistency("closed form depends on the presentation")
    closed = ProxMap.from_lc(p, ps, vals)

    if piped.map != closed.map:
        raise InternalInconsistency("the two constructions of h_X differ")
    if not closed.verified:
        raise InternalInconsistency(f"h_X is not a proximity morphism: {closed.report}")
    if any(closed.map[u] != sig[u] for u in x.opens):
        raise InternalInconsistency("h_X does not extend Ω(λ_X)⁻¹")
    if not classify_morphism(closed).iso:
        raise InternalInconsistency("h_X is not a proximity isomorphism")
    return LiftH(x, closed)


def Pp(f: SoberMap) -> ProxMap:
    """``𝒫ˢf = 𝒫f ∘ h_Y : 𝒫Y → 𝒫X``."""
    hy = lift_h(f.target).prox
    out = ProxMap(powerset_MT(f.target), powerset_MT(f.source), tuple(f.carrier.preimage(a) for a in hy.map))
    if not out.verified:
        raise InternalInconsistency(f"𝒫ˢf is not a proximity morphism: {out.report}")
    sob = soberify(f.target)
    for u in f.target.opens:
        direct = mask_of_union(1 << x for x in range(f.source.n) if u & ~sob.prime_set(f.carrier.map[x]))
        if out.map[u] != direct:
            raise InternalInconsistency(f"𝒫ˢf disagrees with the open-set formula at {u}")
    return out


def _pt_of_opens_map(f: ProxMap) -> tuple[int, ...]:
    """``pt(f↾𝒪) : pt 𝒪N → pt 𝒪M`` on prime indices."""
    fm, fn = opens_frame(f.source), opens_frame(f.target)
    sm, sn = pt_space(fm), pt_space(fn)
    out = []
    for p in sn.primes:
        q = mask_of_union(u for u in f.source.opens if f.map[u] & ~fn.sets[p] == 0)
        out.append(sm.index_of_prime[fm.index_of_set[q]])
    return tuple(out)


def psi(m: MTAlgebra) -> ContMap:
    """``ψ = pt(η_M⁻¹) : pt 𝒪M → s at M``."""
    fm = opens_frame(m)
    spec = pt_space(fm)
    sob = soberify(at_space(m))
    table = tuple(sob.point_of_open(eta(m, fm.sets[p])) for p in spec.primes)
    return ContMap(spec.space, sob.space, table)


def psi_identities(m: MTAlgebra) -> bool:
    """``sθ ∘ ψ`` is the identity of ``pt 𝒪M`` and ``ψ ∘ θ = λ_{at M}``."""
    ps, th = psi(m), theta(m)
    s_theta = s_map(th).then(unlambda(th.target))
    round_trip = ps.then(s_theta)
    return round_trip.map == tuple(range(ps.source.n)) and th.then(ps).map == lambda_map(at_space(m)).map


def ats(f: ProxMap) -> SoberMap:
    """``atˢf : at N ⤳ at M``, ``y ↦ {η_M(a) : a ∈ 𝒪M, y ≤ f(a)}``.

    Cross-checked against ``ψ ∘ pt(f↾𝒪) ∘ θ``.
    """
    m, n = f.source, f.target
    am = at_space(m)
    sob = soberify(am)
    table = []
    for y in range(n.n):
        prime = mask_of_union(eta(m, a) for a in m.opens if not f.map[a] >> y & 1)
        i = sob.point_of_open(prime)
        if any((f.map[a] >> y & 1) != bool(eta(m, a) & ~sob.prime_set(i)) for a in m.opens):
            raise InternalInconsistency(f"filter of atˢf({y}) is not the expected one")
        table.append(i)
    ptf, ps = _pt_of_opens_map(f), psi(m)
    th = theta(n)
    factored = tuple(ps.map[ptf[th.map[y]]] for y in range(n.n))
    if factored != tuple(table):
        raise InternalInconsistency("atˢf differs from ψ ∘ pt(f↾𝒪) ∘ θ")
    return SoberMap(at_space(n), am, ContMap(at_space(n), sob.space, tuple(table)))


def eps_hat(x: FinSpace) -> SoberMap:
    """``ε̂_X = λ_{at𝒫X} ∘ ε_X``."""
    return Lambda(epsilon(x))


def eta_hat(m: MTAlgebra) -> ProxMap:
    """``η̂_M = η_M ∘ 1_M = Γη_M``."""
    target = powerset_MT(at_space(m))
    return gamma(MTMorphism(m, target, tuple(eta(m, a) for a in range(m.size))))


def eps_natural(f: SoberMap) -> bool:
    """``atˢ𝒫ˢf • ε̂_X = ε̂_Y • f``."""
    return sober_compose(ats(Pp(f)), eps_hat(f.source)) == sober_compose(eps_hat(f.target), f)


def eta_natural(g: ProxMap) -> bool:
    """``𝒫ˢatˢg ⋆ η̂_M = η̂_N ⋆ g``."""
    return star(Pp(ats(g)), eta_hat(g.source)).map == star(eta_hat(g.target), g).map


def ats_Pp_matches(f: ContMap) -> bool:
    """For continuous ``f : X → sY``: ``atˢ𝒫ˢ(Λf)`` agrees with ``at𝒫f`` up to ``λ``,
    and ``𝒫ˢ(Λf)`` is ``f⁻¹`` on opens."""
    sf = Lambda(f)
    pp = Pp(sf)
    if any(pp.map[u] != f.preimage(u) for u in f.target.opens):
        return False
    lhs = ats(pp).carrier.map
    lam = lambda_map(at_space(powerset_MT(f.target)))
    # at𝒫f is f itself once points are identified with atoms
    return lhs == tuple(lam.map[f.map[x]] for x in range(f.source.n))


def Pp_functor(f: SoberMap, g: SoberMap) -> bool:
    """``𝒫ˢ(g • f) = 𝒫ˢf ⋆ 𝒫ˢg``."""
    return Pp(sober_compose(g, f)).map == star(Pp(f), Pp(g)).map


def ats_functor(f: ProxMap, g: ProxMap) -> bool:
    """``atˢ(g ⋆ f) = atˢf • atˢg``."""
    return ats(star(g, f)) == sober_compose(ats(f), ats(g))


def identities_match(x: FinSpace, m: MTAlgebra) -> bool:
    """``𝒫ˢλ_X = 1_{𝒫X}`` and ``atˢ1_M = λ_{at M}``."""
    a = Pp(identity_sober(x)).map == identity_prox(powerset_MT(x)).map
    b = ats(identity_prox(m)) == identity_sober(at_space(m))
    return a and b


@dataclass
class EquivalenceReport:
    counts: dict[str, int] = field(default_factory=dict)
    failures: list[tuple[str, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, passed: bool, instance: object) -> None:
        self.counts[name] = self.counts.get(name, 0) + 1
        if not passed:
            self.failures.append((name, instance))


def equivalence_check(spaces=(), algebras=(), sober=(), prox=()) -> EquivalenceReport:
    """Units, naturality and the T_D restriction on the supplied instances.

    ``sober`` holds sober maps and ``prox`` verified proximity morphisms.
    """
    rep = EquivalenceReport()
    for x in spaces:
        rep.record("eps_hat_iso", sober_iso(eps_hat(x)).iso, x)
        rep.record("identities", identities_match(x, powerset_MT(x)), x)
        if is_TD_space(x):
            p = powerset_MT(x)
            rep.record("td_space_to_algebra", is_TD(p), x)
            rep.record("td_envelope", td_iff_envelope(p), x)
    for m in algebras:
        rep.record("eta_hat_iso", classify_morphism(eta_hat(m)).iso, m)
        rep.record("psi_identities", psi_identities(m), m)
        if is_TD(m):
            rep.record("td_algebra_to_space", is_TD_space(at_space(m)), m)
    for f in sober:
        rep.record("eps_natural", eps_natural(f), f)
        to_ssy = ContMap(f.source, soberification(f.target), f.carrier.map)
        rep.record("ats_Pp", ats_Pp_matches(to_ssy), f)
    for g in prox:
        rep.record("eta_natural", eta_natural(g), g)
    return rep


__all__ = [
    "unlambda",
    "identity_sober",
    "Lambda",
    "sober_compose",
    "s_point_map",
    "SoberIso",
    "sober_iso",
    "LiftH",
    "lift_h",
    "Pp",
    "psi",
    "psi_identities",
    "ats",
    "eps_hat",
    "eta_hat",
    "eps_natural",
    "eta_natural",
    "ats_Pp_matches",
    "Pp_functor",
    "ats_functor",
    "identities_match",
    "EquivalenceReport",
    "equivalence_check",
]
