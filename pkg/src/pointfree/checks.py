"""Registry of property checks and the driver that runs them.

A check is a named instance stream plus a predicate. The driver stops a
check at its first failing instance and records that instance as a
self-contained JSON payload, which ``replay`` can re-run on its own.
Reports contain no timings, so equal configs give byte-identical output.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import product

from pointfree import io
from pointfree.bits import members
from pointfree.dmorph import (
    chi,
    cross_check_D,
    inclusion_matches_chi,
    is_D_morphism_MT,
    reflect,
    td_coreflect,
)
from pointfree.envelope import (
    boolean_envelope,
    check_universal_property,
    funayama,
    lift_frame_morphism,
    phi,
    rho_natural,
    td_iff_envelope,
    triangle_on_envelope,
    triangle_on_opens,
    zeta,
    zeta_natural,
)
from pointfree.errors import TooLarge
from pointfree.frame import (
    Frame,
    FrameMorphism,
    frame_morphisms,
    heyting_implication,
    is_D_morphism_frame,
    pt_space,
    ptD_space,
    slicing_characterizations,
)
from pointfree.generators import (
    all_mt,
    all_spaces,
    downset_frame,
    frame_morphism_sample,
    gen_frames,
    gen_mt,
    gen_posets,
    gen_spaces,
    topologies_by_closure,
)
from pointfree.guards import MAX_ATOMS, MAX_POINTS
from pointfree.mt import (
    MTAlgebra,
    at_space,
    atom_T0_characterization,
    dual_map,
    fixture,
    identity_mt,
    is_MT_morphism,
    is_T0,
    is_TD,
    kuratowski_failure,
    lc_atoms,
    mt_morphisms,
    opens_frame,
    theta,
    theta_prime,
    witness_atom,
)
from pointfree.order import (
    FinPoset,
    is_order_embedding,
    join_irreducibles,
    macneille_completion,
)
from pointfree.proximity import (
    ProxMap,
    brute_force_proximity_morphisms,
    check_S_axioms,
    classify_morphism,
    derived_properties,
    enumerate_proximity_morphisms,
    equivalent_formulations,
    gamma,
    identity_prox,
    star,
)
from pointfree.sobercat import (
    Lambda,
    Pp_functor,
    ats_functor,
    ats_Pp_matches,
    eps_hat,
    eps_natural,
    eta_hat,
    eta_natural,
    identities_match,
    identity_sober,
    lift_h,
    psi_identities,
    sober_compose,
    sober_iso,
)
from pointfree.space import (
    ContMap,
    FinSpace,
    continuous_maps,
    epsilon,
    is_homeomorphism,
    is_locally_closed_map,
    is_sober,
    is_T0_space,
    is_TD_space,
    lambda_map,
    powerset_MT,
    powerset_of_map,
    sober_maps,
    soberification,
    td_subspace,
)


@dataclass(frozen=True)
class RunConfig:
    max_points: int = 3
    max_atoms: int = 3
    max_poset: int = 4
    frame_pairs: int = 200
    seed: int = 0
    random_samples: int = 20
    random_points: int = 5
    exhaustive: bool = True
    jobs: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.max_points <= MAX_POINTS:
            raise TooLarge(f"max_points must be in 1..{MAX_POINTS}")
        if not 1 <= self.max_atoms <= min(MAX_POINTS, MAX_ATOMS):
            raise TooLarge(f"max_atoms must be in 1..{min(MAX_POINTS, MAX_ATOMS)}")
        if not 1 <= self.max_poset <= MAX_POINTS:
            raise TooLarge(f"max_poset must be in 1..{MAX_POINTS}")
        if self.random_points > MAX_ATOMS:
            raise TooLarge(f"random_points must be at most {MAX_ATOMS}")
        if self.frame_pairs < 0 or self.random_samples < 0 or self.jobs < 1:
            raise ValueError("counts must be non-negative and jobs positive")


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    topic: str
    instances: Callable[[RunConfig], Iterable]
    predicate: Callable[[object], bool]


@dataclass(frozen=True)
class CheckResult:
    id: str
    topic: str
    instances: int
    passed: bool
    counterexample: dict | None = None

    def as_dict(self) -> dict:
        return asdict(self)


# cached instance pools --------------------------------------------------------


@lru_cache(maxsize=None)
def _spaces(k: int) -> tuple[FinSpace, ...]:
    return tuple(all_spaces(k))


@lru_cache(maxsize=None)
def _algebras(k: int) -> tuple[MTAlgebra, ...]:
    return tuple(all_mt(k))


@lru_cache(maxsize=None)
def _frames(k: int) -> tuple[Frame, ...]:
    return tuple(gen_frames(k))


@lru_cache(maxsize=None)
def _cont(k: int) -> tuple[ContMap, ...]:
    sp = _spaces(k)
    return tuple(f for x in sp for y in sp for f in continuous_maps(x, y))


@lru_cache(maxsize=None)
def _sober(k: int) -> tuple:
    sp = _spaces(k)
    return tuple(f for x in sp for y in sp for f in sober_maps(x, y))


@lru_cache(maxsize=None)
def _prox(k: int) -> tuple[ProxMap, ...]:
    ms = _algebras(k)
    return tuple(g for a in ms for b in ms for g in enumerate_proximity_morphisms(a, b))


@lru_cache(maxsize=None)
def _frame_sample(k: int, pairs: int, seed: int) -> tuple[FrameMorphism, ...]:
    return tuple(frame_morphism_sample(list(_frames(k)), pairs, seed))


def _pairs(items, src=lambda f: f.source, dst=lambda f: f.target):
    """Composable pairs ``(f, g)`` with ``dst(f) == src(g)``."""
    by_src: dict = {}
    for g in items:
        by_src.setdefault(src(g), []).append(g)
    return [(f, g) for f in items for g in by_src.get(dst(f), [])]


def _triples(items):
    by_src: dict = {}
    for g in items:
        by_src.setdefault(g.source, []).append(g)
    return [(f, g, h) for f in items for g in by_src.get(f.target, []) for h in by_src.get(g.target, [])]


# order and frames -------------------------------------------------------------


def _frames_inst(c: RunConfig):
    return _frames(c.max_poset)


def _irreducibles_by_covers(frame: Frame) -> bool:
    lower = {a: 0 for a in range(frame.n)}
    for a, b in frame.cover_pairs:
        lower[b] += 1
    return join_irreducibles(frame.lattice) == frozenset(a for a in range(frame.n) if lower[a] == 1)


def _macneille_posets(c: RunConfig):
    return [p for n in range(1, c.max_poset + 1) for p in gen_posets(n)]


def _macneille_ok(p: FinPoset) -> bool:
    lat, emb = macneille_completion(p)
    return is_order_embedding(p, lat.poset, emb) and len(set(emb)) == p.n


def _birkhoff(p: FinPoset) -> bool:
    """Join-irreducibles of the downset frame are the principal downsets."""
    frame = downset_frame(p)
    principal = {frame.index_of_set[p.down[i]] for i in range(p.n)}
    return set(join_irreducibles(frame.lattice)) == principal


def _spatial(frame: Frame) -> bool:
    spec = pt_space(frame)
    sigma_injective = len(set(spec.opens_of)) == frame.n
    same_d = ptD_space(frame).primes == spec.primes
    return sigma_injective and frozenset(spec.opens_of) == spec.space.opens and same_d


def _slicing(frame: Frame) -> bool:
    a, b, c = slicing_characterizations(frame)
    return a == b == c


def _heyting(frame: Frame) -> bool:
    return all(
        frame.le(w, heyting_implication(frame, u, v)) == frame.le(frame.meet(w, u), v)
        for u, v, w in product(range(frame.n), repeat=3)
    )


def _small_frame_pairs(c: RunConfig):
    frames = _frames(min(c.max_poset, 2))
    homs = [h for a in frames for b in frames for h in frame_morphisms(a, b)]
    return _pairs(homs)


def _d_compose(pair) -> bool:
    f, g = pair
    if is_D_morphism_frame(f) and is_D_morphism_frame(g):
        return bool(is_D_morphism_frame(f.then(g)))
    return True


# MT-algebras ------------------------------------------------------------------


def _mt_inst(c: RunConfig):
    return _algebras(c.max_atoms)


def _mt_valid(m: MTAlgebra) -> bool:
    fam = m.families
    return kuratowski_failure(m) is None and fam.opens <= fam.lc and fam.lc <= fam.cons


def _separation(m: MTAlgebra) -> bool:
    td = is_TD(m) == (lc_atoms(m) == m.top)
    t0 = is_T0(m) == is_T0_space(at_space(m))
    return td and t0 and (is_TD_space(at_space(m)) == is_TD(m)) and (not is_TD(m) or is_T0(m))


def _t0_inst(c: RunConfig):
    return [m for m in _algebras(c.max_atoms) if is_T0(m)]


def _theta_prime(m: MTAlgebra) -> bool:
    """``θ′`` is a homeomorphism and ``witness_atom`` inverts it in both directions."""
    tp = theta_prime(m)
    if not is_homeomorphism(tp):
        return False
    frame = opens_frame(m)
    spec = ptD_space(frame)
    atoms = list(members(lc_atoms(m)))

    def witness(j: int) -> int:
        return witness_atom(m, [frame.sets[a] for a in spec.point(j).elements()])

    forward = all(witness(tp.map[i]) == x for i, x in enumerate(atoms))
    backward = all(tp.map[atoms.index(witness(j))] == j for j in range(spec.space.n))
    return forward and backward and bool(atom_T0_characterization(m))


def _m4_inst(c: RunConfig):
    return [fixture("M4")]


def _m4_witness(m: MTAlgebra) -> bool:
    """The atom ``{p}`` has a slicing trace ``{1}`` but is not locally closed."""
    frame = opens_frame(m)
    spec = ptD_space(frame)
    th = theta(m)
    slicing_trace = spec.point(0).elements() == [frame.index_of_set[m.top]]
    atom_lands = th.map[0] == pt_space(frame).index_of_prime[spec.primes[0]]
    char = atom_T0_characterization(m, check_hypothesis=False)
    return (
        spec.space.n == 1
        and slicing_trace
        and atom_lands
        and lc_atoms(m) == 0
        and theta_prime(m).source.n == 0
        and not char
        and char.witness == m.top
    )


def _cont_inst(c: RunConfig):
    return _cont(c.max_points)


def _duality_on_maps(f: ContMap) -> bool:
    pf = powerset_of_map(f)
    back = dual_map(pf)
    nat = all(epsilon(f.target).map[f.map[x]] == back.map[epsilon(f.source).map[x]] for x in range(f.source.n))
    return back.map == f.map and nat


def _cont_pairs(c: RunConfig):
    return _pairs(_cont(min(c.max_points, 2)))


def _powerset_functor(pair) -> bool:
    """``𝒫(g ∘ f) = 𝒫f ∘ 𝒫g``."""
    f, g = pair
    return powerset_of_map(f.then(g)).map == powerset_of_map(g).then(powerset_of_map(f)).map


# proximity --------------------------------------------------------------------


def _prox_inst(c: RunConfig):
    return _prox(min(c.max_atoms, 2))


def _algebra_pairs(c: RunConfig):
    ms = _algebras(min(c.max_atoms, 2))
    return [(a, b) for a in ms for b in ms]


def _enumeration_oracle(pair) -> bool:
    a, b = pair
    return [f.map for f in enumerate_proximity_morphisms(a, b)] == [f.map for f in brute_force_proximity_morphisms(a, b)]


def _prox_triples(c: RunConfig):
    return _triples(_prox(min(c.max_atoms, 2)))


def _associative(triple) -> bool:
    f, g, h = triple
    return star(h, star(g, f)).map == star(star(h, g), f).map


def _neutral(f: ProxMap) -> bool:
    return star(identity_prox(f.target), f).map == f.map == star(f, identity_prox(f.source)).map


def _determination(pair) -> bool:
    a, b = pair
    homs = enumerate_proximity_morphisms(a, b)
    for f, g in product(homs, repeat=2):
        if all(f.map[u] == g.map[u] for u in a.opens) and f.map != g.map:
            return False
    return True


def _derived(f: ProxMap) -> bool:
    return derived_properties(f).ok and equivalent_formulations(f).equivalent


def _formulations_any(m: MTAlgebra) -> bool:
    """The three formulations agree even on the identity table, which need not be a morphism."""
    return equivalent_formulations(ProxMap(m, m, tuple(range(m.size)))).equivalent


def _example_inst(c: RunConfig):
    return [(fixture("M4"), fixture("2"))]


def _example(pair) -> bool:
    m4, two = pair
    fs = [f for f in enumerate_proximity_morphisms(m4, two) if f.map == (0, 0, 0, 1)]
    gs = [g for g in enumerate_proximity_morphisms(two, m4) if g.map == (0, 3)]
    if len(fs) != 1 or len(gs) != 1:
        return False
    f, g = fs[0], gs[0]
    cf, cg = classify_morphism(f), classify_morphism(g)
    return (
        star(g, f).map == identity_prox(m4).map
        and star(f, g).map == identity_prox(two).map
        and cf.iso
        and not cf.injective
        and cg.iso
        and not cg.surjective
    )


def _s_axioms(m: MTAlgebra) -> bool:
    return all(check_S_axioms(m).values())


def _td_chars(m: MTAlgebra) -> bool:
    td = td_iff_envelope(m)
    return td == (identity_prox(m).map == tuple(range(m.size)))


def _classify_td(f: ProxMap) -> bool:
    # classify_morphism raises if iso and order-isomorphism disagree
    classify_morphism(f)
    return True


def _mt_pairs_small(c: RunConfig):
    ms = _algebras(min(c.max_atoms, 2))
    homs = [g for a in ms for b in ms for g in mt_morphisms(a, b)]
    return _pairs(homs)


def _gamma_functor(pair) -> bool:
    f, g = pair
    ident = gamma(identity_mt(f.source)).map == identity_prox(f.source).map
    return ident and gamma(f.then(g)).map == star(gamma(g), gamma(f)).map


# envelopes --------------------------------------------------------------------


@lru_cache(maxsize=None)
def _boolean_frame(k: int) -> Frame:
    return Frame.of_sets(range(1 << k))


def _universal_inst(c: RunConfig):
    out = []
    for frame in _frames(min(c.max_poset, 3)):
        for k in (1, 2):
            target = _boolean_frame(k)
            for h in frame_morphisms(frame, target):
                out.append((frame, k, h))
    return out


def _universal(inst) -> bool:
    frame, k, h = inst
    env = boolean_envelope(frame)
    target = _boolean_frame(k)
    _, unique = check_universal_property(env, k, [target.sets[v] for v in h.map])
    return unique


def _triangles(frame: Frame) -> bool:
    return triangle_on_envelope(frame) and triangle_on_opens(funayama(frame).mt)


def _frame_sample_inst(c: RunConfig):
    return _frame_sample(c.max_poset, c.frame_pairs, c.seed)


def _rho_zeta(h: FrameMorphism) -> bool:
    return rho_natural(h) and zeta_natural(lift_frame_morphism(h))


def _zeta_phi(m: MTAlgebra) -> bool:
    z, p = zeta(m), phi(m)
    cons = z.source
    return (
        star(z, p).map == identity_prox(m).map
        and star(p, z).map == identity_prox(cons).map
        and triangle_on_opens(m)
    )


def _zeta_natural_prox(g: ProxMap) -> bool:
    return zeta_natural(g)


def _envelope_functor(pair) -> bool:
    f, g = pair
    ident = FrameMorphism(f.source, f.source, tuple(range(f.source.n)))
    lifted_id = lift_frame_morphism(ident).map == identity_prox(funayama(f.source).mt).map
    return lifted_id and lift_frame_morphism(f.then(g)).map == star(lift_frame_morphism(g), lift_frame_morphism(f)).map


# D-morphisms ------------------------------------------------------------------


def _lc_iff_d(f: ContMap) -> bool:
    pf = powerset_of_map(f)
    lc = bool(is_locally_closed_map(f))
    if lc != is_D_morphism_MT(pf).is_D:
        return False
    if is_T0_space(f.source) and is_T0_space(f.target):
        return cross_check_D(pf) == lc
    return True


def _td_pairs_inst(c: RunConfig):
    ms = [m for m in _algebras(c.max_atoms) if is_TD(m)]
    return [(a, b) for a in ms for b in ms]


def _td_all_d(pair) -> bool:
    a, b = pair
    return all(is_D_morphism_MT(f).is_D for f in mt_morphisms(a, b))


def _d_category(pair) -> bool:
    f, g = pair
    ok_id = is_D_morphism_MT(identity_mt(f.source)).is_D
    if is_D_morphism_MT(f).is_D and is_D_morphism_MT(g).is_D:
        return ok_id and is_D_morphism_MT(f.then(g)).is_D
    return ok_id


def _reflect_inst(c: RunConfig):
    out = []
    for f in _cont(c.max_points):
        pf = powerset_of_map(f)
        # 𝒫f : 𝒫Y → 𝒫X; the target must be T_D
        if is_TD(pf.target) and is_D_morphism_MT(pf).is_D:
            out.append(f)
    return out


def _reflect(f: ContMap) -> bool:
    r = reflect(powerset_of_map(f))
    return r.unique and is_MT_morphism(r.lifted)


def _coreflect_inst(c: RunConfig):
    return [f for f in _cont(c.max_points) if is_TD_space(f.source) and is_locally_closed_map(f)]


def _coreflect(f: ContMap) -> bool:
    return td_coreflect(f).unique


def _spaces_inst(c: RunConfig):
    return _spaces(c.max_points)


def _chi(x: FinSpace) -> bool:
    c = chi(powerset_MT(x))
    return inclusion_matches_chi(x) and (c.target.n == 0 or is_TD(c.target))


# spaces -----------------------------------------------------------------------


def _space_invariants(x: FinSpace) -> bool:
    sx = soberification(x)
    xd, _ = td_subspace(x)
    lam_homeo = is_homeomorphism(lambda_map(x))
    return (
        is_sober(sx)
        and is_homeomorphism(lambda_map(sx))
        and lam_homeo == is_sober(x)
        and (xd.n == 0 or is_TD_space(xd))
        and (not is_TD_space(x) or is_T0_space(x))
        and is_homeomorphism(epsilon(x))
    )


def _random_spaces(c: RunConfig):
    rng = random.Random(c.seed)
    return list(gen_spaces(c.random_points, "random", seed=rng.randrange(1 << 30), count=c.random_samples))


# sober maps -------------------------------------------------------------------


def _sober_pairs(c: RunConfig):
    return _pairs(_sober(min(c.max_points, 2)))


def _sober_triples(c: RunConfig):
    sm = _sober(min(c.max_points, 2))
    by_src: dict = {}
    for g in sm:
        by_src.setdefault(g.source, []).append(g)
    return [(f, g, h) for f in sm for g in by_src.get(f.target, []) for h in by_src.get(g.target, [])]


def _sober_assoc(triple) -> bool:
    f, g, h = triple
    return sober_compose(h, sober_compose(g, f)) == sober_compose(sober_compose(h, g), f)


def _sober_units(f) -> bool:
    return (
        sober_compose(f, identity_sober(f.source)) == f
        and sober_compose(identity_sober(f.target), f) == f
    )


def _sober_inst(c: RunConfig):
    return _sober(c.max_points)


def _lambda_functor(pair) -> bool:
    f, g = pair
    return sober_compose(Lambda(g), Lambda(f)) == Lambda(f.then(g))


def _lift_h(x: FinSpace) -> bool:
    h = lift_h(x)
    iso = sober_iso(identity_sober(x))
    return h.prox.verified and iso.iso and iso.inverse == identity_sober(x)


def _Pp_functor(pair) -> bool:
    f, g = pair
    return Pp_functor(f, g)


def _ats_functor(pair) -> bool:
    f, g = pair
    return ats_functor(f, g)


def _prox_pairs(c: RunConfig):
    return _pairs(_prox(min(c.max_atoms, 2)))


def _identities(x: FinSpace) -> bool:
    m = powerset_MT(x)
    return identities_match(x, m) and psi_identities(m)


def _eps(f) -> bool:
    to_ssy = ContMap(f.source, soberification(f.target), f.carrier.map)
    return eps_natural(f) and ats_Pp_matches(to_ssy)


def _units(x: FinSpace) -> bool:
    m = powerset_MT(x)
    return sober_iso(eps_hat(x)).iso and classify_morphism(eta_hat(m)).iso


def _eta(g: ProxMap) -> bool:
    return eta_natural(g)


def _td_closure(x: FinSpace) -> bool:
    m = powerset_MT(x)
    td = is_TD_space(x)
    same = is_TD(m) == td and is_TD_space(at_space(m)) == is_TD(m)
    return same and (not td or td_iff_envelope(m))


def _counts_inst(c: RunConfig):
    return list(range(1, min(MAX_POINTS, 4) + 1))


_EXPECTED_TOPOLOGIES = {1: 1, 2: 4, 3: 29, 4: 355}


def _counts(n: int) -> bool:
    a = list(gen_spaces(n))
    b = topologies_by_closure(n)
    mts = list(gen_mt(n))
    return (
        len(a) == len(set(a)) == len(b) == len(mts) == _EXPECTED_TOPOLOGIES[n]
        and set(a) == set(b)
    )


def _dual_count_inst(c: RunConfig):
    return [min(c.max_points, c.max_atoms)]


def _dual_count(k: int) -> bool:
    """As many proximity morphisms between the algebras as sober maps between the spaces."""
    return len(_prox(k)) == len(_sober(k))


REGISTRY: tuple[TheoremCheck, ...] = (
    TheoremCheck("order-irreducibles-by-covers", "join-irreducibles", _frames_inst, _irreducibles_by_covers),
    TheoremCheck("order-macneille-embedding", "macneille", _macneille_posets, _macneille_ok),
    TheoremCheck("order-birkhoff", "birkhoff", _macneille_posets, _birkhoff),
    TheoremCheck("frame-heyting-residuation", "heyting", _frames_inst, _heyting),
    TheoremCheck("frame-spatial", "frame-spectra", _frames_inst, _spatial),
    TheoremCheck("frame-slicing-three-ways", "slicing", _frames_inst, _slicing),
    TheoremCheck("frame-d-morphism-composition", "frame-d-morphisms", _small_frame_pairs, _d_compose),
    TheoremCheck("mt-axioms", "mt-algebras", _mt_inst, _mt_valid),
    TheoremCheck("mt-separation", "separation", _mt_inst, _separation),
    TheoremCheck("mt-theta-prime-homeomorphism", "spectra", _t0_inst, _theta_prime),
    TheoremCheck("mt-theta-prime-not-onto", "spectra", _m4_inst, _m4_witness),
    TheoremCheck("mt-space-duality", "mt-duality", _cont_inst, _duality_on_maps),
    TheoremCheck("space-powerset-functor", "mt-duality", _cont_pairs, _powerset_functor),
    TheoremCheck("prox-enumeration-oracle", "prox-enumeration", _algebra_pairs, _enumeration_oracle),
    TheoremCheck("prox-example-two-isos", "prox-example", _example_inst, _example),
    TheoremCheck("prox-associativity", "prox-category", _prox_triples, _associative),
    TheoremCheck("prox-identity-neutral", "prox-category", _prox_inst, _neutral),
    TheoremCheck("prox-determined-by-opens", "prox-determination", _algebra_pairs, _determination),
    TheoremCheck("prox-derived-properties", "prox-derived", _prox_inst, _derived),
    TheoremCheck("prox-formulations-agree", "prox-formulations", _mt_inst, _formulations_any),
    TheoremCheck("cons-below-axioms", "cons-below", _mt_inst, _s_axioms),
    TheoremCheck("td-three-characterizations", "td-characterization", _mt_inst, _td_chars),
    TheoremCheck("prox-classify-td", "prox-isomorphisms", _prox_inst, _classify_td),
    TheoremCheck("prox-gamma-functor", "gamma", _mt_pairs_small, _gamma_functor),
    TheoremCheck("envelope-universal-property", "boolean-envelope", _universal_inst, _universal),
    TheoremCheck("envelope-triangles", "frame-equivalence", _frames_inst, _triangles),
    TheoremCheck("envelope-rho-zeta-natural", "frame-equivalence", _frame_sample_inst, _rho_zeta),
    TheoremCheck("envelope-zeta-phi-inverse", "frame-equivalence", _mt_inst, _zeta_phi),
    TheoremCheck("envelope-zeta-natural-prox", "frame-equivalence", _prox_inst, _zeta_natural_prox),
    TheoremCheck("envelope-functor", "frame-equivalence", _small_frame_pairs, _envelope_functor),
    TheoremCheck("dmorph-lc-iff-d", "d-morphisms", _cont_inst, _lc_iff_d),
    TheoremCheck("dmorph-td-all-d", "d-morphisms", _td_pairs_inst, _td_all_d),
    TheoremCheck("dmorph-category", "d-morphisms", _mt_pairs_small, _d_category),
    TheoremCheck("dmorph-reflection", "reflection", _reflect_inst, _reflect),
    TheoremCheck("dmorph-coreflection", "coreflection", _coreflect_inst, _coreflect),
    TheoremCheck("dmorph-chi-inclusion", "reflection", _spaces_inst, _chi),
    TheoremCheck("space-invariants", "spaces", _spaces_inst, _space_invariants),
    TheoremCheck("space-random-invariants", "spaces", _random_spaces, _space_invariants),
    TheoremCheck("sober-associativity", "sober-category", _sober_triples, _sober_assoc),
    TheoremCheck("sober-units", "sober-category", _sober_inst, _sober_units),
    TheoremCheck("sober-lambda-functor", "sober-category", _cont_pairs, _lambda_functor),
    TheoremCheck("sober-lift-h", "sober-lift", _spaces_inst, _lift_h),
    TheoremCheck("sober-Pp-functor", "sober-functors", _sober_pairs, _Pp_functor),
    TheoremCheck("sober-ats-functor", "sober-functors", _prox_pairs, _ats_functor),
    TheoremCheck("sober-identities", "sober-functors", _spaces_inst, _identities),
    TheoremCheck("sober-units-iso", "sober-equivalence", _spaces_inst, _units),
    TheoremCheck("sober-eps-natural", "sober-equivalence", _sober_inst, _eps),
    TheoremCheck("sober-eta-natural", "sober-equivalence", _prox_inst, _eta),
    TheoremCheck("sober-td-restriction", "td-equivalence", _spaces_inst, _td_closure),
    TheoremCheck("sober-prox-count", "sober-equivalence", _dual_count_inst, _dual_count),
    TheoremCheck("generator-counts", "generators", _counts_inst, _counts),
)

REQUIRED_TOPICS = frozenset(
    {
        "join-irreducibles",
        "macneille",
        "birkhoff",
        "frame-spectra",
        "slicing",
        "frame-d-morphisms",
        "mt-algebras",
        "separation",
        "spectra",
        "mt-duality",
        "prox-category",
        "prox-example",
        "prox-determination",
        "prox-derived",
        "prox-formulations",
        "cons-below",
        "td-characterization",
        "prox-isomorphisms",
        "gamma",
        "boolean-envelope",
        "frame-equivalence",
        "d-morphisms",
        "reflection",
        "coreflection",
        "spaces",
        "sober-category",
        "sober-lift",
        "sober-functors",
        "sober-equivalence",
        "td-equivalence",
        "generators",
    }
)

_BY_ID = {c.id: c for c in REGISTRY}


def audit(registry: Iterable[TheoremCheck] = REGISTRY) -> list[str]:
    """Required topics with no registered check, and duplicate ids."""
    reg = list(registry)
    seen = {c.topic for c in reg}
    ids = [c.id for c in reg]
    dupes = sorted({i for i in ids if ids.count(i) > 1})
    return sorted(REQUIRED_TOPICS - seen) + [f"duplicate:{d}" for d in dupes]


def get_check(check_id: str, registry=None) -> TheoremCheck:
    if registry is not None:
        for c in registry:
            if c.id == check_id:
                return c
        raise KeyError(f"no check named {check_id!r}")
    try:
        return _BY_ID[check_id]
    except KeyError:
        raise KeyError(f"no check named {check_id!r}") from None


def _payload(check: TheoremCheck, inst, error: str | None) -> dict:
    try:
        enc = io.encode(inst)
    except TypeError:
        enc = {"kind": "unencodable", "repr": repr(inst)}
    out = {"check": check.id, "instance": enc}
    if error:
        out["error"] = error
    return out


def run_check(check: TheoremCheck, config: RunConfig) -> CheckResult:
    count = 0
    for inst in check.instances(config):
        count += 1
        try:
            ok = bool(check.predicate(inst))
            err = None
        except Exception as exc:  # a raised invariant is a failure with a witness
            ok, err = False, f"{type(exc).__name__}: {exc}"
        if not ok:
            return CheckResult(check.id, check.topic, count, False, _payload(check, inst, err))
    return CheckResult(check.id, check.topic, count, True)


def _run_by_id(args) -> dict:
    check_id, config = args
    return run_check(get_check(check_id), config).as_dict()


def run_checks(config: RunConfig, only: Iterable[str] | None = None, registry=None) -> dict:
    reg = list(registry if registry is not None else REGISTRY)
    if only:
        wanted = set(only)
        unknown = wanted - {c.id for c in reg}
        if unknown:
            raise KeyError(f"unknown check ids: {sorted(unknown)}")
        reg = [c for c in reg if c.id in wanted]
    if config.jobs > 1 and registry is None:
        with ProcessPoolExecutor(config.jobs) as pool:
            results = list(pool.map(_run_by_id, [(c.id, config) for c in reg]))
    else:
        results = [run_check(c, config).as_dict() for c in reg]
    missing = audit(reg) if not only else []
    # jobs changes scheduling, never results, so it stays out of the report
    cfg = {k: v for k, v in asdict(config).items() if k != "jobs"}
    return {
        "config": cfg,
        "checks": results,
        "passed": all(r["passed"] for r in results) and not missing,
        "missing_topics": missing,
    }


def replay(payload: dict, registry=None) -> bool:
    """Re-run the predicate of ``payload["check"]`` on the recorded instance.

    A predicate that raises counts as a failure, as it does in ``run_check``.
    """
    check = get_check(payload["check"], registry)
    inst = io.decode(payload["instance"])
    try:
        return bool(check.predicate(inst))
    except Exception:
        return False


__all__ = [
    "RunConfig",
    "TheoremCheck",
    "CheckResult",
    "REGISTRY",
    "REQUIRED_TOPICS",
    "audit",
    "get_check",
    "run_check",
    "run_checks",
    "replay",
]
