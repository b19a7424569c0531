"""Boolean and Funayama envelopes of finite frames.

The boolean envelope of ``L`` is realized on the join-irreducibles ``J(L)``:
an element is a subset of ``J(L)`` (a bitmask over positions in
``irreducibles``) and ``e(a) = {j ∈ J(L) : j ≤ a}``. The Funayama envelope
is the MT-algebra on those atoms whose opens are ``e[L]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

from pointfree import kernels
from pointfree.bits import members
from pointfree.errors import (
    InternalInconsistency,
    NotBoundedLatticeHom,
    SourceTargetMismatch,
)
from pointfree.frame import Frame, FrameMorphism, require_frame_morphism
from pointfree.mt import (
    ConsAlgebra,
    MTAlgebra,
    cons_algebra,
    is_order_isomorphic,
    is_TD,
    opens_frame,
)
from pointfree.order import (
    FinLattice,
    is_boolean,
    join_irreducibles,
    lattice_of_sets,
    lower_cover_join,
    macneille_completion,
)
from pointfree.proximity import ProxMap, identity_prox, is_deVries


@dataclass(frozen=True)
class BooleanEnvelope:
    base: Frame
    irreducibles: tuple[int, ...]
    embed: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.irreducibles)

    @property
    def top(self) -> int:
        return (1 << self.k) - 1

    @cached_property
    def algebra(self) -> FinLattice:
        return lattice_of_sets(list(range(1 << self.k)))

    def interior(self, b: int) -> int:
        out = 0
        for v in self.embed:
            if v & ~b == 0:
                out |= v
        return out


@lru_cache(maxsize=None)
def boolean_envelope(frame: Frame) -> BooleanEnvelope:
    irr = tuple(sorted(join_irreducibles(frame.lattice)))
    embed = tuple(
        sum(1 << i for i, j in enumerate(irr) if frame.le(j, a)) for a in range(frame.n)
    )
    env = BooleanEnvelope(frame, irr, embed)
    _check_embedding(env)
    return env


def _check_embedding(env: BooleanEnvelope) -> None:
    f, e = env.base, env.embed
    if e[f.bottom] != 0 or e[f.top] != env.top:
        raise InternalInconsistency("envelope embedding misses a bound")
    if len(set(e)) != f.n:
        raise InternalInconsistency("envelope embedding is not injective")
    for a, b in product(range(f.n), repeat=2):
        if e[f.meet(a, b)] != e[a] & e[b] or e[f.join(a, b)] != e[a] | e[b]:
            raise InternalInconsistency(f"envelope embedding is not a lattice map at ({a}, {b})")


def is_bounded_lattice_hom(frame: Frame, n_atoms: int, h) -> bool:
    top = (1 << n_atoms) - 1
    if h[frame.bottom] != 0 or h[frame.top] != top:
        return False
    return all(
        h[frame.meet(a, b)] == h[a] & h[b] and h[frame.join(a, b)] == h[a] | h[b]
        for a, b in product(range(frame.n), repeat=2)
    )


def boolean_lift(env: BooleanEnvelope, h) -> tuple[int, ...]:
    """``ℬh`` for a bounded lattice map ``h`` given as masks in a powerset algebra.

    Atom ``j`` of the envelope goes to ``h(j) ∧ ¬h(j⁻)``, where ``j⁻`` is the
    join of everything strictly below ``j``.
    """
    lat = env.base.lattice
    atoms = [h[j] & ~h[lower_cover_join(lat, j)] for j in env.irreducibles]
    keys = [1 << i for i in range(env.k)]
    return tuple(kernels.join_below(env.k, keys, atoms))


def check_universal_property(env: BooleanEnvelope, n_atoms: int, h) -> tuple[tuple[int, ...], bool]:
    """Build ``ℬh : ℬL → 𝒫(n_atoms)`` and decide whether it is the unique extension.

    Uniqueness is checked against every boolean map ``ℬL → 𝒫(n_atoms)``,
    i.e. every function from target atoms to envelope atoms.
    """
    h = tuple(h)
    if not is_bounded_lattice_hom(env.base, n_atoms, h):
        raise NotBoundedLatticeHom("h does not preserve bounds, meets and joins")
    bh = boolean_lift(env, h)
    top = (1 << n_atoms) - 1
    if any(bh[env.embed[a]] != h[a] for a in range(env.base.n)):
        raise InternalInconsistency("ℬh ∘ e differs from h")
    if bh[0] != 0 or bh[env.top] != top:
        raise InternalInconsistency("ℬh misses a bound")
    if kernels.meet_failure(list(bh))[0] >= 0 or kernels.join_failure(list(bh))[0] >= 0:
        raise InternalInconsistency("ℬh is not a boolean map")
    matches = 0
    for fn in product(range(env.k), repeat=n_atoms):
        keys = [1 << fn[y] for y in range(n_atoms)]
        table = kernels.join_below(env.k, keys, [1 << y for y in range(n_atoms)])
        if all(table[env.embed[a]] == h[a] for a in range(env.base.n)):
            matches += 1
            if tuple(table) != bh:
                return bh, False
    return bh, matches == 1


@dataclass(frozen=True)
class FunayamaEnvelope:
    base: Frame
    boolean: BooleanEnvelope
    mt: MTAlgebra

    @property
    def embed(self) -> tuple[int, ...]:
        return self.boolean.embed

    def lifted_interior(self, a: int) -> int:
        """``□̄a = ⋁{□b : b ∈ ℬL, b ≤ a}``; equal to ``□a`` at finite size."""
        out = 0
        for b in range(1 << self.boolean.k):
            if b & ~a == 0:
                out |= self.boolean.interior(b)
        return out


@lru_cache(maxsize=None)
def funayama(frame: Frame) -> FunayamaEnvelope:
    env = boolean_envelope(frame)
    # the MacNeille stage is the identity on a finite boolean algebra
    lat = env.algebra
    completed, emb = macneille_completion(lat.poset)
    if completed.n != lat.n or sorted(emb) != list(range(lat.n)):
        raise InternalInconsistency("MacNeille completion of a finite lattice changed its size")
    if not is_boolean(completed):
        raise InternalInconsistency("completion of the envelope is not boolean")
    mt = MTAlgebra(env.k, frozenset(env.embed))
    fe = FunayamaEnvelope(frame, env, mt)
    for a in range(mt.size):
        if fe.lifted_interior(a) != mt.box(a):
            raise InternalInconsistency("lifted interior differs from the interior")
    if not is_TD(mt):
        raise InternalInconsistency("Funayama envelope is not T_D")
    return fe


def rho(frame: Frame) -> FrameMorphism:
    """``ρ_L : L → 𝒪ℱL``, an isomorphism of frames."""
    fe = funayama(frame)
    target = opens_frame(fe.mt)
    table = tuple(target.index_of_set[v] for v in fe.embed)
    f = FrameMorphism(frame, target, table)
    require_frame_morphism(f)
    if sorted(table) != list(range(target.n)):
        raise InternalInconsistency("ρ is not bijective")
    return f


def lift_frame_morphism(h: FrameMorphism) -> ProxMap:
    """``ℱh : ℱL₁ → ℱL₂``, ``a ↦ ⋁{ℬh(x) : x ∈ LC ℱL₁, x ≤ a}``."""
    require_frame_morphism(h)
    f1, f2 = funayama(h.source), funayama(h.target)
    e2 = f2.embed
    bh = boolean_lift(f1.boolean, [e2[v] for v in h.map])
    lc = sorted(f1.mt.families.lc)
    table = tuple(kernels.join_below(f1.mt.n, lc, [bh[x] for x in lc]))
    if table != bh:
        raise InternalInconsistency("ℱh differs from ℬh on the envelope")
    for a in range(h.source.n):
        if table[f1.embed[a]] != e2[h.map[a]]:
            raise InternalInconsistency("ℱh does not extend h")
    out = ProxMap(f1.mt, f2.mt, table)
    if not out.verified:
        raise InternalInconsistency(f"ℱh is not a proximity morphism: {out.report}")
    return out


@dataclass(frozen=True)
class ConsRealization:
    """``ℱ𝒪M`` realized inside ``M`` as ``Cons M``, with an iso to the Birkhoff build.

    ``to_cons[i]`` is the block of ``Cons M`` matching envelope atom ``i``.
    """

    algebra: MTAlgebra
    cons: ConsAlgebra
    birkhoff: FunayamaEnvelope
    to_cons: tuple[int, ...]

    def birkhoff_to_cons(self, a: int) -> int:
        out = 0
        for i in members(a):
            out |= 1 << self.to_cons[i]
        return out

    def cons_to_birkhoff(self, s: int) -> int:
        inv = {b: i for i, b in enumerate(self.to_cons)}
        out = 0
        for b in members(s):
            out |= 1 << inv[b]
        return out


@lru_cache(maxsize=None)
def cons_realization(m: MTAlgebra) -> ConsRealization:
    ca = cons_algebra(m)
    fe = funayama(opens_frame(m))
    frame = fe.base
    block_of = {b: i for i, b in enumerate(ca.blocks)}
    to_cons = []
    for j in fe.boolean.irreducibles:
        piece = frame.sets[j] & ~frame.sets[lower_cover_join(frame.lattice, j)]
        if piece not in block_of:
            raise InternalInconsistency("irreducible difference is not a block of Cons M")
        to_cons.append(block_of[piece])
    if sorted(to_cons) != list(range(len(ca.blocks))):
        raise InternalInconsistency("envelope atoms do not match the blocks of Cons M")
    real = ConsRealization(m, ca, fe, tuple(to_cons))
    if frozenset(real.birkhoff_to_cons(u) for u in fe.mt.opens) != ca.algebra.opens:
        raise InternalInconsistency("opens do not correspond under the block bijection")
    return real


def zeta(m: MTAlgebra) -> ProxMap:
    """``ζ_M : ℱ𝒪M → M``, ``a ↦ ⋁{x ∈ LC M : x ≤ a}`` with ``ℱ𝒪M = Cons M``."""
    ca = cons_algebra(m)
    one = identity_prox(m)
    return ProxMap(ca.algebra, m, tuple(one.map[ca.embed[s]] for s in range(ca.algebra.size)))


def phi(m: MTAlgebra) -> ProxMap:
    """``φ_M : M → ℱ𝒪M``, ``b ↦ ⋁{x ∈ LC M : x ≤ b}`` computed in ``Cons M``."""
    ca = cons_algebra(m)
    one = identity_prox(m)
    return ProxMap(m, ca.algebra, tuple(ca.index[one.map[b]] for b in range(m.size)))


def opens_morphism(g: ProxMap) -> FrameMorphism:
    """``𝒪g``, the restriction of ``g`` to opens."""
    src, dst = opens_frame(g.source), opens_frame(g.target)
    table = tuple(dst.index_of_set[g.map[u]] for u in src.sets)
    f = FrameMorphism(src, dst, table)
    require_frame_morphism(f)
    return f


def transport_frame(h: FrameMorphism, m1: MTAlgebra, m2: MTAlgebra) -> ProxMap:
    """``ℱh : Cons M₁ → Cons M₂`` for a frame map ``h : 𝒪M₁ → 𝒪M₂``."""
    r1, r2 = cons_realization(m1), cons_realization(m2)
    if h.source != r1.birkhoff.base or h.target != r2.birkhoff.base:
        raise SourceTargetMismatch("h must run between the frames of opens")
    lifted = lift_frame_morphism(h)
    size = r1.cons.algebra.size
    table = tuple(r2.birkhoff_to_cons(lifted.map[r1.cons_to_birkhoff(s)]) for s in range(size))
    return ProxMap(r1.cons.algebra, r2.cons.algebra, table)


def transport(g: ProxMap) -> ProxMap:
    """``ℱ𝒪g : Cons M₁ → Cons M₂``, built on the Birkhoff side and moved across."""
    return transport_frame(opens_morphism(g), g.source, g.target)


def td_iff_envelope(m: MTAlgebra) -> bool:
    """T_D, the de Vries condition and ``M ≅ ℱ𝒪M``, each computed separately."""
    td = is_TD(m)
    dv = is_deVries(m)
    iso = is_order_isomorphic(m, funayama(opens_frame(m)).mt)
    if not td == dv == iso:
        raise InternalInconsistency(f"T_D={td}, de Vries={dv}, envelope iso={iso}")
    return td


def triangle_on_opens(m: MTAlgebra) -> bool:
    """``𝒪ζ_M ∘ ρ_{𝒪M}`` is the identity on opens."""
    real = cons_realization(m)
    z = zeta(m)
    return all(z.map[real.birkhoff_to_cons(v)] == u for u, v in zip(real.birkhoff.base.sets, real.birkhoff.embed))


def triangle_on_envelope(frame: Frame) -> bool:
    """``ζ_{ℱL} ∘ ℱρ_L`` is the identity on ``ℱL``."""
    fe = funayama(frame)
    lifted = lift_frame_morphism(rho(frame))
    real = cons_realization(fe.mt)
    z = zeta(fe.mt)
    return all(z.map[real.birkhoff_to_cons(lifted.map[a])] == a for a in range(fe.mt.size))


def rho_natural(h: FrameMorphism) -> bool:
    """``𝒪ℱh ∘ ρ_{L₁} = ρ_{L₂} ∘ h``."""
    lifted = lift_frame_morphism(h)
    e1, e2 = funayama(h.source).embed, funayama(h.target).embed
    return all(lifted.map[e1[a]] == e2[h.map[a]] for a in range(h.source.n))


def zeta_natural(g: ProxMap) -> bool:
    """``ζ_{M₂} ⋆ ℱ𝒪g = g ⋆ ζ_{M₁}``."""
    from pointfree.proximity import star

    return star(zeta(g.target), transport(g)).map == star(g, zeta(g.source)).map
