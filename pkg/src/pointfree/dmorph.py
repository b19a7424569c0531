"""D-morphisms of MT-algebras, the reflection onto spatial T_D algebras and
the T_D coreflection of spaces."""

from __future__ import annotations

from dataclasses import dataclass

from pointfree import kernels
from pointfree.bits import is_atom, members
from pointfree.errors import (
    InternalInconsistency,
    NotD,
    NotLocallyClosedMap,
    NotMTMorphism,
    NotT0,
    SourceNotTD,
    TargetNotTD,
)
from pointfree.frame import FrameMorphism, is_D_morphism_frame
from pointfree.mt import (
    MTAlgebra,
    MTMorphism,
    is_MT_morphism,
    is_T0,
    is_TD,
    lc_atoms,
    left_adjoint,
    mt_morphisms,
    opens_frame,
)
from pointfree.space import (
    ContMap,
    FinSpace,
    continuous_maps,
    is_locally_closed_map,
    is_TD_space,
    powerset_MT,
    powerset_of_map,
    td_subspace,
)


@dataclass(frozen=True)
class DMorphismReport:
    is_D: bool
    witnesses: tuple[int, ...]


def is_D_morphism_MT(f: MTMorphism) -> DMorphismReport:
    """``f*`` must send each locally closed atom of the target to a locally closed atom.

    Witnesses are the offending target atoms.
    """
    v = is_MT_morphism(f)
    if not v:
        raise NotMTMorphism(f"{v.reason}: {v.witness}")
    adj = left_adjoint(f)
    lc_src = f.source.families.lc
    bad = tuple(
        y for y in members(lc_atoms(f.target)) if not (is_atom(adj[1 << y]) and adj[1 << y] in lc_src)
    )
    return DMorphismReport(not bad, bad)


def opens_restriction(f: MTMorphism) -> FrameMorphism:
    src, dst = opens_frame(f.source), opens_frame(f.target)
    return FrameMorphism(src, dst, tuple(dst.index_of_set[f.map[u]] for u in src.sets))


def cross_check_D(f: MTMorphism) -> bool:
    """The MT-side and frame-side D conditions agree for T_0 algebras.

    Also checks, for every atom ``x`` of the target, that the preimage under
    ``𝒪f`` of ``↑x ∩ 𝒪N`` is ``↑f*(x) ∩ 𝒪M``.
    """
    if not is_T0(f.source) or not is_T0(f.target):
        raise NotT0("both algebras must be T_0")
    mt_side = is_D_morphism_MT(f).is_D
    of = opens_restriction(f)
    frame_side = bool(is_D_morphism_frame(of))
    adj = left_adjoint(f)
    for y in range(f.target.n):
        x = adj[1 << y]
        pre = frozenset(u for u in f.source.opens if f.map[u] >> y & 1)
        trace = frozenset(u for u in f.source.opens if u & x)
        if pre != trace:
            raise InternalInconsistency(f"preimage filter identity fails at atom {y}")
    if mt_side != frame_side:
        raise InternalInconsistency("MT-side and frame-side D conditions disagree")
    return mt_side


@dataclass(frozen=True)
class Chi:
    """``χ_M : M → 𝒫(at_D M)``; ``atoms[i]`` is the atom of ``M`` behind point ``i``."""

    morphism: MTMorphism
    atoms: tuple[int, ...]

    @property
    def target(self) -> MTAlgebra:
        return self.morphism.target


def chi(m: MTAlgebra) -> Chi:
    lc = tuple(members(lc_atoms(m)))
    k = len(lc)
    keys = [1 << x for x in lc]
    vals = [1 << i for i in range(k)]
    table = tuple(kernels.join_below(m.n, keys, vals))
    target = MTAlgebra(k, frozenset(table[u] for u in m.opens), degenerate=(k == 0))
    out = MTMorphism(m, target, table)
    if not is_MT_morphism(out):
        raise InternalInconsistency("χ is not an MT-morphism")
    if not is_D_morphism_MT(out).is_D:
        raise InternalInconsistency("χ is not a D-morphism")
    if not is_TD(target) and k:
        raise InternalInconsistency("target of χ is not T_D")
    return Chi(out, lc)


@dataclass(frozen=True)
class Reflection:
    lifted: MTMorphism
    unique: bool


def reflect(f: MTMorphism) -> Reflection:
    """``f̂ : 𝒫(at_D M) → N``, ``S ↦ ⋁{f(x) : x ∈ S}``, with ``f̂ ∘ χ_M = f``."""
    if not is_TD(f.target):
        raise TargetNotTD("the target must be a T_D algebra")
    if not is_D_morphism_MT(f).is_D:
        raise NotD("f is not a D-morphism")
    c = chi(f.source)
    p = c.target
    keys = [1 << i for i in range(p.n)]
    vals = [f.map[1 << x] for x in c.atoms]
    lifted = MTMorphism(p, f.target, tuple(kernels.join_below(p.n, keys, vals)))
    if not is_MT_morphism(lifted):
        raise InternalInconsistency("f̂ is not an MT-morphism")
    if c.morphism.then(lifted).map != f.map:
        raise InternalInconsistency("f̂ ∘ χ differs from f")
    matches = [g for g in mt_morphisms(p, f.target) if c.morphism.then(g).map == f.map]
    return Reflection(lifted, matches == [lifted])


@dataclass(frozen=True)
class Coreflection:
    lifted: ContMap
    unique: bool


def td_coreflect(f: ContMap) -> Coreflection:
    """``f̂ : Y → X_D`` with ``i_D ∘ f̂ = f``, for ``Y`` T_D and ``f`` locally closed."""
    if not is_TD_space(f.source):
        raise SourceNotTD("the source must be a T_D space")
    v = is_locally_closed_map(f)
    if not v:
        raise NotLocallyClosedMap(f"point {v.witness} leaves the locally closed points")
    xd, incl = td_subspace(f.target)
    pos = {p: i for i, p in enumerate(incl.map)}
    lifted = ContMap(f.source, xd, tuple(pos[y] for y in f.map))
    if lifted.then(incl).map != f.map:
        raise InternalInconsistency("i_D ∘ f̂ differs from f")
    if not is_locally_closed_map(lifted):
        raise InternalInconsistency("f̂ is not locally closed")
    matches = [g for g in continuous_maps(f.source, xd) if g.then(incl).map == f.map]
    return Coreflection(lifted, matches == [lifted])


def inclusion_matches_chi(x: FinSpace) -> bool:
    """``𝒫(i_D) = χ_{𝒫X}``: same target algebra and same table."""
    _, incl = td_subspace(x)
    p_incl = powerset_of_map(incl)
    c = chi(powerset_MT(x))
    return p_incl.target == c.target and p_incl.map == c.morphism.map


__all__ = [
    "DMorphismReport",
    "is_D_morphism_MT",
    "cross_check_D",
    "opens_restriction",
    "Chi",
    "chi",
    "Reflection",
    "reflect",
    "Coreflection",
    "td_coreflect",
    "inclusion_matches_chi",
]
