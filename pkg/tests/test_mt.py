import pytest
from hypothesis import given
from strategies import algebras

from pointfree.errors import InvalidStructure
from pointfree.frame import pt_space, ptD_space
from pointfree.generators import all_mt
from pointfree.mt import (
    MTAlgebra,
    MTMorphism,
    at_space,
    atD_space,
    atom_T0_characterization,
    element_families,
    is_MT_morphism,
    is_T0,
    is_TD,
    kuratowski_failure,
    lc_atoms,
    left_adjoint,
    mt_morphisms,
    opens_frame,
    theta,
    theta_prime,
    witness_atom,
)
from pointfree.space import FinSpace, is_homeomorphism


def test_rejects_non_subframe():
    with pytest.raises(InvalidStructure):
        MTAlgebra(2, frozenset({0, 1, 2}))


def test_needs_an_atom():
    with pytest.raises(InvalidStructure):
        MTAlgebra(0, frozenset({0}))


def test_interior_and_closure_on_m4(m4):
    assert m4.box(0b01) == 0
    assert m4.diamond(0b01) == 0b11


def test_families(m4, sier_mt):
    assert element_families(m4).lc == {0, 3}
    assert element_families(sier_mt).lc == {0, 1, 2, 3}
    assert element_families(sier_mt).cons == {0, 1, 2, 3}


def test_separation(m2, m4, sier_mt):
    assert not is_TD(m4) and not is_T0(m4)
    assert is_TD(sier_mt)
    assert is_TD(m2) and is_T0(m2)


def test_at_spaces(m2, m4, sier_mt):
    assert at_space(sier_mt) == FinSpace(2, frozenset({0, 2, 3}))
    assert at_space(m4) == FinSpace(2, frozenset({0, 3}))
    assert at_space(m2).n == 1


def test_at_d(m4, sier_mt):
    assert atD_space(m4)[0].n == 0
    assert atD_space(sier_mt)[0] == at_space(sier_mt)


def test_theta_prime_sierpinski(sier_mt):
    tp = theta_prime(sier_mt)
    assert is_homeomorphism(tp)
    assert sorted(tp.map) == [0, 1]


def test_theta_prime_not_onto_for_m4(m4):
    frame = opens_frame(m4)
    spec = ptD_space(frame)
    # one slicing filter, {1}, but no locally closed atom to hit it
    assert spec.space.n == 1
    assert spec.point(0).elements() == [frame.index_of_set[m4.top]]
    assert lc_atoms(m4) == 0
    assert theta_prime(m4).source.n == 0
    # the atom {p} still lands on that point under θ
    assert theta(m4).map[0] == pt_space(frame).index_of_prime[spec.primes[0]]


def test_witness_atom(m2, sier_mt):
    assert witness_atom(sier_mt, [0b11, 0b10]) == 1
    assert witness_atom(sier_mt, [0b11]) == 0
    assert witness_atom(m2, [1]) == 0


def test_atom_t0_characterization(m2, m4, sier_mt):
    assert atom_T0_characterization(sier_mt)
    assert atom_T0_characterization(m2)
    v = atom_T0_characterization(m4, check_hypothesis=False)
    assert not v and v.witness == m4.top


def test_preimage_tables_are_mt_morphisms(sier_mt):
    for f in mt_morphisms(sier_mt, sier_mt):
        assert is_MT_morphism(f)
    ident = MTMorphism(sier_mt, sier_mt, (0, 1, 2, 3))
    assert left_adjoint(ident) == (0, 1, 2, 3)


def test_non_morphism_detected(sier_mt):
    # swapping the atoms moves the open {y} to a non-open
    assert not is_MT_morphism(MTMorphism(sier_mt, sier_mt, (0, 2, 1, 3)))


def test_mt_count_matches_topologies():
    assert [len([m for m in all_mt(k) if m.n == k]) for k in (1, 2, 3)] == [1, 4, 29]


@given(algebras())
def test_kuratowski_and_families(m):
    fam = m.families
    assert kuratowski_failure(m) is None
    assert fam.opens <= fam.lc <= fam.cons
    assert is_TD(m) == (lc_atoms(m) == m.top)
    assert not is_TD(m) or is_T0(m)


@given(algebras())
def test_theta_prime_homeomorphism(m):
    if is_T0(m):
        assert is_homeomorphism(theta_prime(m))
