import pytest

from pointfree.frame import (
    Frame,
    FrameMorphism,
    frame_morphisms,
    heyting_implication,
    identity_morphism,
    is_D_morphism_frame,
    is_frame_morphism,
    is_slicing_filter,
    prime_elements,
    pt_space,
    ptD_space,
    slicing_characterizations,
    slicing_filters,
)
from pointfree.generators import gen_frames
from pointfree.space import ContMap, FinSpace, is_homeomorphism


def test_heyting(c3, d4):
    assert heyting_implication(c3, 1, 0) == 0
    assert all(heyting_implication(c3, u, u) == c3.top for u in range(c3.n))
    # u -> v = v on the square
    assert heyting_implication(d4, 1, 2) == 2


def test_frame_morphisms_on_chain(c3, two_frame):
    assert is_frame_morphism(identity_morphism(c3))
    assert is_frame_morphism(FrameMorphism(c3, two_frame, (0, 1, 1)))
    assert is_frame_morphism(FrameMorphism(c3, two_frame, (0, 0, 1)))
    bad = is_frame_morphism(FrameMorphism(c3, two_frame, (1, 0, 1)))
    assert not bad and bad.witness == ("bottom", 0)


def test_primes(c3, d4, two_frame):
    assert prime_elements(c3) == (0, 1)
    assert prime_elements(d4) == (1, 2)
    assert prime_elements(two_frame) == (0,)


def test_spectra(c3, d4, two_frame):
    sier = FinSpace(2, frozenset({0, 1, 3}))
    assert pt_space(c3).space == sier
    assert pt_space(d4).space.opens == frozenset(range(4))
    assert pt_space(two_frame).space.n == 1


def test_slicing(c3, d4, two_frame):
    for fr in (c3, d4, two_frame):
        assert len(slicing_filters(fr)) == len(prime_elements(fr))
        assert all(is_slicing_filter(fr, p.filter) for p in slicing_filters(fr))


def test_ptd_equals_pt_on_finite_frames():
    for fr in gen_frames(4):
        assert ptD_space(fr).primes == pt_space(fr).primes
        a, b, c = slicing_characterizations(fr)
        assert a == b == c


def test_d_morphism_small(c3, two_frame):
    assert is_D_morphism_frame(identity_morphism(c3))
    assert is_D_morphism_frame(FrameMorphism(c3, two_frame, (0, 1, 1)))


def test_enumeration_matches_brute_force():
    from itertools import product

    # frames of size at most 5 keep the product search small
    frames = [f for f in gen_frames(3) if f.n <= 5]
    for a in frames:
        for b in frames:
            found = {f.map for f in frame_morphisms(a, b)}
            brute = {
                t for t in product(range(b.n), repeat=a.n) if is_frame_morphism(FrameMorphism(a, b, t))
            }
            assert found == brute


def test_spectrum_of_downsets_is_alexandrov():
    # the σ image of a spatial frame reproduces it
    for fr in gen_frames(4):
        spec = pt_space(fr)
        assert len(set(spec.opens_of)) == fr.n
        ident = ContMap(spec.space, spec.space, tuple(range(spec.space.n)))
        assert is_homeomorphism(ident)


def test_of_sets_rejects_non_lattice():
    from pointfree.errors import PointfreeError

    with pytest.raises(PointfreeError):
        Frame.of_sets([0, 1, 2])
