import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import algebras

from pointfree.envelope import (
    boolean_envelope,
    check_universal_property,
    funayama,
    lift_frame_morphism,
    phi,
    rho_natural,
    td_iff_envelope,
    transport_frame,
    triangle_on_envelope,
    triangle_on_opens,
    zeta,
    zeta_natural,
)
from pointfree.errors import SourceTargetMismatch
from pointfree.frame import Frame, FrameMorphism, frame_morphisms, identity_morphism
from pointfree.generators import gen_frames
from pointfree.mt import MTAlgebra, fixture, is_TD, opens_frame
from pointfree.proximity import (
    enumerate_proximity_morphisms,
    identity_prox,
    is_deVries,
    star,
)

FRAMES = gen_frames(3)


def test_boolean_envelope_chain(c3):
    env = boolean_envelope(c3)
    assert env.k == 2
    # m ↦ {m}, 1 ↦ {m, 1}
    assert env.embed == (0, 0b01, 0b11)


def test_boolean_envelope_small(two_frame, d4):
    assert boolean_envelope(two_frame).k == 1
    env = boolean_envelope(d4)
    assert env.k == 2 and sorted(env.embed) == [0, 1, 2, 3]


@pytest.mark.parametrize("table", [(0, 1, 1), (0, 0, 1)])
def test_universal_property_on_chain(c3, table):
    _, unique = check_universal_property(boolean_envelope(c3), 1, table)
    assert unique


def test_funayama_examples(c3, two_frame, d4):
    # Sierpiński with the atoms listed the other way round
    assert funayama(c3).mt.opens == frozenset({0, 0b01, 0b11})
    swap = {0: 0, 1: 2, 2: 1, 3: 3}
    assert MTAlgebra(2, frozenset(swap[u] for u in funayama(c3).mt.opens)) == fixture("SIER")
    assert funayama(two_frame).mt == fixture("2")
    assert funayama(d4).mt == MTAlgebra(2, frozenset(range(4)))


def test_lift_identity_is_prox_identity(c3):
    assert lift_frame_morphism(identity_morphism(c3)).map == identity_prox(funayama(c3).mt).map


@pytest.mark.parametrize("table", [(0, 1, 1), (0, 0, 1)])
def test_lift_on_chain(c3, two_frame, table):
    assert lift_frame_morphism(FrameMorphism(c3, two_frame, table)).verified


def test_zeta_phi_on_m4(m4):
    z, p = zeta(m4), phi(m4)
    assert z.source == fixture("2")
    comp = star(z, p)
    # the atom goes to 0, which is not the atom but is what 1_M gives
    assert comp.map[0b01] == 0 != 0b01
    assert comp.map == identity_prox(m4).map


def test_zeta_phi_inverse_on_sierpinski(sier_mt):
    z, p = zeta(sier_mt), phi(sier_mt)
    assert sorted(z.map) == list(range(4))
    assert star(z, p).map == identity_prox(sier_mt).map
    assert star(p, z).map == identity_prox(z.source).map


def test_td_iff_envelope(m2, m4, sier_mt):
    assert not td_iff_envelope(m4)
    assert td_iff_envelope(sier_mt) and td_iff_envelope(m2)


def test_transport_rejects_wrong_frames(c3, m2):
    h = identity_morphism(c3)
    with pytest.raises(SourceTargetMismatch):
        transport_frame(h, m2, m2)


@pytest.mark.parametrize("frame", FRAMES)
def test_triangles(frame):
    assert triangle_on_envelope(frame)
    assert triangle_on_opens(funayama(frame).mt)


@given(st.sampled_from(FRAMES), st.sampled_from(FRAMES), st.data())
def test_rho_zeta_natural(a, b, data):
    homs = frame_morphisms(a, b)
    h = data.draw(st.sampled_from(homs))
    assert rho_natural(h)
    assert zeta_natural(lift_frame_morphism(h))


@given(algebras())
def test_three_td_characterizations(m):
    assert is_TD(m) == is_deVries(m) == td_iff_envelope(m)


@given(algebras(2), algebras(2), st.data())
def test_zeta_natural_on_prox(a, b, data):
    g = data.draw(st.sampled_from(enumerate_proximity_morphisms(a, b)))
    assert zeta_natural(g)


def test_opens_frame_roundtrip(sier_mt):
    assert Frame.of_sets(sier_mt.opens).n == opens_frame(sier_mt).n == 3
