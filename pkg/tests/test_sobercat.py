import pytest
from hypothesis import given
from hypothesis import strategies as st

from pointfree.generators import all_mt, all_spaces
from pointfree.mt import at_space, is_TD
from pointfree.proximity import (
    classify_morphism,
    enumerate_proximity_morphisms,
    identity_prox,
    star,
)
from pointfree.sobercat import (
    Lambda,
    Pp,
    ats,
    eps_hat,
    eps_natural,
    equivalence_check,
    eta_hat,
    eta_natural,
    identity_sober,
    lift_h,
    sober_compose,
    sober_iso,
)
from pointfree.space import continuous_maps, is_TD_space, powerset_MT, sober_maps

SPACES_2 = all_spaces(2)
SPACES_3 = all_spaces(3)
ALGEBRAS_2 = all_mt(2)


def test_lambda_is_identity_for_compose(sier):
    lam = identity_sober(sier)
    assert sober_compose(lam, lam) == lam


def test_sober_iso_examples(indiscrete, point, sier):
    (f,) = sober_maps(indiscrete, point)
    assert sober_iso(f).iso
    assert not sober_iso(sober_maps(sier, point)[0]).iso


def test_lift_h_examples(indiscrete, point):
    assert lift_h(indiscrete).table == (0, 0, 0, 1)
    assert lift_h(point).table == (0, 1)


def test_pp_of_identity(sier, indiscrete):
    for x in (sier, indiscrete):
        assert Pp(identity_sober(x)).map == identity_prox(powerset_MT(x)).map


def test_ats_of_identity(m4, sier_mt):
    for m in (m4, sier_mt):
        assert ats(identity_prox(m)) == identity_sober(at_space(m))


def test_ats_of_example_iso(m4, m2):
    (f,) = [f for f in enumerate_proximity_morphisms(m4, m2) if f.map == (0, 0, 0, 1)]
    assert sober_iso(ats(f)).iso


@pytest.mark.parametrize("x", SPACES_3)
def test_units(x):
    assert sober_iso(eps_hat(x)).iso
    assert classify_morphism(eta_hat(powerset_MT(x))).iso


@pytest.mark.parametrize("x", SPACES_3)
def test_td_closure(x):
    m = powerset_MT(x)
    assert is_TD(m) == is_TD_space(x) == is_TD_space(at_space(m))


@given(st.sampled_from(SPACES_2), st.sampled_from(SPACES_2), st.sampled_from(SPACES_2), st.data())
def test_lambda_functor(x, y, z, data):
    f = data.draw(st.sampled_from(continuous_maps(x, y)))
    g = data.draw(st.sampled_from(continuous_maps(y, z)))
    assert sober_compose(Lambda(g), Lambda(f)) == Lambda(f.then(g))


@given(st.sampled_from(SPACES_2), st.sampled_from(SPACES_2), st.sampled_from(SPACES_2), st.data())
def test_sober_associative(x, y, z, data):
    f = data.draw(st.sampled_from(sober_maps(x, y)))
    g = data.draw(st.sampled_from(sober_maps(y, z)))
    h = data.draw(st.sampled_from(sober_maps(z, z)))
    assert sober_compose(h, sober_compose(g, f)) == sober_compose(sober_compose(h, g), f)


@given(st.sampled_from(SPACES_2), st.sampled_from(SPACES_2), st.sampled_from(SPACES_2), st.data())
def test_pp_reverses_composition(x, y, z, data):
    f = data.draw(st.sampled_from(sober_maps(x, y)))
    g = data.draw(st.sampled_from(sober_maps(y, z)))
    assert Pp(sober_compose(g, f)).map == star(Pp(f), Pp(g)).map


@given(st.sampled_from(ALGEBRAS_2), st.sampled_from(ALGEBRAS_2), st.sampled_from(ALGEBRAS_2), st.data())
def test_ats_reverses_composition(a, b, c, data):
    f = data.draw(st.sampled_from(enumerate_proximity_morphisms(a, b)))
    g = data.draw(st.sampled_from(enumerate_proximity_morphisms(b, c)))
    assert ats(star(g, f)) == sober_compose(ats(f), ats(g))


@given(st.sampled_from(SPACES_3), st.sampled_from(SPACES_3), st.data())
def test_eps_natural(x, y, data):
    f = data.draw(st.sampled_from(sober_maps(x, y)))
    assert eps_natural(f)


@given(st.sampled_from(ALGEBRAS_2), st.sampled_from(ALGEBRAS_2), st.data())
def test_eta_natural(a, b, data):
    g = data.draw(st.sampled_from(enumerate_proximity_morphisms(a, b)))
    assert eta_natural(g)


def test_equivalence_report_small(point, m2):
    rep = equivalence_check(spaces=[point], algebras=[m2], sober=sober_maps(point, point), prox=[identity_prox(m2)])
    assert rep.ok and not rep.failures


def test_point_count_duality():
    # proximity morphisms between algebras on ≤2 atoms match sober maps between spaces on ≤2 points
    n_prox = sum(len(enumerate_proximity_morphisms(a, b)) for a in ALGEBRAS_2 for b in ALGEBRAS_2)
    n_sober = sum(len(sober_maps(x, y)) for x in SPACES_2 for y in SPACES_2)
    assert n_prox == n_sober
