import pytest
from hypothesis import given
from strategies import spaces

from pointfree.errors import PointfreeError
from pointfree.mt import dual_map, fixture, is_MT_morphism, is_T0, is_TD
from pointfree.space import (
    ContMap,
    continuous_maps,
    disjoint_sum,
    epsilon,
    is_homeomorphism,
    is_locally_closed_map,
    is_locally_closed_point,
    is_sober,
    is_T0_space,
    is_TD_space,
    lambda_map,
    locally_closed_points,
    powerset_MT,
    powerset_of_map,
    soberification,
    td_subspace,
)


def test_separation(sier, indiscrete, point):
    assert is_locally_closed_point(sier, 0) and is_locally_closed_point(sier, 1)
    assert is_TD_space(sier)
    assert locally_closed_points(indiscrete) == 0
    assert not is_T0_space(indiscrete)
    assert is_TD_space(point)


def test_powerset(sier, indiscrete):
    assert powerset_MT(sier) == fixture("SIER")
    assert powerset_MT(indiscrete) == fixture("M4")


def test_powerset_of_constant_map(sier):
    f = ContMap(sier, sier, (0, 0))
    pf = powerset_of_map(f)
    assert pf.map == (0, 3, 0, 3)
    assert is_MT_morphism(pf)


def test_epsilon(sier, indiscrete, point):
    for x in (sier, indiscrete, point):
        assert is_homeomorphism(epsilon(x))


def test_soberification(sier, indiscrete, point):
    assert is_sober(sier) and is_homeomorphism(lambda_map(sier))
    assert soberification(indiscrete).n == 1
    assert lambda_map(indiscrete).map == (0, 0)
    assert soberification(point) == point


def test_td_subspace(sier, indiscrete):
    assert td_subspace(indiscrete)[0].n == 0
    assert td_subspace(sier)[0] == sier


def test_inclusion_into_indiscrete_not_locally_closed(indiscrete, point):
    v = is_locally_closed_map(ContMap(point, indiscrete, (0,)))
    assert not v and v.witness == 0


def test_maps_between_td_spaces_are_locally_closed(sier, point):
    for x in (sier, point):
        for y in (sier, point):
            assert all(is_locally_closed_map(f) for f in continuous_maps(x, y))


def test_continuity_enforced(sier):
    with pytest.raises(PointfreeError):
        ContMap(sier, sier, (1, 0))


def test_disjoint_sum(sier, indiscrete):
    y = disjoint_sum(sier, indiscrete)
    assert y.n == 4
    assert locally_closed_points(y) == 0b0011


@given(spaces())
def test_space_invariants(x):
    sx = soberification(x)
    assert is_sober(sx)
    assert is_homeomorphism(lambda_map(sx))
    assert is_homeomorphism(lambda_map(x)) == is_sober(x)
    m = powerset_MT(x)
    assert is_TD(m) == is_TD_space(x)
    assert is_T0(m) == is_T0_space(x)
    xd, incl = td_subspace(x)
    assert xd.n == 0 or is_TD_space(xd)


@given(spaces(3), spaces(3))
def test_dual_map_recovers_map(x, y):
    for f in continuous_maps(x, y)[:10]:
        assert dual_map(powerset_of_map(f)).map == f.map
