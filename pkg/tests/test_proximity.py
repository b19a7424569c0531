from hypothesis import given
from hypothesis import strategies as st
from strategies import algebras

from pointfree.generators import all_mt
from pointfree.mt import MTAlgebra, MTMorphism, fixture, is_MT_morphism, is_TD
from pointfree.proximity import (
    ProxMap,
    brute_force_proximity_morphisms,
    check_S_axioms,
    classify_morphism,
    cons_below,
    derived_properties,
    enumerate_proximity_morphisms,
    equivalent_formulations,
    gamma,
    gamma_literal,
    identity_prox,
    is_deVries,
    is_proximity_morphism,
    star,
)

ALGEBRAS_2 = all_mt(2)


def example_pair():
    m4, two = fixture("M4"), fixture("2")
    (f,) = [f for f in enumerate_proximity_morphisms(m4, two) if f.map == (0, 0, 0, 1)]
    (g,) = [g for g in enumerate_proximity_morphisms(two, m4) if g.map == (0, 3)]
    return m4, two, f, g


def test_cons_below_m4(m4):
    cb = cons_below(m4)
    assert cb.holds(0b01, 0b11)
    assert not cb.holds(0b01, 0b01)


def test_cons_below_is_order_on_sierpinski(sier_mt):
    cb = cons_below(sier_mt)
    assert all(cb.holds(a, b) == (a & ~b == 0) for a in range(4) for b in range(4))


def test_de_vries(m2, m4, sier_mt):
    assert not is_deVries(m4)
    assert is_deVries(sier_mt) and is_deVries(m2)


def test_identity_prox(m2, m4, sier_mt):
    assert identity_prox(m4).map == (0, 0, 0, 3)  # collapses to interior
    assert identity_prox(m4).map == m4.box_table
    assert identity_prox(sier_mt).map == (0, 1, 2, 3)
    assert identity_prox(m2).map == (0, 1)
    for m in (m2, m4, sier_mt):
        assert is_proximity_morphism(identity_prox(m)).ok


def test_p2_failure_witness(sier_mt):
    rep = is_proximity_morphism(ProxMap(sier_mt, sier_mt, (0, 3, 3, 0)))
    assert not rep.ok
    assert not rep.p2


def test_constructor_accepts_p4_violations(m4, m2):
    # candidate tables are constructible; verification is separate
    f = ProxMap(m4, m2, (0, 1, 0, 1))
    assert not f.verified and not f.report.p4


def test_example_two_isos():
    m4, two, f, g = example_pair()
    assert star(g, f).map == identity_prox(m4).map
    assert star(f, g).map == identity_prox(two).map
    cf, cg = classify_morphism(f), classify_morphism(g)
    assert cf.iso and not cf.injective
    assert cg.iso and not cg.surjective


def test_derived_on_example():
    _, _, f, g = example_pair()
    assert derived_properties(f).ok and derived_properties(g).ok


def test_formulations_agree_on_identity_table(m4):
    # the identity table is not 1_M here, yet the three formulations agree
    rep = equivalent_formulations(ProxMap(m4, m4, (0, 1, 2, 3)))
    assert rep.equivalent


def test_enumeration_counts(m2):
    assert [f.map for f in enumerate_proximity_morphisms(m2, m2)] == [(0, 1)]


def test_enumeration_matches_brute_force():
    for a in ALGEBRAS_2:
        for b in ALGEBRAS_2:
            assert [f.map for f in enumerate_proximity_morphisms(a, b)] == [
                f.map for f in brute_force_proximity_morphisms(a, b)
            ]


def test_order_isomorphism_need_not_be_iso(sier_mt):
    # identity table from Sierpiński to the discrete algebra: a proximity
    # morphism and an order-isomorphism whose inverse is not a proximity map
    disc = MTAlgebra(2, frozenset(range(4)))
    f = ProxMap(sier_mt, disc, (0, 1, 2, 3))
    assert f.verified
    c = classify_morphism(f)
    assert c.order_iso and not c.iso
    inv = ProxMap(disc, sier_mt, (0, 1, 2, 3))
    assert not inv.verified


def test_gamma_precomposes_identity():
    m4, two = fixture("M4"), fixture("2")
    g = MTMorphism(m4, two, (0, 1, 0, 1))
    assert is_MT_morphism(g)
    # 1_N ∘ g keeps the atom {p} at 1, which the locally closed elements below cannot produce
    lit = gamma_literal(g)
    assert not lit.verified and not lit.report.p4
    assert gamma(g).map == (0, 0, 0, 1)
    assert gamma(g).verified


@given(st.sampled_from(ALGEBRAS_2), st.sampled_from(ALGEBRAS_2), st.data())
def test_identity_is_neutral(a, b, data):
    homs = enumerate_proximity_morphisms(a, b)
    f = data.draw(st.sampled_from(homs))
    assert star(identity_prox(b), f).map == f.map == star(f, identity_prox(a)).map


@given(st.sampled_from(ALGEBRAS_2), st.sampled_from(ALGEBRAS_2), st.sampled_from(ALGEBRAS_2), st.data())
def test_star_associative(a, b, c, data):
    f = data.draw(st.sampled_from(enumerate_proximity_morphisms(a, b)))
    g = data.draw(st.sampled_from(enumerate_proximity_morphisms(b, c)))
    h = data.draw(st.sampled_from(enumerate_proximity_morphisms(c, c)))
    assert star(h, star(g, f)).map == star(star(h, g), f).map


@given(algebras())
def test_s_axioms_and_de_vries(m):
    assert all(check_S_axioms(m).values())
    assert is_deVries(m) == is_TD(m)
