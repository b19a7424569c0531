import pytest
from hypothesis import given
from hypothesis import strategies as st

from pointfree.errors import InvalidStructure
from pointfree.generators import gen_posets
from pointfree.order import (
    FinLattice,
    FinPoset,
    covers,
    distributivity_witness,
    downset_lattice,
    downsets,
    is_boolean,
    is_distributive,
    is_order_embedding,
    join_irreducibles,
    macneille_completion,
)


def diamond_m3():
    return FinLattice.from_poset(FinPoset(5, tuple(tuple(i == j or i == 0 or j == 4 for j in range(5)) for i in range(5))))


def test_poset_rejects_cycle():
    with pytest.raises(InvalidStructure):
        FinPoset(2, ((True, True), (True, True)))


def test_poset_rejects_non_transitive():
    leq = ((True, True, False), (False, True, True), (False, False, True))
    with pytest.raises(InvalidStructure):
        FinPoset(3, leq)


def test_covers_chain(c3):
    assert covers(c3.lattice.poset) == {(0, 1), (1, 2)}


def test_covers_square(d4):
    assert covers(d4.lattice.poset) == {(0, 1), (0, 2), (1, 3), (2, 3)}


def test_join_irreducibles(c3, d4, two_frame):
    assert join_irreducibles(c3.lattice) == {1, 2}
    assert join_irreducibles(d4.lattice) == {1, 2}
    assert join_irreducibles(two_frame.lattice) == {1}


@pytest.mark.parametrize("poset,size", [
    (FinPoset.chain(1), 2),
    (FinPoset.antichain(2), 4),
    (FinPoset.chain(2), 3),
])
def test_downset_sizes(poset, size):
    assert downset_lattice(poset).n == size


def test_macneille_antichain():
    lat, emb = macneille_completion(FinPoset.antichain(2))
    assert lat.n == 4
    assert sorted(emb) == [1, 2]
    assert is_boolean(lat)


def test_macneille_empty():
    lat, emb = macneille_completion(FinPoset(0, ()))
    assert lat.n == 1 and emb == ()


def test_macneille_of_lattice_is_bijective(c3):
    lat, emb = macneille_completion(c3.lattice.poset)
    assert lat.n == c3.n and sorted(emb) == list(range(c3.n))


def test_distributive_and_boolean(c3, d4):
    assert is_distributive(c3.lattice) and not is_boolean(c3.lattice)
    assert is_distributive(d4.lattice) and is_boolean(d4.lattice)


def test_m3_not_distributive():
    lat = diamond_m3()
    assert not is_distributive(lat)
    a, b, c = distributivity_witness(lat)
    assert lat.meet[a][lat.join[b][c]] != lat.join[lat.meet[a][b]][lat.meet[a][c]]


def test_poset_counts_up_to_iso():
    assert [len(gen_posets(n)) for n in range(1, 5)] == [1, 2, 5, 16]


@given(st.integers(1, 4), st.data())
def test_macneille_embeds_every_poset(n, data):
    p = data.draw(st.sampled_from(gen_posets(n)))
    lat, emb = macneille_completion(p)
    assert is_order_embedding(p, lat.poset, emb)


@given(st.integers(1, 4), st.data())
def test_downsets_closed(n, data):
    p = data.draw(st.sampled_from(gen_posets(n)))
    ds = set(downsets(p))
    assert all(a | b in ds and a & b in ds for a in ds for b in ds)
