import json

import pytest
from hypothesis import given
from strategies import algebras, spaces

from pointfree import io
from pointfree.errors import InvalidStructure
from pointfree.frame import FrameMorphism
from pointfree.mt import MTMorphism, fixture
from pointfree.order import FinPoset
from pointfree.proximity import ProxMap, identity_prox
from pointfree.space import ContMap, sober_maps


def roundtrip(obj):
    return io.decode(json.loads(io.dumps(io.encode(obj))))


@given(spaces())
def test_space_roundtrip(x):
    assert roundtrip(x) == x


@given(algebras())
def test_mt_roundtrip(m):
    assert roundtrip(m) == m


def test_morphism_roundtrips(sier, c3, two_frame, m4, sier_mt):
    objs = [
        FinPoset.chain(3),
        c3,
        FrameMorphism(c3, two_frame, (0, 1, 1)),
        MTMorphism(sier_mt, sier_mt, (0, 1, 2, 3)),
        identity_prox(m4),
        ContMap(sier, sier, (0, 0)),
        sober_maps(sier, sier)[0],
        (sier, m4),
    ]
    for o in objs:
        back = roundtrip(o)
        assert io.encode(back) == io.encode(o)


def test_short_forms():
    assert io.decode({"atoms": 2, "opens": [[], [0, 1]]}) == fixture("M4")
    assert io.decode({"points": 1, "opens": [[], [0]]}).n == 1
    assert isinstance(io.decode({"n": 2, "leq": [[1, 1], [0, 1]]}), FinPoset)


def test_elements_as_masks_or_lists():
    a = io.decode({"atoms": 2, "opens": [0, [1], 3]})
    assert a == fixture("SIER")


def test_prox_from_lc(m4, m2):
    f = io.decode({"kind": "prox", "src": io.encode(m4), "dst": io.encode(m2), "lc": [[[], []], [[0, 1], [0]]]})
    assert isinstance(f, ProxMap) and f.map == (0, 0, 0, 1)


@pytest.mark.parametrize("bad", [[], {"kind": "nope"}, {"atoms": 2}, {"atoms": 2, "opens": [[], [0]]}, {"x": 1}])
def test_malformed(bad):
    with pytest.raises(InvalidStructure):
        io.decode(bad)


def test_dumps_is_canonical(m4):
    a = io.dumps({"b": 1, "a": io.encode(m4)})
    assert a.endswith("\n") and a.index('"a"') < a.index('"b"')


def test_dot(c3, sier, m4):
    assert io.to_dot(c3).startswith("digraph")
    assert "->" in io.to_dot(sier)
    assert io.to_dot(m4).count("->") == 2
    with pytest.raises(TypeError):
        io.to_dot(3)
