"""JSON and DOT I/O.

Every encoded object carries a ``kind`` tag. Decoding also accepts the
untagged short forms ``{"n", "leq"}`` (poset), ``{"atoms", "opens"}``
(MT-algebra) and ``{"points", "opens"}`` (space). Elements of MT-algebras
are written as lists of atom indices; bare integers are read as bitmasks.
"""

from __future__ import annotations

import json
from pathlib import Path

from pointfree.bits import mask_of, to_list
from pointfree.errors import InvalidStructure
from pointfree.frame import Frame, FrameMorphism
from pointfree.mt import MTAlgebra, MTMorphism
from pointfree.order import FinLattice, FinPoset, hasse_dot
from pointfree.proximity import ProxMap
from pointfree.space import ContMap, FinSpace, SoberMap


def _elem(v) -> int:
    if isinstance(v, bool):
        raise InvalidStructure("booleans are not elements")
    if isinstance(v, int):
        return v
    if isinstance(v, list):
        return mask_of(v)
    raise InvalidStructure(f"cannot read element {v!r}")


def encode(obj) -> dict:
    if isinstance(obj, int) and not isinstance(obj, bool):
        return {"kind": "int", "value": obj}
    if isinstance(obj, FinPoset):
        return {"kind": "poset", "n": obj.n, "leq": [list(r) for r in obj.leq]}
    if isinstance(obj, FinLattice):
        return {"kind": "lattice", "n": obj.n, "leq": [list(r) for r in obj.poset.leq]}
    if isinstance(obj, Frame):
        out = {"kind": "frame", "n": obj.n, "leq": [list(r) for r in obj.lattice.poset.leq]}
        if obj.sets is not None:
            out["sets"] = [to_list(s) for s in obj.sets]
        return out
    if isinstance(obj, MTAlgebra):
        out = {"kind": "mt", "atoms": obj.n, "opens": [to_list(u) for u in obj.sorted_opens]}
        if obj.degenerate:
            out["degenerate"] = True
        return out
    if isinstance(obj, FinSpace):
        return {"kind": "space", "points": obj.n, "opens": [to_list(u) for u in obj.sorted_opens]}
    if isinstance(obj, FrameMorphism):
        return {"kind": "frame-morphism", "src": encode(obj.source), "dst": encode(obj.target), "map": list(obj.map)}
    if isinstance(obj, MTMorphism):
        return {"kind": "mt-morphism", "src": encode(obj.source), "dst": encode(obj.target), "map": [to_list(v) for v in obj.map]}
    if isinstance(obj, ProxMap):
        return {"kind": "prox", "src": encode(obj.source), "dst": encode(obj.target), "map": [to_list(v) for v in obj.map]}
    if isinstance(obj, ContMap):
        return {"kind": "cont", "src": encode(obj.source), "dst": encode(obj.target), "map": list(obj.map)}
    if isinstance(obj, SoberMap):
        return {"kind": "sober", "src": encode(obj.source), "dst": encode(obj.target), "map": list(obj.carrier.map)}
    if isinstance(obj, (tuple, list)):
        return {"kind": "tuple", "items": [encode(x) for x in obj]}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _kind(d: dict) -> str:
    if "kind" in d:
        return d["kind"]
    if "atoms" in d:
        return "mt"
    if "points" in d:
        return "space"
    if "n" in d and "leq" in d:
        return "frame" if "sets" in d else "poset"
    raise InvalidStructure("cannot tell what this object is")


def decode(d):
    if not isinstance(d, dict):
        raise InvalidStructure("expected a JSON object")
    try:
        return _decode(d)
    except (KeyError, TypeError) as exc:
        raise InvalidStructure(f"malformed input: {exc}") from None


def _decode(d: dict):
    kind = _kind(d)
    if kind == "poset":
        return FinPoset(d["n"], tuple(tuple(bool(x) for x in r) for r in d["leq"]))
    if kind == "lattice":
        return FinLattice.from_poset(FinPoset(d["n"], tuple(tuple(bool(x) for x in r) for r in d["leq"])))
    if kind == "frame":
        if "leq" not in d:
            return Frame.of_sets(_elem(s) for s in d["sets"])
        lat = FinLattice.from_poset(FinPoset(d["n"], tuple(tuple(bool(x) for x in r) for r in d["leq"])))
        sets = tuple(_elem(s) for s in d["sets"]) if "sets" in d else None
        return Frame(lat, sets)
    if kind == "mt":
        return MTAlgebra(d["atoms"], frozenset(_elem(u) for u in d["opens"]), degenerate=bool(d.get("degenerate")))
    if kind == "space":
        return FinSpace(d["points"], frozenset(_elem(u) for u in d["opens"]))
    if kind == "tuple":
        return tuple(decode(x) for x in d["items"])
    if kind == "int":
        return int(d["value"])
    src, dst = decode(d["src"]), decode(d["dst"])
    if kind == "frame-morphism":
        return FrameMorphism(src, dst, tuple(d["map"]))
    if kind == "mt-morphism":
        return MTMorphism(src, dst, tuple(_elem(v) for v in d["map"]))
    if kind == "prox":
        if "lc" in d:
            return ProxMap.from_lc(src, dst, {_elem(k): _elem(v) for k, v in d["lc"]})
        return ProxMap(src, dst, tuple(_elem(v) for v in d["map"]))
    if kind == "cont":
        return ContMap(src, dst, tuple(d["map"]))
    if kind == "sober":
        from pointfree.space import soberification

        return SoberMap(src, dst, ContMap(src, soberification(dst), tuple(d["map"])))
    raise InvalidStructure(f"unknown kind {kind!r}")


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load(path) -> object:
    try:
        raw = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidStructure(f"{path}: {exc}") from None
    return decode(raw)


def space_dot(x: FinSpace, name: str = "space") -> str:
    """Specialization order of the points, ``x → y`` when ``x ∈ cl{y}``."""
    leq = tuple(tuple(x.specialization_le(a, b) for b in range(x.n)) for a in range(x.n))
    try:
        return hasse_dot(FinPoset(x.n, leq), name=name)
    except InvalidStructure:
        # not T_0: draw every strict relation
        lines = [f"digraph {name} {{"] + [f"  {a};" for a in range(x.n)]
        lines += [f"  {a} -> {b};" for a in range(x.n) for b in range(x.n) if a != b and leq[a][b]]
        return "\n".join(lines) + "\n}\n"


def to_dot(obj, name: str = "g") -> str:
    if isinstance(obj, FinPoset):
        return hasse_dot(obj, name=name)
    if isinstance(obj, FinLattice):
        return hasse_dot(obj.poset, name=name)
    if isinstance(obj, Frame):
        labels = None if obj.sets is None else ["{" + ",".join(map(str, to_list(s))) + "}" for s in obj.sets]
        return hasse_dot(obj.lattice.poset, labels=labels, name=name)
    if isinstance(obj, FinSpace):
        return space_dot(obj, name)
    if isinstance(obj, MTAlgebra):
        return space_dot(FinSpace(obj.n, obj.opens), name)
    raise TypeError(f"no DOT rendering for {type(obj).__name__}")


__all__ = ["encode", "decode", "dumps", "load", "to_dot", "space_dot"]
