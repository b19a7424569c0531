"""Command-line interface.

Exit status: 0 when everything checked passes, 1 when a check fails,
2 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from pointfree import io
from pointfree.bits import to_list
from pointfree.checks import REGISTRY, RunConfig, replay, run_checks
from pointfree.dmorph import cross_check_D, is_D_morphism_MT, reflect, td_coreflect
from pointfree.envelope import funayama
from pointfree.errors import InvalidStructure, PointfreeError
from pointfree.frame import (
    Frame,
    FrameMorphism,
    is_D_morphism_frame,
    is_frame_morphism,
    pt_space,
    ptD_space,
)
from pointfree.mt import MTAlgebra, MTMorphism, is_T0, is_TD, kuratowski_failure
from pointfree.proximity import ProxMap, classify_morphism, star
from pointfree.sobercat import Pp, ats, sober_compose
from pointfree.space import ContMap, FinSpace, SoberMap, is_sober, soberify, td_subspace

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path: str, *kinds):
    try:
        obj = io.load(path)
    except FileNotFoundError:
        raise InputError(f"{path}: no such file") from None
    except PointfreeError as exc:
        raise InputError(f"{path}: {exc}") from None
    if kinds and not isinstance(obj, kinds):
        names = " or ".join(k.__name__ for k in kinds)
        raise InputError(f"{path}: expected {names}, got {type(obj).__name__}")
    return obj


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(obj) -> None:
    sys.stdout.write(io.dumps(obj))


def _frame_of(obj) -> Frame:
    if isinstance(obj, Frame):
        return obj
    if isinstance(obj, MTAlgebra):
        return Frame.of_sets(obj.opens)
    if isinstance(obj, FinSpace):
        return Frame.of_sets(obj.opens)
    raise InputError("expected a frame, an MT-algebra or a space")


def cmd_envelope(args) -> int:
    frame = _frame_of(_load(args.file))
    fe = funayama(frame)
    _emit({"envelope": io.encode(fe.mt), "embed": [to_list(e) for e in fe.embed]})
    return EXIT_OK


def cmd_spectrum(args) -> int:
    frame = _frame_of(_load(args.file))
    spec = ptD_space(frame) if args.ptd else pt_space(frame)
    if args.dot:
        sys.stdout.write(io.to_dot(spec.space, "spectrum"))
        return EXIT_OK
    _emit({"space": io.encode(spec.space), "primes": list(spec.primes), "opens_of": [to_list(u) for u in spec.opens_of]})
    return EXIT_OK


def cmd_soberify(args) -> int:
    x = _load(args.file, FinSpace)
    sob = soberify(x)
    _emit({"space": io.encode(sob.space), "lambda": list(sob.lam.map), "sober": is_sober(x)})
    return EXIT_OK


def cmd_coreflect(args) -> int:
    obj = _load(args.file, FinSpace, ContMap)
    if isinstance(obj, FinSpace):
        xd, incl = td_subspace(obj)
        _emit({"space": io.encode(xd), "inclusion": list(incl.map)})
        return EXIT_OK
    r = td_coreflect(obj)
    _emit({"map": io.encode(r.lifted), "unique": r.unique})
    return EXIT_OK if r.unique else EXIT_FAIL


def cmd_reflect(args) -> int:
    f = _load(args.file, MTMorphism)
    r = reflect(f)
    _emit({"map": io.encode(r.lifted), "unique": r.unique})
    return EXIT_OK if r.unique else EXIT_FAIL


def _verdict(v) -> dict:
    out = {"ok": bool(v)}
    if not v:
        out["witness"] = v.witness
        out["reason"] = v.reason
    return out


def cmd_check(args) -> int:
    if args.what == "replay":
        payload = _read_json(args.file)
        if not isinstance(payload, dict) or "check" not in payload:
            raise InputError(f"{args.file}: not a counterexample payload")
        ok = replay(payload)
        _emit({"check": payload.get("check"), "passed": ok})
        return EXIT_OK if ok else EXIT_FAIL
    if args.what == "mt":
        raw = _read_json(args.file)
        try:
            m = io.decode(raw)
        except InvalidStructure as exc:
            if not (isinstance(raw, dict) and "atoms" in raw and "opens" in raw):
                raise InputError(f"{args.file}: {exc}") from None
            _emit({"valid": False, "reason": str(exc)})
            return EXIT_FAIL
        if not isinstance(m, MTAlgebra):
            raise InputError(f"{args.file}: expected MTAlgebra, got {type(m).__name__}")
        bad = kuratowski_failure(m)
        out = {"valid": bad is None, "T0": is_T0(m), "TD": is_TD(m)}
        if bad is not None:
            out["reason"] = f"{bad[0]} fails at {bad[1]}"
        _emit(out)
        return EXIT_OK if bad is None else EXIT_FAIL
    if args.what == "prox":
        f = _load(args.file, ProxMap)
        rep = f.report
        out = {name: _verdict(getattr(rep, name)) for name in ("p1", "p2", "p3", "p4")}
        out["ok"] = rep.ok
        if rep.ok:
            c = classify_morphism(f)
            out["classification"] = {"iso": c.iso, "mono": c.mono, "epi": c.epi}
        _emit(out)
        return EXIT_OK if rep.ok else EXIT_FAIL
    if args.what == "d-morphism":
        f = _load(args.file, MTMorphism)
        rep = is_D_morphism_MT(f)
        out = {"is_D": rep.is_D, "witnesses": list(rep.witnesses)}
        if is_T0(f.source) and is_T0(f.target):
            out["frame_side_agrees"] = cross_check_D(f) == rep.is_D
        _emit(out)
        return EXIT_OK if rep.is_D else EXIT_FAIL
    if args.what == "frame-morphism":
        f = _load(args.file, FrameMorphism)
        v = is_frame_morphism(f)
        out = _verdict(v)
        if v:
            out["D"] = _verdict(is_D_morphism_frame(f))
        _emit(out)
        return EXIT_OK if v else EXIT_FAIL
    raise InputError(f"unknown check {args.what!r}")


def cmd_compose(args) -> int:
    if args.sober:
        f = _load(args.f, SoberMap)
        g = _load(args.g, SoberMap)
        _emit(io.encode(sober_compose(g, f)))
        return EXIT_OK
    f = _load(args.f, ProxMap)
    g = _load(args.g, ProxMap)
    _emit(io.encode(star(g, f)))
    return EXIT_OK


def cmd_dualize(args) -> int:
    if args.to_space:
        f = _load(args.file, ProxMap)
        if not f.verified:
            raise InputError("not a proximity morphism")
        _emit(io.encode(ats(f)))
    else:
        f = _load(args.file, SoberMap)
        _emit(io.encode(Pp(f)))
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = RunConfig(
        max_points=args.max_points,
        max_atoms=args.max_atoms,
        seed=args.seed,
        jobs=args.jobs,
    )
    report = run_checks(cfg, only=args.only or None)
    text = io.dumps(report)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_list(args) -> int:
    for c in REGISTRY:
        print(f"{c.id}\t{c.topic}")
    return EXIT_OK


def cmd_export_dot(args) -> int:
    obj = _load(args.file)
    try:
        sys.stdout.write(io.to_dot(obj, args.name))
    except TypeError as exc:
        raise InputError(str(exc)) from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pointfree", description="Finite frames, MT-algebras and their dualities.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("envelope", help="Funayama envelope of a frame")
    s.add_argument("file")
    s.set_defaults(func=cmd_envelope)

    s = sub.add_parser("spectrum", help="space of points of a frame")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--pt", action="store_true", help="all points (default)")
    g.add_argument("--ptd", action="store_true", help="slicing points only")
    s.add_argument("--dot", action="store_true", help="print DOT instead of JSON")
    s.add_argument("file")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("soberify", help="soberification and the map λ")
    s.add_argument("file")
    s.set_defaults(func=cmd_soberify)

    s = sub.add_parser("coreflect", help="subspace of locally closed points, or lift a map into it")
    s.add_argument("file")
    s.set_defaults(func=cmd_coreflect)

    s = sub.add_parser("reflect", help="factor a D-morphism through the T_D reflection")
    s.add_argument("file")
    s.set_defaults(func=cmd_reflect)

    s = sub.add_parser("check", help="validate an object or replay a counterexample")
    s.add_argument("what", choices=["mt", "prox", "d-morphism", "frame-morphism", "replay"])
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("compose", help="g ⋆ f for proximity maps, g • f with --sober")
    s.add_argument("--sober", action="store_true")
    s.add_argument("f")
    s.add_argument("g")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("dualize", help="move a morphism across the duality")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--to-space", action="store_true", help="proximity map to sober map")
    g.add_argument("--to-algebra", action="store_true", help="sober map to proximity map")
    s.add_argument("file")
    s.set_defaults(func=cmd_dualize)

    s = sub.add_parser("verify", help="run the property checks")
    s.add_argument("--only", action="append", metavar="ID")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-atoms", type=int, default=3)
    s.add_argument("--max-points", type=int, default=3)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("list-checks", help="list registered check ids")
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("export-dot", help="Graphviz rendering of a poset, frame, space or algebra")
    s.add_argument("--name", default="g")
    s.add_argument("file")
    s.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_INPUT
    except (PointfreeError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
