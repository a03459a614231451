"""Command-line interface: ``om <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arrangement import build_ppc, reduce_crossings, verify_ppc
from .arrangement.analysis import extract_cocircuits
from .arrangement.ppc import PPCConfiguration
from .errors import OMError, ParseError
from .io import dump_map, read_input, serialize_chirotope, serialize_points
from .mutation import explore_flip_graph, flip, mutations
from .polytope import face_report
from .realization import PointConfig, chirotope_from_points, circle_picture, cyclic_points, random_realizable
from .render import render_svg
from .signs import Chirotope, chirotope_to_cocircuits, validate_chirotope
from .simplicial import brute_force_simplicial, find_simplicial_reorientation


def _chirotope(path) -> Chirotope:
    obj = read_input(path)
    if isinstance(obj, PointConfig):
        return chirotope_from_points(obj)
    if isinstance(obj, PPCConfiguration):
        return obj.chirotope
    return obj


def _map(path) -> PPCConfiguration:
    obj = read_input(path)
    if not isinstance(obj, PPCConfiguration):
        raise ParseError(f"{path}: expected a map file")
    return obj


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(args, data: dict, lines: list[str]):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_check(args) -> int:
    chi = _chirotope(args.file)
    rep = validate_chirotope(chi)
    lines = [f"n={chi.n} r={chi.rank} alternating={rep.alternating} uniform={rep.uniform} valid={rep.valid}"]
    if rep.axioms is not None:
        for axiom, witness in rep.axioms.violations[:10]:
            lines.append(f"  {axiom}: " + " ".join(str(w) for w in witness))
    _emit(args, rep.as_dict(), lines)
    return 0 if rep.valid else 1


def cmd_polytope(args) -> int:
    chi = _chirotope(args.file)
    rep = face_report(chi)
    lines = [f"acyclic={rep.acyclic} matroid_polytope={rep.is_polytope}",
             "extreme points: " + " ".join(map(str, sorted(rep.extreme_points))),
             "facets: " + " ".join("".join(map(str, sorted(f))) if chi.n < 10 else str(sorted(f))
                                   for f in sorted(sorted(f) for f in rep.facets))]
    _emit(args, rep.as_dict(), lines)
    return 0 if rep.is_polytope else 1


def cmd_ppc_build(args) -> int:
    chi = _chirotope(args.file)
    cfg = build_ppc(chi)
    data = {"curves": cfg.n_curves, "counts": cfg.map.counts()}
    ok = True
    if args.verify:
        rep = verify_ppc(cfg)
        same = extract_cocircuits(cfg) == chirotope_to_cocircuits(chi)
        data["verify"] = rep.as_dict()
        data["cocircuits_match"] = same
        ok = rep.ok and same
    if args.out:
        Path(args.out).write_text(dump_map(cfg))
    if args.svg:
        Path(args.svg).write_bytes(render_svg(cfg))
    V, E, F, C = cfg.map.counts()
    lines = [f"built {cfg.n_curves} curves: V={V} E={E} F={F}"]
    if args.verify:
        lines.append(f"verify: {'ok' if data['verify']['ok'] else 'FAILED'}; cocircuits match: {data['cocircuits_match']}")
    _emit(args, data, lines)
    return 0 if ok else 1


def cmd_ppc_verify(args) -> int:
    cfg = _map(args.map)
    rep = verify_ppc(cfg)
    same = extract_cocircuits(cfg) == chirotope_to_cocircuits(cfg.chirotope)
    data = rep.as_dict()
    data["cocircuits_match"] = same
    lines = [f"violations: {len(rep.violations)}; cocircuits match: {same}"]
    lines += [f"  {json.dumps(v, sort_keys=True)}" for v in rep.violations[:20]]
    _emit(args, data, lines)
    return 0 if rep.ok and same else 1


def cmd_ppc_reduce(args) -> int:
    cfg = _map(args.map)
    before = cfg.map.counts()
    out = reduce_crossings(cfg)
    after = out.map.counts()
    if args.out:
        Path(args.out).write_text(dump_map(out))
    data = {"before": {"V": before[0], "E": before[1]}, "after": {"V": after[0], "E": after[1]}}
    _emit(args, data, [f"vertices {before[0]} -> {after[0]}, edges {before[1]} -> {after[1]}"])
    return 0


def cmd_simplicial(args) -> int:
    chi = _chirotope(args.file)
    res = find_simplicial_reorientation(chi, initial=args.seed_quad)
    data = res.as_dict()
    lines = [f"F = {{{', '.join(map(str, sorted(res.F.F)))}}}",
             f"Q* = {tuple(res.quadruple)} after {res.iterations} iterations ({res.attempts} attempt(s))"]
    ok = True
    if args.brute_force:
        found = brute_force_simplicial(chi)
        ok = res.F.F in found
        data["brute_force"] = sorted(sorted(F) for F in found)
        lines.append(f"brute force: {len(found)} sets; result included: {ok}")
    _emit(args, data, lines)
    return 0 if ok else 1


def cmd_mutations(args) -> int:
    chi = _chirotope(args.file)
    if args.flip:
        out = flip(chi, args.flip)
        _emit(args, {"chirotope": out.sign_string()}, [serialize_chirotope(out).rstrip()])
        return 0
    if args.explore:
        g = explore_flip_graph(chi, args.depth, preserve_polytope=args.preserve_polytope)
        lines = [f"{len(g.nodes)} nodes, {len(g.edges)} edges"]
        lines += [f"  d={g.depth[k]} mutations={g.mutation_counts[k]} {k}" for k in g.nodes]
        _emit(args, g.as_dict(), lines)
        return 0
    found = mutations(chi)
    _emit(args, {"mutations": [list(b) for b in found]},
          [f"{len(found)} mutations"] + ["  " + ",".join(map(str, b)) for b in found])
    return 0


def cmd_gen(args) -> int:
    if args.family == "cyclic":
        P = cyclic_points(args.n)
    else:
        mode = "interior" if args.interior else "convex"
        P = random_realizable(args.n, args.seed, mode=mode)
    text = serialize_points(P) if args.points else serialize_chirotope(chirotope_from_points(P))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_render(args) -> int:
    obj = read_input(args.file)
    if isinstance(obj, PointConfig):
        pic, _ = circle_picture(obj)
        svg = render_svg(pic)
    elif isinstance(obj, PPCConfiguration):
        svg = render_svg(obj)
    else:
        raise ParseError("render needs a points file or a map file")
    Path(args.svg).write_bytes(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="om", description="Rank-4 matroid polytope toolkit.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="validate a chirotope (axiom report)")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("polytope", help="faces, extreme points and facets")
    s.add_argument("file")
    s.set_defaults(func=cmd_polytope)

    ppc = sub.add_parser("ppc", help="pseudocircle configurations")
    psub = ppc.add_subparsers(dest="ppc_command", required=True)
    s = psub.add_parser("build")
    s.add_argument("file")
    s.add_argument("--out")
    s.add_argument("--svg")
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=cmd_ppc_build)
    s = psub.add_parser("verify")
    s.add_argument("map")
    s.set_defaults(func=cmd_ppc_verify)
    s = psub.add_parser("reduce")
    s.add_argument("map")
    s.add_argument("--out")
    s.set_defaults(func=cmd_ppc_reduce)

    s = sub.add_parser("simplicial", help="reorientation with exactly four facets")
    s.add_argument("file")
    s.add_argument("--brute-force", action="store_true")
    s.add_argument("--seed-quad", type=_ints)
    s.set_defaults(func=cmd_simplicial)

    s = sub.add_parser("mutations", help="mutations and flip-graph exploration")
    s.add_argument("file")
    s.add_argument("--flip", type=_ints)
    s.add_argument("--explore", action="store_true")
    s.add_argument("--depth", type=int, default=1)
    s.add_argument("--preserve-polytope", action="store_true")
    s.set_defaults(func=cmd_mutations)

    s = sub.add_parser("gen", help="generate instances")
    s.add_argument("family", choices=["cyclic", "random"])
    s.add_argument("n", type=int)
    s.add_argument("--seed", type=int, default=0)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--convex", action="store_true")
    g.add_argument("--interior", action="store_true")
    s.add_argument("--points", action="store_true", help="write coordinates instead of signs")
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("render", help="draw a points file or a map as SVG")
    s.add_argument("file")
    s.add_argument("--svg", required=True)
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OMError, ParseError, OSError) as exc:
        if args.json:
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
