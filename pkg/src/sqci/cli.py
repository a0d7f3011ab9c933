"""Command-line interface.

Exit codes: 0 success / positive answer, 1 usage error, 2 parse or
validation error, 3 negative decision (not semi-isomorphic, NOT_QI,
validator violations, NPC failure).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classify import GroupDescriptor, classify_qi, detect_obstruction_pattern
from .complexes import betti1, build_d2, hyperplanes, npc_check
from .development import ball_raag, check_local_pattern, development_gog
from .graphs import (GraphParseError, analyze_cactus, graph_isomorphic,
                     parse_graph, serialize_graph)
from .joincomplex import (build_ri_braid, build_ri_braid_from_pairs,
                          build_ri_raag, components_and_switch, jc_to_dot,
                          jc_to_json, ri_betti1, validate_cjoin)
from .products import maximal_products_bruteforce
from .semiiso import semi_isomorphic
from .words import join_length, parse_word, word_to_text


def _load_graph(path):
    try:
        with open(path) as fh:
            return parse_graph(fh.read())
    except OSError as e:
        raise SystemExit2("cannot read %s: %s" % (path, e))
    except GraphParseError as e:
        raise SystemExit2("parse error in %s: %s" % (path, e))


class SystemExit2(Exception):
    pass


def _emit(args, payload):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _emit_dot(args, dot_text):
    if getattr(args, "dot", None):
        with open(args.dot, "w") as fh:
            fh.write(dot_text)


def _ri_from_args(args):
    if getattr(args, "raag", None):
        g = _load_graph(args.raag)
        return g, build_ri_raag(g)
    g = _load_graph(args.braid)
    an = analyze_cactus(g)
    if an.is_special:
        return g, build_ri_braid(an)
    pairs = maximal_products_bruteforce(g)
    return g, build_ri_braid_from_pairs(g, pairs)


def cmd_parse(args):
    g = _load_graph(args.graph)
    sys.stdout.write(serialize_graph(g))
    return 0


def cmd_d2(args):
    g = _load_graph(args.graph)
    d2 = build_d2(g)
    b1 = betti1(d2)
    payload = {"vertices": len(d2.vertices), "edges": len(d2.edges),
               "squares": len(d2.squares), "betti1": b1,
               "notes": list(d2.notes)}
    _emit(args, payload)
    _emit_dot(args, d2.to_dot())
    return 0


def cmd_npc(args):
    g = _load_graph(args.graph)
    d2 = build_d2(g)
    problems = npc_check(d2)
    _emit(args, {"npc": not problems, "problems": problems})
    return 0 if not problems else 3


def cmd_hyperplanes(args):
    g = _load_graph(args.graph)
    d2 = build_d2(g)
    hs = hyperplanes(d2)
    payload = [{"edges": sorted(h.edge_class), "flags": sorted(h.flags)}
               for h in hs]
    _emit(args, payload)
    return 0


def cmd_ri(args):
    g, jc = _ri_from_args(args)
    _emit(args, jc_to_json(jc))
    _emit_dot(args, jc_to_dot(jc))
    return 0


def cmd_components(args):
    g, jc = _ri_from_args(args)
    comps = components_and_switch(jc)
    _emit(args, {"components": comps, "betti1": ri_betti1(jc)})
    return 0


def cmd_validate(args):
    g, jc = _ri_from_args(args)
    violations = validate_cjoin(jc)
    _emit(args, {"violations": [list(map(str, v)) for v in violations]})
    return 0 if not violations else 3


def _descriptors(args):
    descs = []
    for fam, paths in (("raag", args.raag or []), ("pb2", args.pb2 or [])):
        for p in paths:
            descs.append(GroupDescriptor(fam, _load_graph(p)))
    return descs


def cmd_classify(args):
    descs = _descriptors(args)
    if len(descs) != 2:
        print("classify needs exactly two groups "
              "(via --raag/--pb2)", file=sys.stderr)
        return 1
    v = classify_qi(descs[0], descs[1])
    _emit(args, v.to_json())
    return 3 if v.relation == "NOT_QI" else 0


def cmd_semiiso(args):
    descs = _descriptors(args)
    if len(descs) != 2:
        print("semiiso needs exactly two groups (via --raag/--pb2)",
              file=sys.stderr)
        return 1
    si = semi_isomorphic(descs[0].ri, descs[1].ri, strict=args.strict_ranks)
    if si is None:
        _emit(args, {"semi_isomorphic": False})
        return 3
    _emit(args, {"semi_isomorphic": True,
                 "vertex_bijection": si.vertex_bijection,
                 "flips": {k: bool(v) for k, v in si.flip_assignment.items()}})
    return 0


def _cap(args):
    if args.cap is not None:
        return args.cap
    return int(os.environ.get("SQCI_CAP", 20000))


def cmd_ball(args):
    g = _load_graph(args.raag)
    ball = ball_raag(g, args.radius, args.word_bound, cap=_cap(args))
    report = check_local_pattern(ball)
    _emit(args, {"vertices": len(ball.vertices), "edges": len(ball.edges),
                 "betti1": ball.skeleton_betti1(),
                 "interior": len(ball.interior()),
                 "boundary": len(ball.boundary_mark),
                 "local_pattern_violations": report,
                 "notes": ball.notes})
    return 0 if not report else 3


def cmd_develop(args):
    g, jc = _ri_from_args(args)
    ball = development_gog(jc, args.radius, args.word_bound, cap=_cap(args))
    report = check_local_pattern(ball)
    _emit(args, {"vertices": len(ball.vertices), "edges": len(ball.edges),
                 "betti1": ball.skeleton_betti1(),
                 "boundary": len(ball.boundary_mark),
                 "local_pattern_violations": report,
                 "notes": ball.notes})
    return 0 if not report else 3


def cmd_joinlen(args):
    g = _load_graph(args.graph)
    w = parse_word(g, args.word)
    n, factors = join_length(g, w)
    _emit(args, {"join_length": n,
                 "factorization": [word_to_text(f) for f in factors]})
    return 0


def cmd_obstruction(args):
    g, jc = _ri_from_args(args)
    found, witness = detect_obstruction_pattern(jc)
    _emit(args, {"found": found, "witness": witness})
    return 0


def cmd_sweep(args):
    manifest_path = os.path.join(args.corpus, "manifest.json")
    entries = {}
    if os.path.exists(manifest_path):
        with open(manifest_path) as fh:
            entries = json.load(fh).get("files", {})
    else:
        for name in sorted(os.listdir(args.corpus)) if os.path.isdir(args.corpus) else []:
            if name.endswith(".graph"):
                entries[name] = {"kind": "raag"}
    summary = {"betti1_agreement": {}, "semiiso_matrix": {},
               "iso_matrix": {}, "errors": {}}
    raag_ris = {}
    raag_graphs = {}
    for name, meta in sorted(entries.items()):
        path = os.path.join(args.corpus, name)
        try:
            g = _load_graph(path)
            if meta.get("kind") == "cactus":
                an = analyze_cactus(g)
                if not an.is_special:
                    continue
                jc = build_ri_braid(an)
                lhs = ri_betti1(jc)
                rhs = betti1(build_d2(an.spine))
                summary["betti1_agreement"][name] = {
                    "ri": lhs, "spine_d2": rhs, "agree": lhs == rhs,
                    "type": an.cactus_type}
            else:
                raag_graphs[name] = g
                raag_ris[name] = build_ri_raag(g)
        except Exception as e:  # per-file isolation
            summary["errors"][name] = "%s: %s" % (type(e).__name__, e)
    names = sorted(raag_ris)
    for a in names:
        for b in names:
            if a < b:
                key = "%s|%s" % (a, b)
                summary["iso_matrix"][key] = bool(
                    graph_isomorphic(raag_graphs[a], raag_graphs[b]))
                summary["semiiso_matrix"][key] = (
                    semi_isomorphic(raag_ris[a], raag_ris[b]) is not None)
    _emit(args, summary)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="sqci",
                                description="Reduced intersection complexes "
                                "and quasi-isometry invariants for Artin and "
                                "graph 2-braid groups")
    sub = p.add_subparsers(dest="verb")

    def common(sp, out=True):
        if out:
            sp.add_argument("--out", help="write JSON artifact")
            sp.add_argument("--dot", help="write DOT artifact")
        sp.add_argument("--format", choices=["json", "dot", "text"],
                        default="json")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--cap", type=int, default=None)

    sp = sub.add_parser("parse"); sp.add_argument("graph"); common(sp)
    sp.set_defaults(func=cmd_parse)
    sp = sub.add_parser("d2"); sp.add_argument("graph"); common(sp)
    sp.set_defaults(func=cmd_d2)
    sp = sub.add_parser("npc"); sp.add_argument("graph"); common(sp)
    sp.set_defaults(func=cmd_npc)
    sp = sub.add_parser("hyperplanes"); sp.add_argument("graph"); common(sp)
    sp.set_defaults(func=cmd_hyperplanes)

    for verb, fn in (("ri", cmd_ri), ("components", cmd_components),
                     ("validate", cmd_validate), ("develop", cmd_develop),
                     ("obstruction", cmd_obstruction)):
        sp = sub.add_parser(verb)
        group = sp.add_mutually_exclusive_group(required=True)
        group.add_argument("--raag")
        group.add_argument("--braid")
        sp.add_argument("--radius", type=int, default=2)
        sp.add_argument("--word-bound", type=int, default=2,
                        dest="word_bound")
        common(sp)
        sp.set_defaults(func=fn)

    for verb, fn in (("classify", cmd_classify), ("semiiso", cmd_semiiso)):
        sp = sub.add_parser(verb)
        sp.add_argument("--raag", action="append")
        sp.add_argument("--pb2", action="append")
        sp.add_argument("--strict-ranks", action="store_true",
                        dest="strict_ranks")
        common(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("ball")
    sp.add_argument("--raag", required=True)
    sp.add_argument("--radius", type=int, default=1)
    sp.add_argument("--word-bound", type=int, default=2, dest="word_bound")
    common(sp)
    sp.set_defaults(func=cmd_ball)

    sp = sub.add_parser("joinlen")
    sp.add_argument("graph")
    sp.add_argument("word")
    common(sp)
    sp.set_defaults(func=cmd_joinlen)

    sp = sub.add_parser("sweep")
    sp.add_argument("corpus")
    sp.add_argument("--mode", choices=["all", "cactus", "raag"],
                    default="all")
    common(sp)
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except SystemExit2 as e:
        print(str(e), file=sys.stderr)
        return 2
    except (ValueError, GraphParseError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
