"""Command-line interface.

Exit codes: 0 = tame / certified / success, 1 = a mathematical finding
(balanced witness, failed certificate), 2 = bad input.
"""

import argparse
import json
import sys

from tamesphere import families, sampling
from tamesphere.arrangements import Arrangement
from tamesphere.completion import complete_maxtame_s2, reduce_n_plus_2
from tamesphere.errors import InputError, TamesphereError
from tamesphere.exact_core import Ray, parse_rational
from tamesphere.regions import Region
from tamesphere.render import RenderSpec, render_region_svg
from tamesphere.tameness import addable_set, is_m_tame, maxtame_certificate


def _load_region(path):
    try:
        with open(path) as f:
            text = f.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}")
    return Region.loads(text)


def _load_circles(path):
    normals = []
    try:
        with open(path) as f:
            lines = f.readlines()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}")
    for ln, line in enumerate(lines, 1):
        line = line.split("#")[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 3:
            raise InputError(
                f"{path}:{ln}: expected 3 rational coordinates, got {len(parts)}"
            )
        try:
            normals.append(tuple(parse_rational(p) for p in parts))
        except InputError as e:
            raise InputError(f"{path}:{ln}: {e}")
    if not normals:
        raise InputError(f"{path}: no circles found")
    return normals


def _emit(doc, out):
    text = doc if isinstance(doc, str) else json.dumps(doc, indent=1, sort_keys=True)
    if out:
        with open(out, "w") as f:
            f.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_check(args):
    r = _load_region(args.file)
    verdict = is_m_tame(r, args.m)
    if verdict.tame:
        _emit({"tame": True, "m": args.m, "cells": len(r.cells)}, None)
        return 0
    _emit({"tame": False, "m": args.m, "witness": verdict.witness.serialize()}, None)
    return 1


def _cmd_addable(args):
    r = _load_region(args.file)
    add = addable_set(r)
    _emit(
        {
            "open_cells": len(add.open_part.cells),
            "open_components": add.open_part.component_count(),
            "isolated_points": [[str(c) for c in p] for p in add.isolated_points],
            "note": add.boundary_note,
        },
        None,
    )
    return 0


def _cmd_certify(args):
    r = _load_region(args.file)
    ok, report = maxtame_certificate(r)
    _emit({"certified": ok, **report}, None)
    return 0 if ok else 1


def _cmd_complete(args):
    r = _load_region(args.file)
    trace = complete_maxtame_s2(r)
    _emit(trace.final.dumps(), args.output)
    _emit({"certified": trace.certified, "steps": trace.serialize()}, None)
    return 0 if trace.certified else 1


def _cmd_reduce(args):
    r = _load_region(args.file)
    out = reduce_n_plus_2(r)
    _emit(out.dumps(), args.output)
    return 0


_FAMILIES = {
    "simplex": lambda a: families.simplex_family(a.n),
    "family_a": lambda a: families.family_a(a.k),
    "family_b": lambda a: families.family_b(a.k),
    "perturbed_b7": lambda a: families.perturbed_family_b_7(),
    "s1": lambda a: families.s1_maxtame(
        [p for p in families.default_s1_pairs(a.k)], parity=a.parity
    ),
}


def _cmd_gen(args):
    region = _FAMILIES[args.family](args)
    _emit(region.dumps(), args.output)
    return 0


def _cmd_arrange(args):
    arr = Arrangement(_load_circles(args.file))
    st = arr.stats()
    if args.stats:
        tri = st["faces_by_edge_count"].get(3, 0)
        quad = st["faces_by_edge_count"].get(4, 0)
        print(
            f"V={st['V']} E={st['E']} F={st['F']} triangles={tri} quads={quad}"
        )
    else:
        _emit(st, None)
    return 0


def _cmd_render(args):
    r = _load_region(args.file)
    svg = render_region_svg(r, RenderSpec())
    _emit(svg, args.output)
    return 0


def _cmd_oracle(args):
    r = _load_region(args.file)
    cfg = sampling.SampleConfig(seed=args.seed, samples=args.samples)
    witness = sampling.falsify_tameness(r, args.m, cfg)
    if witness is not None:
        _emit({"balanced_witness": witness.serialize()}, None)
        return 1
    report = sampling.cross_check_addable(r, cfg)
    _emit({"tameness_witness": None, **report}, None)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="tamesphere",
        description="Exact tameness, hulls, addable sets and maxtame "
        "completion for polyhedral subsets of spheres.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide m-tameness of a region file")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("file")
    c.set_defaults(fn=_cmd_check)

    c = sub.add_parser("addable", help="compute the addable set")
    c.add_argument("file")
    c.set_defaults(fn=_cmd_addable)

    c = sub.add_parser("certify", help="run the maxtameness certificate")
    c.add_argument("file")
    c.set_defaults(fn=_cmd_certify)

    c = sub.add_parser("complete", help="maxtame completion pipeline (S^2)")
    c.add_argument("file")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=_cmd_complete)

    c = sub.add_parser("reduce", help="merge two components of a 5-component region")
    c.add_argument("file")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=_cmd_reduce)

    c = sub.add_parser("gen", help="generate a certified example family")
    c.add_argument("family", choices=sorted(_FAMILIES))
    c.add_argument("--n", type=int, default=3)
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--parity", type=int, default=0)
    c.add_argument("-o", "--output")
    c.set_defaults(fn=_cmd_gen)

    c = sub.add_parser("arrange", help="build a great-circle arrangement")
    c.add_argument("file")
    c.add_argument("--stats", action="store_true")
    c.set_defaults(fn=_cmd_arrange)

    c = sub.add_parser("render", help="render a region as stereographic SVG")
    c.add_argument("file")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=_cmd_render)

    c = sub.add_parser("oracle", help="randomized exact cross-checks")
    c.add_argument("file")
    c.add_argument("--m", type=int, default=3)
    c.add_argument("--samples", type=int, default=1000)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(fn=_cmd_oracle)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except TamesphereError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
