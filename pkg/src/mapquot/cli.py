"""Command-line interface.

Subcommands: series, enumerate, two-point, quotient {classic,new,unroll},
orient, verify, render.  All output is JSON (or SVG for render) on stdout;
diagnostics go to stderr.  Exit codes: 0 success, 1 verification failure,
2 usage error.  Everything is deterministic: no randomness, lexicographic
tie-breaks throughout.
"""

from __future__ import annotations

import argparse
import json
import sys

from mapquot import census, jsonio, render
from mapquot import series as S
from mapquot.maps import DissectionSpec, MapError
from mapquot.orientations import find_d_orientation, minimize
from mapquot.quotient import classical_quotient, phi, phi_tri, unroll
from mapquot.verify import CHECKS, run_suite


def _emit(obj, args=None) -> None:
    text = jsonio.dumps(obj) + "\n"
    if args is not None and getattr(args, "output", None) not in (None, "-"):
        with open(args.output, "a") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _series_payload(name: str, ts: S.TruncSeries) -> dict:
    variable, convention = S.SERIES_INFO.get(name, ("x", "catalogue series"))
    return {
        "name": name,
        "variable": variable,
        "size_convention": convention,
        "order": ts.order,
        "coeffs": [
            str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            for c in ts.coeffs
        ],
    }


def cmd_series(args) -> int:
    if args.name == "two_point":
        if args.family is None or args.i is None:
            print("error: --name two_point needs --family and --i", file=sys.stderr)
            return 2
        ts = S.two_point(args.family, args.i, args.order)
        _emit(_series_payload(f"two_point[{args.family}, i={args.i}]", ts))
        return 0
    ts = S.named(args.name, args.order)
    _emit(_series_payload(args.name, ts))
    return 0


def cmd_two_point(args) -> int:
    ts = S.two_point(args.family, args.i, args.order)
    payload = _series_payload(f"two_point[{args.family}, i={args.i}]", ts)
    payload["family"] = args.family
    payload["distance"] = args.i
    _emit(payload)
    return 0


def cmd_enumerate(args) -> int:
    spec = DissectionSpec(
        inner_face_degree=args.inner_degree,
        outer_degree=args.outer_degree,
        simple=args.simple,
        quasi_simple=args.quasi_simple,
        pointed=args.pointed,
        symmetry_k=args.symmetric,
    )
    query = census.CensusQuery(spec, args.size, distance=args.distance, force=args.force)
    count = 0
    for m in census.generate(query):
        count += 1
        if not args.count_only:
            _emit(jsonio.map_record(m))
    _emit({"count": count, "size": args.size})
    return 0


def _read_record(args) -> dict:
    data = sys.stdin.read() if args.input in (None, "-") else open(args.input).read()
    return jsonio.parse_map(json.loads(data))


def cmd_quotient(args) -> int:
    rec = _read_record(args)
    if args.mode == "classic":
        sym = rec["symmetric"]
        if sym is None:
            raise MapError("classic quotient needs a symmetric map record")
        p = classical_quotient(sym)
        _emit(jsonio.pointed_record(p), args)
    elif args.mode == "new":
        sym = rec["symmetric"]
        if sym is None:
            raise MapError("the edge-marking quotient needs a symmetric map record")
        result = (phi if sym.order_k == 2 else phi_tri)(sym)
        out = jsonio.map_record(result.map, marked_edge=result.marked_edge)
        _emit(out, args)
    else:  # unroll
        pointed = rec["pointed"]
        if pointed is None:
            raise MapError("unroll needs a pointed map record")
        sym = unroll(pointed, args.k)
        _emit(jsonio.symmetric_record(sym), args)
    return 0


def cmd_orient(args) -> int:
    rec = _read_record(args)
    m = rec["map"]
    d = 2 if m.face_degree(m.outer_face) == 4 else 3
    o = minimize(find_d_orientation(m, d))
    _emit(jsonio.map_record(m, orientation=o), args)
    return 0


def cmd_verify(args) -> int:
    names = list(CHECKS) if args.suite == "all" else args.suite.split(",")
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        print(f"unknown checks: {', '.join(unknown)}", file=sys.stderr)
        return 2
    small = args.max_size == "small"
    if args.jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(args.jobs) as pool:
            chunks = pool.starmap(run_suite, [([n], small) for n in names])
        results = [r for chunk in chunks for r in chunk]
    else:
        results = run_suite(names, small)
    ok = all(r["ok"] for r in results)
    _emit({"ok": ok, "results": results})
    return 0 if ok else 1


def cmd_render(args) -> int:
    rec = _read_record(args)
    sys.stdout.write(render.render_svg(rec["map"]) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mapquot",
        description="Exact census, orientations, quotients and counting series "
        "for planar dissections.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="print a catalogue series as JSON")
    p.add_argument("--name", required=True, choices=sorted(S.SERIES_INFO) + ["two_point"])
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--family", choices=S.TWO_POINT_FAMILIES, default=None)
    p.add_argument("--i", type=int, default=None)
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("two-point", help="distance-refined generating series")
    p.add_argument("--family", required=True, choices=S.TWO_POINT_FAMILIES)
    p.add_argument("--i", type=int, required=True, help="radial distance (>= 1)")
    p.add_argument("--order", type=int, default=10)
    p.set_defaults(fn=cmd_two_point)

    p = sub.add_parser("enumerate", help="stream a census as JSON lines")
    p.add_argument("--inner-degree", type=int, required=True, choices=(3, 4))
    p.add_argument("--outer-degree", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--simple", action="store_true")
    p.add_argument("--quasi-simple", action="store_true")
    p.add_argument("--pointed", action="store_true")
    p.add_argument("--symmetric", type=int, default=None, metavar="K")
    p.add_argument("--distance", type=int, default=None, metavar="I")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--force", action="store_true", help="override size caps")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("quotient", help="quotient operations on map records")
    p.add_argument("mode", choices=("classic", "new", "unroll"))
    p.add_argument("--input", default="-")
    p.add_argument("--output", default="-")
    p.add_argument("--k", type=int, default=2, help="unroll order")
    p.set_defaults(fn=cmd_quotient)

    p = sub.add_parser("orient", help="minimal d-orientation of a map record")
    p.add_argument("--input", default="-")
    p.add_argument("--output", default="-")
    p.set_defaults(fn=cmd_orient)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-size", choices=("default", "small"), default="default")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("render", help="SVG drawing of a map record")
    p.add_argument("--input", default="-")
    p.set_defaults(fn=cmd_render)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (MapError, S.SeriesError, census.SizeCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: bad JSON input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
