"""Command-line surface: center tables, point classification, concurrency
checks, family and chain runs, the verification suites, and SVG figures.

Exit codes: 0 success, 1 geometric error on degenerate input, 2 usage or
scene-schema error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import centers
from .chains import check_mod3_similarity, iterate_chain
from .errors import EmptySelectionError, GeometryError, OnSideLineError, SceneError
from .figures import ELEMENTS, render_figure
from .kernel import Point, Tolerance, Triangle
from .scene import SceneSpec, parse_scene
from .triads import (
    SimsonLine,
    Triad,
    classify_similarity,
    detect_special_role,
    family_member,
    miquel_point,
    pedal_feet,
    pedal_triad,
)
from .verify import SUITES, SuiteReport, run_suite

DEFAULT_SEED = 7


def _num(v: float) -> str:
    return repr(v)


def _point_str(p: Point) -> str:
    return f"({_num(p.x)}, {_num(p.y)})"


def _load_scene(path: str) -> SceneSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_scene(fh.read())
    except OSError as exc:
        raise SceneError(f"cannot read {path}: {exc}") from None


def _parse_pair(text: str, flag: str) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        raise SceneError(f"{flag} expects 'x,y', got {text!r}")
    try:
        return Point(float(parts[0]), float(parts[1]))
    except ValueError:
        raise SceneError(f"{flag} expects numbers, got {text!r}") from None


def _parse_triple(text: str, flag: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise SceneError(f"{flag} expects 'u,v,w', got {text!r}")
    try:
        return (float(parts[0]), float(parts[1]), float(parts[2]))
    except ValueError:
        raise SceneError(f"{flag} expects numbers, got {text!r}") from None


def _require_point(scene: SceneSpec, override: str | None) -> Point:
    if override is not None:
        return _parse_pair(override, "--point")
    if scene.point is None:
        raise SceneError("no point given: add \"P\" to the scene or pass --point")
    return scene.point


# ---------------------------------------------------------------- centers

def _center_table(t: Triangle) -> list[tuple[str, str]]:
    rows = [
        ("O", _point_str(centers.circumcenter(t))),
        ("H", _point_str(centers.orthocenter(t))),
        ("G", _point_str(centers.centroid(t))),
        ("L", _point_str(centers.incenter(t))),
    ]
    for v in "ABC":
        rows.append((f"excenter_{v}", _point_str(centers.excenter(t, v))))
    rows.append(("Ω₁", _point_str(centers.brocard_point(t, "first"))))
    rows.append(("Ω₂", _point_str(centers.brocard_point(t, "second"))))
    for v in "ABC":
        try:
            rows.append((f"S_{v}", _point_str(centers.s_point(t, v))))
        except GeometryError as exc:
            rows.append((f"S_{v}", f"degenerate: {type(exc).__name__}"))
        try:
            rows.append((f"M_{v}", _point_str(centers.m_point(t, v))))
        except GeometryError as exc:
            rows.append((f"M_{v}", f"degenerate: {type(exc).__name__}"))
    return rows


def cmd_centers(args) -> int:
    scene = _load_scene(args.infile)
    rows = _center_table(scene.triangle)
    if args.json:
        print(json.dumps({name: value for name, value in rows}))
    else:
        width = max(len(name) for name, _ in rows)
        for name, value in rows:
            print(f"{name:<{width}}  {value}")
    return 0


# ---------------------------------------------------------------- classify

def cmd_classify(args) -> int:
    scene = _load_scene(args.infile)
    t = scene.triangle
    p = _require_point(scene, args.point)
    role = detect_special_role(t, p, Tolerance(length_eps_rel=args.tolerance))
    doc: dict = {"role": str(role)}
    simson = None
    try:
        triad = pedal_triad(t, p)
    except OnSideLineError:
        # a point on a side line still has well-defined feet there
        shape = Triangle(*pedal_feet(t, p))
    else:
        if isinstance(triad, SimsonLine):
            simson, shape = triad, None
        else:
            shape = triad.triangle()
    if simson is not None:
        doc["pedal"] = "simson-line"
        doc["collinearity_deviation"] = simson.max_deviation()
    else:
        match = classify_similarity(t, shape, Tolerance(angle_eps=1e-7))
        if match is None:
            doc["similar_to_host"] = False
        else:
            doc["similar_to_host"] = True
            doc["permutation"] = match.triad_letters()
            doc["orientation"] = match.orientation
    if args.json:
        print(json.dumps(doc))
    else:
        print(f"role           {doc['role']}")
        if "pedal" in doc:
            print("pedal          collinear (simson line), "
                  f"deviation {doc['collinearity_deviation']:.3e}")
        elif doc["similar_to_host"]:
            print("pedal          similar to host, permutation "
                  f"{doc['permutation']} ({doc['orientation']})")
        else:
            print("pedal          not similar to host")
    return 0


# ---------------------------------------------------------------- miquel

def cmd_miquel(args) -> int:
    scene = _load_scene(args.infile)
    t = scene.triangle
    params = _parse_triple(args.triad, "--triad") if args.triad else scene.triad_params
    if params is None:
        raise SceneError("no triad given: add \"triad\" to the scene or pass --triad")
    res = miquel_point(t, Triad(t, *params))
    doc = {
        "point": [res.point.x, res.point.y],
        "residual": res.residual,
        "residual_rel": res.residual / t.circumradius,
        "tangent": res.tangent,
    }
    if args.json:
        print(json.dumps(doc))
    else:
        print(f"miquel point   {_point_str(res.point)}")
        print(f"residual       {res.residual:.3e}  (relative {doc['residual_rel']:.3e})")
        if res.tangent:
            print("tangency       the two defining circles touch at the point")
    return 0


# ---------------------------------------------------------------- family

def cmd_family(args) -> int:
    scene = _load_scene(args.infile)
    t = scene.triangle
    p = _require_point(scene, args.point)
    theta = args.theta if args.theta is not None else (scene.theta or 0.0)
    triad = family_member(t, p, theta)
    res = miquel_point(t, triad)
    ped = pedal_triad(t, p)
    ratio = None
    if not isinstance(ped, SimsonLine):
        ratio = triad.triangle().side_lengths[0] / ped.triangle().side_lengths[0]
    doc = {
        "theta": theta,
        "u": triad.u,
        "v": triad.v,
        "w": triad.w,
        "X": [triad.x.x, triad.x.y],
        "Y": [triad.y.x, triad.y.y],
        "Z": [triad.z.x, triad.z.y],
        "roundtrip_residual": res.point.dist(p),
        "pedal_ratio": ratio,
    }
    if args.json:
        print(json.dumps(doc))
    else:
        print(f"theta          {_num(theta)}")
        print(f"params         u={_num(triad.u)} v={_num(triad.v)} w={_num(triad.w)}")
        print(f"X              {_point_str(triad.x)}")
        print(f"Y              {_point_str(triad.y)}")
        print(f"Z              {_point_str(triad.z)}")
        print(f"roundtrip      {doc['roundtrip_residual']:.3e}")
        if ratio is not None:
            print(f"pedal ratio    {_num(ratio)}")
    return 0


# ---------------------------------------------------------------- chain

def cmd_chain(args) -> int:
    scene = _load_scene(args.infile)
    t = scene.triangle
    p = _require_point(scene, args.point)
    thetas = None
    if args.thetas:
        thetas = [float(x) for x in args.thetas.split(",")]
    rec = iterate_chain(t, p, args.steps, thetas=thetas)
    rep = check_mod3_similarity(rec, Tolerance(angle_eps=1e-6)) if args.steps >= 3 else None
    doc = {
        "steps": args.steps,
        "roles": [str(r) for r in rec.roles],
        "circumradii": [tri.circumradius for tri in rec.triangles],
        "mod3_similar": None if rep is None else rep.ok,
        "mod3_worst_residual": None if rep is None else rep.worst_residual,
    }
    if args.json:
        print(json.dumps(doc))
    else:
        for k, (role, r) in enumerate(zip(doc["roles"], doc["circumradii"])):
            print(f"step {k:<3d} role={role:<18s} circumradius={_num(r)}")
        if rep is not None:
            print(f"mod3 similarity {'holds' if rep.ok else 'FAILS'} "
                  f"(worst residual {rep.worst_residual:.3e})")
    return 0


# ---------------------------------------------------------------- verify

def _report_doc(rep: SuiteReport) -> dict:
    return {
        "suite": rep.suite,
        "seed": rep.seed,
        "trials": rep.trials,
        "passed": rep.passed,
        "claims": [
            {
                "name": c.name,
                "passed": c.passed,
                "informational": c.informational,
                "max_residual": c.max_residual,
                "tolerance": c.tol,
                "trials": c.trials,
                **({"worst": c.worst} if not c.passed else {}),
            }
            for c in rep.claims
        ],
    }


def _print_report(rep: SuiteReport) -> None:
    print(f"suite {rep.suite}  seed={rep.seed}")
    for c in rep.claims:
        status = "PASS" if c.passed else "FAIL"
        note = " (informational)" if c.informational else ""
        print(
            f"  {c.name:<34s} {status}  max {c.max_residual:.3e}  "
            f"tol {c.tol:.0e}  trials {c.trials}{note}"
        )
        if not c.passed and c.worst:
            print(f"    worst: {c.worst}")
    print(f"result {'PASS' if rep.passed else 'FAIL'}")


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise SceneError(
            f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}"
        )
    reports = [run_suite(name, args.seed, args.trials) for name in names]
    if args.json:
        print(json.dumps([_report_doc(r) for r in reports]))
    else:
        for i, rep in enumerate(reports):
            if i:
                print()
            _print_report(rep)
        if len(reports) > 1:
            overall = all(r.passed for r in reports)
            print(f"\noverall {'PASS' if overall else 'FAIL'} ({len(reports)} suites)")
    total = sum(r.duration for r in reports)
    print(f"wall clock {total:.2f}s", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 3


# ---------------------------------------------------------------- figure

def cmd_figure(args) -> int:
    scene = _load_scene(args.infile)
    elements = [e for e in (args.elements or "").split(",") if e]
    svg = render_figure(scene, elements)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="miquel",
        description="Triangle constructions around concurrency points, "
        "with randomized verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, point_flag=False):
        p.add_argument("--in", dest="infile", required=True, help="scene JSON file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if point_flag:
            p.add_argument("--point", help="override the scene point, as 'x,y'")

    p = sub.add_parser("centers", help="table of named centers")
    add_common(p)
    p.set_defaults(func=cmd_centers)

    p = sub.add_parser("classify", help="which special role a point plays")
    add_common(p, point_flag=True)
    p.add_argument("--tolerance", type=float, default=1e-9,
                   help="relative match tolerance (default 1e-9)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("miquel", help="concurrency point of a triad")
    add_common(p)
    p.add_argument("--triad", help="affine parameters 'u,v,w'")
    p.set_defaults(func=cmd_miquel)

    p = sub.add_parser("family", help="rotated family member of a point")
    add_common(p, point_flag=True)
    p.add_argument("--theta", type=float, help="rotation in radians")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("chain", help="iterate nested triad triangles")
    add_common(p, point_flag=True)
    p.add_argument("--steps", type=int, default=6)
    p.add_argument("--thetas", help="comma-separated per-step rotations")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("verify", help="run a randomized verification suite")
    p.add_argument("--suite", required=True,
                   help="suite name or 'all' (see README for the full list)")
    p.add_argument("--seed", type=int,
                   default=int(os.environ.get("MIQUEL_SEED", DEFAULT_SEED)))
    p.add_argument("--trials", type=int, default=None,
                   help="override the suite's default trial count")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="render the scene as SVG")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--elements", required=True,
                   help=f"comma-separated from: {', '.join(ELEMENTS)}")
    p.add_argument("--out", help="output file (stdout when omitted)")
    p.set_defaults(func=cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except EmptySelectionError as exc:
        print(f"usage error: --elements: {exc}", file=sys.stderr)
        return 2
    except (SceneError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"geometric error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
