"""Command line front end.

Every command prints one JSON document on stdout.  Failures print
``{"error": kind, "message": ...}`` on stderr and exit with 1 (usage),
2 (domain) or 3 (internal consistency).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .arith import ContinuedFraction, cf_evaluate, format_fraction, parse_fraction, positive_cf
from .ball import (
    NormBall,
    ball_from_dual,
    build_ball,
    classify_diagram,
    format_slope,
    shape_of,
    vertex_norms,
)
from .base_norms import VertexNorms
from .diagram import RationalDiagram, linking_number
from .errors import DomainError, InternalConsistencyError, KnotInputError, TwoBridgeError
from .farey import FareyVertex, t10_path, t10_tree_build
from .geometry import ConvexPolygon, Point
from .satellite import SatelliteInput, ball_with_face_count, satellite_ball, satellite_ball_dual
from .svg import render_svg
from .sweep import MAX_Q, sweep

EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _diagram(fraction: str | None, cf: str | None, mirror: bool) -> RationalDiagram:
    if (fraction is None) == (cf is None):
        raise UsageError("give exactly one of a fraction or --cf")
    if cf is not None:
        coeffs = ContinuedFraction.parse(cf)
        if coeffs.all_positive or all(a < 0 for a in coeffs):
            d = RationalDiagram.from_cf(coeffs)
        else:
            # mixed signs: not alternating; fall back to the link's slope
            d = RationalDiagram(positive_cf(cf_evaluate(coeffs) % 1))
    else:
        f = parse_fraction(fraction)
        if not 0 < f < 1:
            raise DomainError(f"{f} is not in the open interval (0, 1)")
        if f.denominator % 2:
            raise KnotInputError(f"{f} has odd denominator: L_{f} is a knot")
        d = RationalDiagram(positive_cf(f))
    return d.mirrored() if mirror else d


def _point_json(p: Point) -> list[str]:
    return [format_fraction(p.x), format_fraction(p.y)]


def ball_json(ball: NormBall) -> dict[str, Any]:
    return {
        "rays": [format_slope(s) for s in ball.rays],
        "faces": ball.faces,
        "shape": shape_of(ball),
        "ray_values": {format_slope(s): format_fraction(v) for s, v in ball.ray_values().items()},
        "dual": [_point_json(p) for p in ball.dual.vertices],
    }


def _ball_document(d: RationalDiagram) -> dict[str, Any]:
    v = vertex_norms(d)
    c = classify_diagram(d)
    return {
        "fraction": format_fraction(d.fraction),
        "cf": str(d.signed_cf),
        "vertex_norms": v.as_json(),
        "rays": [format_slope(s) for s in c.rays],
        "faces": c.faces,
        "shape": c.shape,
        "base_type": c.base_type,
        "fibers_S10": c.fibers_with_S10,
    }


def _write_svg(path: str | None, ball: NormBall, title: str) -> None:
    if path:
        Path(path).write_text(render_svg(ball, title))


def cmd_ball(args) -> Any:
    d = _diagram(args.fraction, args.cf, args.mirror)
    doc = _ball_document(d)
    _write_svg(args.svg, build_ball(vertex_norms(d)), str(d))
    return doc


def _parse_class(text: str) -> tuple[Fraction, Fraction]:
    parts = [t for t in text.split(",") if t.strip()]
    if len(parts) != 2:
        raise UsageError(f"--class expects a,b, got {text!r}")
    return parse_fraction(parts[0]), parse_fraction(parts[1])


def cmd_eval(args) -> Any:
    d = _diagram(args.fraction, args.cf, args.mirror)
    a, b = _parse_class(args.klass)
    return format_fraction(build_ball(vertex_norms(d)).evaluate(a, b))


def cmd_farey_path(args) -> Any:
    f = parse_fraction(args.fraction)
    if args.max_den is None:
        path = t10_path(f)
    else:
        if not 0 < f < 1 or f.denominator % 2:
            raise DomainError(f"{f} is not an even-denominator fraction in (0, 1)")
        path = t10_tree_build(args.max_den).path(FareyVertex.of(f))
        if path is None:
            raise DomainError(f"{f} is not reachable with denominators up to {args.max_den}")
    return {"fraction": format_fraction(f), "path": [str(v) for v in path], "lg": len(path) - 1, "x_l1": len(path) - 2}


def _load_summand(source: str, lk: int | None) -> tuple[NormBall, int, str]:
    """A summand given as p/q, as inline JSON, or as a path to a JSON file."""
    text = source.strip()
    if not text.startswith("{") and Path(text).is_file():
        text = Path(text).read_text()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad summand JSON: {exc}") from None
        if "dual" in data:
            ball = ball_from_dual(ConvexPolygon(tuple(Point.of(parse_fraction(x), parse_fraction(y)) for x, y in data["dual"])))
        elif "vertex_norms" in data:
            vn = data["vertex_norms"]
            ball = build_ball(VertexNorms(vn["l1"], vn["l2"], vn["l1+l2"], vn["l1-l2"]))
        else:
            raise UsageError("summand JSON needs a 'dual' or 'vertex_norms' key")
        if lk is None:
            if "lk" not in data:
                raise UsageError("summand JSON without 'lk' needs an explicit linking number flag")
            lk = int(data["lk"])
        return ball, lk, "json"
    d = _diagram(text, None, False)
    return build_ball(vertex_norms(d)), linking_number(d) if lk is None else lk, str(d)


def cmd_satellite(args) -> Any:
    companion, lk_c, c_name = _load_summand(args.companion, args.lk_companion)
    pattern, lk_p, p_name = _load_summand(args.pattern, args.lk_pattern)
    s = SatelliteInput(companion, lk_c, pattern, lk_p)
    ball = satellite_ball(s)
    oracle = satellite_ball_dual(s)
    if oracle != ball or oracle.finite_rays != ball.finite_rays:
        raise InternalConsistencyError("ray construction and Minkowski dual disagree")
    _write_svg(args.svg, ball, "satellite")
    return {
        "companion": c_name,
        "pattern": p_name,
        "lk_companion": lk_c,
        "lk_pattern": lk_p,
        "lk": lk_c * lk_p,
        **ball_json(ball),
    }


def cmd_family(args) -> Any:
    if args.faces < 0 or args.faces % 2:
        raise DomainError("--faces must be a nonnegative even number")
    ball, chain = ball_with_face_count(args.faces // 2)
    _write_svg(args.svg, ball, f"{args.faces} faces")
    return {"faces": args.faces, "chain": chain, "ball": ball_json(ball)}


def cmd_sweep(args) -> Any:
    report = sweep(args.max_q, args.workers)
    doc = {
        "max_q": report.max_q,
        "checked": report.checked,
        "failures": [{"fraction": format_fraction(f), "message": m} for f, m in report.failures],
        "shapes": dict(sorted(report.shapes.items())),
        "summary": report.summary,
    }
    if report.failures:
        raise _SweepFailed(doc)
    return doc


class _SweepFailed(Exception):
    def __init__(self, doc):
        super().__init__(doc["summary"])
        self.doc = doc


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="twobridge", description="Thurston norm balls of 2-bridge links and their satellites.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def diagram_args(sp):
        sp.add_argument("fraction", nargs="?", help="slope p/q with q even")
        sp.add_argument("--cf", help="continued fraction a1,a2,... (use --cf=-2,-1 for negative entries)")
        sp.add_argument("--mirror", action="store_true")

    sp = sub.add_parser("ball", help="vertex norms, rays and shape of the Thurston ball")
    diagram_args(sp)
    sp.add_argument("--svg", metavar="FILE")
    sp.set_defaults(run=cmd_ball)

    sp = sub.add_parser("eval", help="norm of the class a*l1 + b*l2")
    diagram_args(sp)
    sp.add_argument("--class", dest="klass", required=True, metavar="A,B")
    sp.set_defaults(run=cmd_eval)

    sp = sub.add_parser("farey-path", help="path from 1/0 in the tree T_{1/0}")
    sp.add_argument("fraction")
    sp.add_argument("--max-den", type=int)
    sp.set_defaults(run=cmd_farey_path)

    sp = sub.add_parser("satellite", help="compose two balls")
    sp.add_argument("--companion", required=True, metavar="P/Q|JSON")
    sp.add_argument("--pattern", required=True, metavar="P/Q|JSON")
    sp.add_argument("--lk-companion", type=int)
    sp.add_argument("--lk-pattern", type=int)
    sp.add_argument("--svg", metavar="FILE")
    sp.set_defaults(run=cmd_satellite)

    sp = sub.add_parser("family", help="a ball with a prescribed even number of faces")
    sp.add_argument("--faces", type=int, required=True)
    sp.add_argument("--svg", metavar="FILE")
    sp.set_defaults(run=cmd_family)

    sp = sub.add_parser("sweep", help="exhaustive checks up to a denominator bound")
    sp.add_argument("--max-q", type=int, default=200, help=f"at most {MAX_Q}")
    sp.add_argument("--workers", type=int, help="defaults to $TWOBRIDGE_WORKERS or 1")
    sp.set_defaults(run=cmd_sweep)
    return p


def _fail(kind: str, message: str, code: int) -> int:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result = args.run(args)
    except UsageError as exc:
        return _fail("usage", str(exc), EXIT_USAGE)
    except _SweepFailed as exc:
        print(json.dumps(exc.doc, indent=2))
        return _fail("internal", str(exc), EXIT_INTERNAL)
    except DomainError as exc:
        return _fail("domain", str(exc), EXIT_DOMAIN)
    except (InternalConsistencyError, TwoBridgeError) as exc:
        return _fail("internal", str(exc), EXIT_INTERNAL)
    except OSError as exc:
        return _fail("usage", str(exc), EXIT_USAGE)
    print(json.dumps(result, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
