"""Thurston norm balls of 2-bridge link exteriors.

A seminorm on the plane is stored through its dual polygon ``K`` (the
convex hull of its linear-piece gradients), so ``x(v) = max <v, phi>`` over
the vertices of K.  Rays are the directions where x fails to be linear:
the edge normals of K.  A segment K gives a strip with one null direction,
the origin alone gives the zero seminorm.

Classes are written ``a*l1 + b*l2`` and a direction ``(a, b)`` has slope
``b/a`` (``inf`` when a = 0).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

from .arith import positive_cf, require_unit_interval
from .base_norms import PMType, VertexNorms, base_vertex_norms, pm_type
from .diagram import RationalDiagram, is_base_type, tangle_decomposition
from .errors import DomainError, InternalConsistencyError, KnotInputError
from .geometry import ConvexPolygon, Point, Region, convex_hull, det, polar_dual

Direction = tuple[int, int]
Slope = Union[Fraction, float]  # math.inf for the vertical direction

INF = math.inf


def primitive(v: Sequence[Fraction | int]) -> Direction:
    """Primitive integer vector on the ray through ``v``."""
    x, y = Fraction(v[0]), Fraction(v[1])
    if x == 0 and y == 0:
        raise DomainError("zero vector has no direction")
    m = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
    a, b = int(x * m), int(y * m)
    g = gcd(a, b)
    return a // g, b // g


def upper(d: Direction) -> Direction:
    """Representative of ``+-d`` in the closed upper half plane (x-axis: positive side)."""
    a, b = d
    return d if b > 0 or (b == 0 and a > 0) else (-a, -b)


def slope(d: Direction) -> Slope:
    a, b = d
    return INF if a == 0 else Fraction(b, a)


def slope_direction(s: Slope) -> Direction:
    if s == INF or s == -INF:
        return (0, 1)
    s = Fraction(s)
    return upper((s.denominator, s.numerator))


def format_slope(s: Slope) -> str:
    return "inf" if s == INF else str(s)


def parse_slope(text: str) -> Slope:
    text = text.strip()
    if text in ("inf", "oo", "1/0"):
        return INF
    return Fraction(text)


def _angle_key(d: Direction):
    """Sort key for counterclockwise order starting at the positive x-axis."""
    a, b = d
    half = 0 if b > 0 or (b == 0 and a > 0) else 1
    # within either half plane the angle increases with -cot = -a/b
    return (half, Fraction(-a, b) if b else -INF)


@dataclass(frozen=True)
class NormBall:
    """A symmetric piecewise-linear seminorm on the plane."""

    dual: ConvexPolygon
    finite_rays: tuple[tuple[Direction, Fraction], ...] = field(compare=False)
    null_directions: tuple[Direction, ...] = field(compare=False)
    zero: bool = field(compare=False)

    def evaluate(self, a: Fraction | int, b: Fraction | int) -> Fraction:
        return self.dual.support((Fraction(a), Fraction(b)))

    @property
    def rays(self) -> list[Slope]:
        dirs = [d for d, _ in self.finite_rays] + list(self.null_directions)
        return [slope(d) for d in sorted(dirs, key=_angle_key)]

    @property
    def faces(self) -> int:
        return 2 * len(self.rays)

    @property
    def primal(self) -> Region:
        """The unit ball itself (possibly a strip or the whole plane)."""
        return polar_dual(self.dual)

    def ray_values(self) -> dict[Slope, Fraction]:
        out = {slope(d): v for d, v in self.finite_rays}
        out.update({slope(d): Fraction(0) for d in self.null_directions})
        return out


def ball_from_dual(k: ConvexPolygon) -> NormBall:
    """Ball whose dual is the symmetric polygon ``k``; rays are its edge normals."""
    if not k.vertices or not k.is_centrally_symmetric():
        raise DomainError("dual polygon must be nonempty and centrally symmetric")
    if k.is_point:
        return NormBall(k, (), (), True)
    if k.is_segment:
        w = k.vertices[1]
        return NormBall(k, (), (upper(primitive((-w.y, w.x))),), False)
    rays = {}
    for a, b in k.edges():
        n = upper(primitive((b.y - a.y, a.x - b.x)))
        rays[n] = abs(a.dot(n))
    ordered = tuple(sorted(rays.items(), key=lambda item: _angle_key(item[0])))
    return NormBall(k, ordered, (), False)


def _gradient(d1: Direction, x1: Fraction, d2: Direction, x2: Fraction) -> Point:
    """phi with <d1, phi> = x1 and <d2, phi> = x2."""
    dt = det(d1, d2)
    return Point((x1 * d2[1] - x2 * d1[1]) / dt, (x2 * d1[0] - x1 * d2[0]) / dt)


def ball_from_candidates(candidates: Iterable[tuple[Direction, Fraction | int]]) -> NormBall:
    """Piecewise-linear interpolation of values on candidate directions, pruned to breakpoints.

    ``candidates`` are given up to sign.  Consecutive directions around the
    circle must be less than a half turn apart.  Candidate j is a breakpoint
    iff the gradients of its two neighbouring cones differ; if the left cone's
    linear function overshoots the right neighbour the data is not convex.
    """
    values: dict[Direction, Fraction] = {}
    for d, v in candidates:
        d = upper(primitive(d))
        v = Fraction(v)
        if v < 0:
            raise DomainError(f"negative norm value {v} at {d}")
        if values.setdefault(d, v) != v:
            raise DomainError(f"conflicting values at direction {d}")
    circle = sorted(list(values) + [(-a, -b) for a, b in values], key=_angle_key)
    n = len(circle)
    val = [values[upper(d)] for d in circle]
    for i in range(n):
        if det(circle[i], circle[(i + 1) % n]) <= 0:
            raise DomainError("candidate directions leave a gap of a half turn or more")
    grads = [_gradient(circle[i], val[i], circle[(i + 1) % n], val[(i + 1) % n]) for i in range(n)]

    finite: dict[Direction, Fraction] = {}
    null: set[Direction] = set()
    for j in range(n):
        left, right = grads[j - 1], grads[j]
        nxt = circle[(j + 1) % n]
        if left.dot(nxt) > val[(j + 1) % n]:
            raise DomainError(f"values are not convex at direction {circle[j]}")
        if left == right:
            continue
        d = upper(circle[j])
        if val[j] == 0:
            null.add(d)
        else:
            finite[d] = val[j]
    k = convex_hull(grads)
    if all(v == 0 for v in val):
        ball = NormBall(k, (), (), True)
    else:
        ball = NormBall(
            k,
            tuple(sorted(finite.items(), key=lambda item: _angle_key(item[0]))),
            tuple(sorted(null, key=_angle_key)),
            False,
        )
    oracle = ball_from_dual(k)
    if (oracle.finite_rays, oracle.null_directions, oracle.zero) != (ball.finite_rays, ball.null_directions, ball.zero):
        raise InternalConsistencyError("breakpoint pruning disagrees with the dual polygon")
    if len(ball.null_directions) > 1:
        raise InternalConsistencyError("two independent null directions on a nonzero seminorm")
    return ball


def build_ball(v: VertexNorms) -> NormBall:
    return _build_ball(VertexNorms(*v))


@lru_cache(maxsize=4096)
def _build_ball(v: VertexNorms) -> NormBall:
    v.check()
    return ball_from_candidates([((1, 0), v.x10), ((1, 1), v.x11), ((0, 1), v.x01), ((-1, 1), v.x1m1)])


def _as_diagram(f: Fraction | RationalDiagram) -> RationalDiagram:
    if isinstance(f, RationalDiagram):
        return f
    f = require_unit_interval(Fraction(f))
    if f.denominator % 2:
        raise KnotInputError(f"{f} has odd denominator: L_{f} is a knot")
    return RationalDiagram(positive_cf(f))


def vertex_norms(f: Fraction | RationalDiagram) -> VertexNorms:
    """Tangle sum over the base-type pieces of the diagram."""
    d = _as_diagram(f)
    plain = RationalDiagram(d.boxes) if d.mirror else d
    dec = tangle_decomposition(plain)
    r = dec.r
    x10, x11, x1m1 = r, 2 * r, 2 * r
    for piece, sign in zip(dec.pieces, dec.signs):
        b = base_vertex_norms(piece)
        x10 += b.x10
        x11 += b.bisector(sign)
        x1m1 += b.bisector(-sign)
    out = VertexNorms(x10, x10, x11, x1m1)
    return out.swapped() if d.mirror else out


@lru_cache(maxsize=4096)
def ball_of(f: Fraction) -> NormBall:
    return build_ball(vertex_norms(Fraction(f)))


def evaluate(ball: NormBall, a: Fraction | int, b: Fraction | int) -> Fraction:
    return ball.evaluate(a, b)


def sector_formula(v: VertexNorms, a: Fraction | int, b: Fraction | int) -> Fraction:
    """Closed form of the interpolated seminorm on the eight cones of the axes and bisectors."""
    a, b = Fraction(a), Fraction(b)
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    # now a > 0, or a = 0 and b >= 0
    if b >= 0:
        if a >= b:
            return (a - b) * v.x10 + b * v.x11
        return (b - a) * v.x01 + a * v.x11
    if a >= -b:
        return (a + b) * v.x10 - b * v.x1m1
    return (-b - a) * v.x01 + a * v.x1m1


def rays_of(ball: NormBall) -> list[Slope]:
    return ball.rays


def face_count(ball: NormBall) -> int:
    return ball.faces


SHAPES = ("plane", "strip", "quadrilateral-axes", "quadrilateral-bisectors", "hexagon", "octagon")


def shape_of(ball: NormBall) -> str:
    rays = set(ball.rays)
    n = len(rays)
    if ball.zero:
        return "plane"
    if n == 1:
        return "strip"
    if n == 2:
        if rays == {Fraction(0), INF}:
            return "quadrilateral-axes"
        if rays == {Fraction(1), Fraction(-1)}:
            return "quadrilateral-bisectors"
        return "quadrilateral"
    if n == 3:
        return "hexagon"
    if n == 4:
        return "octagon"
    return f"{2 * n}-gon"


@dataclass(frozen=True)
class BallClassification:
    fraction: Fraction
    base_type: bool
    fibers_with_S10: bool
    rays: tuple[Slope, ...]
    faces: int
    shape: str


def _is_type(t: PMType, sign: int) -> bool:
    return t is PMType.BOTH or t is (PMType.PLUS if sign > 0 else PMType.MINUS)


def _check_corollaries(d: RationalDiagram, rays: set[Slope]) -> None:
    """Re-derive ray containments from the pieces' (+/-)-types."""
    base = is_base_type(d)
    if base != (rays <= {Fraction(1), Fraction(-1)}):
        raise InternalConsistencyError(f"{d}: base-type is {base} but rays are {sorted(map(str, rays))}")
    dec = tangle_decomposition(d)
    types = [pm_type(p) for p in dec.pieces]
    no_plus = all(_is_type(t, s) for t, s in zip(types, dec.signs))
    no_minus = all(_is_type(t, -s) for t, s in zip(types, dec.signs))
    checks = (
        ("{0,-1,inf}", no_plus, rays <= {Fraction(0), Fraction(-1), INF}),
        ("{0,1,inf}", no_minus, rays <= {Fraction(0), Fraction(1), INF}),
        ("{0,inf}", all(t is PMType.BOTH for t in types), rays <= {Fraction(0), INF}),
    )
    for name, by_pieces, by_rays in checks:
        if by_pieces != by_rays:
            raise InternalConsistencyError(f"{d}: pieces say rays within {name} is {by_pieces}, ball says {by_rays}")


def _negate(s: Slope) -> Slope:
    return s if s == INF else -s


def classify_diagram(d: RationalDiagram) -> BallClassification:
    ball = build_ball(vertex_norms(d))
    rays = ball.rays
    # corollaries are stated for positive boxes; mirroring negates every slope
    plain_rays = {_negate(s) for s in rays} if d.mirror else set(rays)
    _check_corollaries(RationalDiagram(d.boxes), plain_rays)
    base = is_base_type(d)
    return BallClassification(d.fraction, base, base, tuple(rays), ball.faces, shape_of(ball))


def classify(f: Fraction) -> BallClassification:
    return classify_diagram(_as_diagram(Fraction(f)))
