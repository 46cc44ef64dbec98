"""Exact planar convex geometry over the rationals.

Polygons are stored as counterclockwise vertex tuples starting at the
lexicographically smallest vertex, so equal polygons compare equal.  A
polygon may degenerate to a segment (two vertices), a point (one) or be
empty.  Polar duals of degenerate symmetric polygons are unbounded and use
the tagged variants :class:`Strip` and :class:`Plane`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import DomainError

Number = Union[int, Fraction]


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: Number, y: Number) -> "Point":
        return cls(Fraction(x), Fraction(y))

    def __add__(self, other: "Point") -> "Point":  # type: ignore[override]
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def scale(self, t: Number) -> "Point":
        return Point(self.x * t, self.y * t)

    def dot(self, other: Sequence[Number]) -> Fraction:
        return self.x * other[0] + self.y * other[1]

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


ORIGIN = Point(Fraction(0), Fraction(0))


def _pt(p: Sequence[Number]) -> Point:
    return p if isinstance(p, Point) else Point.of(p[0], p[1])


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Twice the signed area of triangle o, a, b (positive when counterclockwise)."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def det(u: Sequence[Number], v: Sequence[Number]) -> Number:
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class ConvexPolygon:
    vertices: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", _canonical_rotation(tuple(_pt(v) for v in self.vertices)))

    @classmethod
    def from_points(cls, points: Iterable[Sequence[Number]]) -> "ConvexPolygon":
        return convex_hull(points)

    @property
    def dimension(self) -> int:
        return {0: -1, 1: 0, 2: 1}.get(len(self.vertices), 2)

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    def edges(self) -> list[tuple[Point, Point]]:
        n = len(self.vertices)
        if n < 2:
            return []
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def is_centrally_symmetric(self) -> bool:
        vs = set(self.vertices)
        return all(-v in vs for v in vs)

    def support(self, v: Sequence[Number]) -> Fraction:
        if not self.vertices:
            raise DomainError("support of the empty polygon")
        return max(p.dot(v) for p in self.vertices)

    def contains(self, p: Sequence[Number]) -> bool:
        p = _pt(p)
        n = len(self.vertices)
        if n == 0:
            return False
        if n == 1:
            return p == self.vertices[0]
        if n == 2:
            a, b = self.vertices
            return cross(a, b, p) == 0 and min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)
        return all(cross(a, b, p) >= 0 for a, b in self.edges())

    def linear_image(self, m: Sequence[Sequence[Number]]) -> "ConvexPolygon":
        """Image under the 2x2 matrix ``m`` (rows), re-hulled."""
        (a, b), (c, d) = m
        return convex_hull(Point(a * v.x + b * v.y, c * v.x + d * v.y) for v in self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def _canonical_rotation(vs: tuple[Point, ...]) -> tuple[Point, ...]:
    if not vs:
        return vs
    i = min(range(len(vs)), key=lambda j: vs[j])
    return vs[i:] + vs[:i]


def convex_hull(points: Iterable[Sequence[Number]]) -> ConvexPolygon:
    """Andrew's monotone chain; collinear points are dropped."""
    pts = sorted(set(_pt(p) for p in points))
    if len(pts) <= 2:
        return ConvexPolygon(tuple(pts))

    def chain(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return ConvexPolygon(tuple(hull))


def _half(v: Point) -> int:
    """0 for directions in [0, pi), 1 for [pi, 2pi)."""
    return 0 if v.y > 0 or (v.y == 0 and v.x > 0) else 1


def _angle_key_less(u: Point, v: Point) -> bool:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu < hv
    return det(u, v) > 0


def _edge_vectors(p: ConvexPolygon) -> tuple[Point, list[Point]]:
    """Bottom-most (then leftmost) vertex and the counterclockwise edge vectors from it."""
    vs = p.vertices
    start = min(range(len(vs)), key=lambda j: (vs[j].y, vs[j].x))
    ordered = vs[start:] + vs[:start]
    n = len(ordered)
    if n == 1:
        return ordered[0], []
    return ordered[0], [ordered[(i + 1) % n] - ordered[i] for i in range(n)]


def minkowski_sum(a: ConvexPolygon, b: ConvexPolygon) -> ConvexPolygon:
    """Edge-merge Minkowski sum; segments count as 2-gons, points have no edges."""
    if not a.vertices or not b.vertices:
        return ConvexPolygon(())
    sa, ea = _edge_vectors(a)
    sb, eb = _edge_vectors(b)
    cur = sa + sb
    out = [cur]
    i = j = 0
    while i < len(ea) or j < len(eb):
        if j == len(eb) or (i < len(ea) and _angle_key_less(ea[i], eb[j])):
            cur = cur + ea[i]
            i += 1
        elif i == len(ea) or _angle_key_less(eb[j], ea[i]):
            cur = cur + eb[j]
            j += 1
        else:
            cur = cur + ea[i] + eb[j]
            i += 1
            j += 1
        out.append(cur)
    # the walk closes on its start; convex_hull also drops merged collinear points
    return convex_hull(out)


@dataclass(frozen=True)
class Strip:
    """The region ``|<normal, phi>| <= 1``."""

    normal: Point

    def __post_init__(self):
        object.__setattr__(self, "normal", _pt(self.normal))
        if self.normal == ORIGIN:
            raise DomainError("strip normal must be nonzero")

    def support(self, v: Sequence[Number]) -> Fraction | float:
        v = _pt(v)
        if det(self.normal, v) != 0:
            return math.inf
        n = self.normal
        t = v.x / n.x if n.x != 0 else v.y / n.y
        return abs(t)


@dataclass(frozen=True)
class Plane:
    """The whole plane."""

    def support(self, v: Sequence[Number]) -> Fraction | float:
        v = _pt(v)
        return Fraction(0) if v == ORIGIN else math.inf


Region = Union[ConvexPolygon, Strip, Plane]


def polar_dual(p: Region) -> Region:
    """``{phi : <v, phi> <= 1 for all v in p}`` for symmetric ``p`` around the origin."""
    if isinstance(p, Plane):
        return ConvexPolygon((ORIGIN,))
    if isinstance(p, Strip):
        return ConvexPolygon((p.normal, -p.normal))
    if not p.vertices:
        raise DomainError("polar dual of the empty polygon")
    if not p.is_centrally_symmetric():
        raise DomainError("polar dual needs a centrally symmetric polygon")
    if p.is_point:
        return Plane()
    if p.is_segment:
        return Strip(max(p.vertices))
    vertices = []
    for a, b in p.edges():
        d = det(a, b)
        if d <= 0:
            raise DomainError("origin is not interior to the polygon")
        # solve <a, phi> = <b, phi> = 1
        vertices.append(Point((b.y - a.y) / d, (a.x - b.x) / d))
    return ConvexPolygon(tuple(vertices))


def support_value(p: Region, v: Sequence[Number]) -> Fraction | float:
    """``max <v, .>`` over ``p``; ``math.inf`` when unbounded in direction v."""
    return p.support(v)
