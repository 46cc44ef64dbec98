import math
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, strategies as st

from twobridge.errors import DomainError
from twobridge.geometry import (
    Plane,
    Point,
    Strip,
    convex_hull,
    minkowski_sum,
    polar_dual,
    support_value,
)

SQUARE = convex_hull([(1, 0), (0, 1), (-1, 0), (0, -1)])
BOX = convex_hull([(1, 1), (-1, 1), (-1, -1), (1, -1)])


def test_hull_square():
    assert len(SQUARE) == 4


def test_hull_prunes_collinear():
    h = convex_hull([(1, 0), (F(1, 2), F(1, 2)), (0, 1), (-1, 0), (F(-1, 2), F(-1, 2)), (0, -1)])
    assert h == SQUARE


def test_hull_point_and_segment():
    assert convex_hull([(0, 0)]).is_point
    seg = convex_hull([(1, -1), (0, 0), (-1, 1)])
    assert seg.is_segment and set(seg) == {Point.of(1, -1), Point.of(-1, 1)}


def test_hull_is_counterclockwise():
    vs = list(convex_hull([(3, 1), (0, 0), (1, 4), (2, 2), (-1, 2)]))
    n = len(vs)
    for i in range(n):
        a, b, c = vs[i], vs[(i + 1) % n], vs[(i + 2) % n]
        assert (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) > 0


def test_minkowski_translate():
    moved = minkowski_sum(BOX, convex_hull([(1, 1)]))
    assert moved == convex_hull([(2, 2), (0, 2), (0, 0), (2, 0)])


def test_minkowski_two_segments():
    a = convex_hull([(-1, 1), (1, -1)])
    b = convex_hull([(-1, -1), (1, 1)])
    assert minkowski_sum(a, b) == convex_hull([(2, 0), (0, 2), (-2, 0), (0, -2)])


def test_minkowski_homogeneous():
    assert minkowski_sum(BOX, BOX) == convex_hull([(2, 2), (-2, 2), (-2, -2), (2, -2)])


def test_dual_square():
    assert polar_dual(SQUARE) == BOX
    assert polar_dual(BOX) == SQUARE


def test_dual_degenerate():
    assert isinstance(polar_dual(convex_hull([(0, 0)])), Plane)
    strip = polar_dual(convex_hull([(1, -1), (-1, 1)]))
    assert isinstance(strip, Strip)
    assert strip.support((1, -1)) == 1 and strip.support((1, 0)) == math.inf
    assert polar_dual(strip) == convex_hull([(1, -1), (-1, 1)])
    assert polar_dual(Plane()) == convex_hull([(0, 0)])


def test_dual_rejects_asymmetric():
    with pytest.raises(DomainError):
        polar_dual(convex_hull([(1, 0), (0, 1), (-1, -1)]))
    with pytest.raises(DomainError):
        polar_dual(convex_hull([(1, 1)]))


def test_support_values():
    assert support_value(BOX, (1, 0)) == 1
    assert support_value(Plane(), (0, 0)) == 0
    assert support_value(Plane(), (0, 1)) == math.inf


coords = st.fractions(min_value=-5, max_value=5, max_denominator=6)
points = st.lists(st.tuples(coords, coords), min_size=1, max_size=8)


def symmetric(pts):
    return convex_hull([*pts, *((-x, -y) for x, y in pts)])


@given(points, points, st.tuples(coords, coords))
def test_support_is_additive_under_sum(p, q, v):
    a, b = convex_hull(p), convex_hull(q)
    assert minkowski_sum(a, b).support(v) == a.support(v) + b.support(v)


@given(points, points)
def test_sum_matches_hull_of_pairwise_sums(p, q):
    a, b = convex_hull(p), convex_hull(q)
    oracle = convex_hull([(x.x + y.x, x.y + y.y) for x, y in product(a, b)])
    assert minkowski_sum(a, b) == oracle


@given(points)
def test_hull_contains_inputs(p):
    h = convex_hull(p)
    assert all(h.contains(x) for x in p)


@given(points)
def test_double_dual(p):
    k = symmetric(p)
    if k.dimension == 2 and not k.contains((0, 0)):
        return
    if k.dimension == 2 and any(
        (a.x * b.y - a.y * b.x) == 0 for a, b in k.edges()
    ):
        return  # origin on the boundary
    assert polar_dual(polar_dual(k)) == k


@given(points, st.tuples(coords, coords))
def test_linear_image_support(p, v):
    m = ((2, 1), (0, 3))
    k = convex_hull(p)
    # <M x, v> = <x, M^T v>
    vt = (m[0][0] * v[0] + m[1][0] * v[1], m[0][1] * v[0] + m[1][1] * v[1])
    assert k.linear_image(m).support(v) == k.support(vt)
