import random
import time
from fractions import Fraction as F
from math import inf

import pytest
from hypothesis import given, strategies as st

from twobridge.arith import positive_cf
from twobridge.ball import ball_of, build_ball, vertex_norms
from twobridge.base_norms import VertexNorms
from twobridge.diagram import RationalDiagram, linking_number
from twobridge.errors import DomainError
from twobridge.satellite import (
    FamilyStep,
    SatelliteInput,
    ball_with_face_count,
    family_rays,
    hexagon_seed,
    iterated_family,
    predicted_rays,
    satellite_ball,
    satellite_ball_dual,
    satellite_evaluate,
    step_from_fraction,
)

SQUARE = ball_of(F(7, 16))
HEXAGON = build_ball(VertexNorms(2, 2, 2, 4))  # mirror of L_{5/14}


def mirrored_5_14_seed(lam=3):
    """The hexagon ball with a caller-supplied linking number."""
    return FamilyStep(vertex_ball(F(5, 14), mirror=True), lam, f"mirror L_5/14, lk {lam} (given)")


def vertex_ball(f, mirror=False):
    return build_ball(vertex_norms(RationalDiagram(positive_cf(f), mirror)))


def test_mirrored_5_14_ball_is_the_hexagon():
    assert vertex_ball(F(5, 14), mirror=True) == HEXAGON
    assert set(HEXAGON.rays) == {0, 1, inf}


def test_evaluate_square_example():
    s = SatelliteInput(SQUARE, 2, SQUARE, 2)
    assert satellite_evaluate(s, 1, 0) == 3
    assert satellite_evaluate(s, 0, 0) == 0


def test_zero_linking_puts_rays_on_axes():
    for companion in (SQUARE, HEXAGON, ball_of(F(5, 24))):
        s = SatelliteInput(companion, 0, HEXAGON, 0)
        ball = satellite_ball(s)
        assert set(ball.rays) <= {0, inf} and ball.faces <= 4
        for a in range(-3, 4):
            for b in range(-3, 4):
                expected = abs(b) * companion.evaluate(0, 1) + abs(a) * HEXAGON.evaluate(1, 0)
                assert satellite_evaluate(s, a, b) == expected


def test_zero_pattern_rescales_companion_rays():
    zero = ball_of(F(1, 2))
    s = SatelliteInput(HEXAGON, 3, zero, 2)
    assert set(satellite_ball(s).rays) == {0, 2, inf}


def test_hexagon_composition():
    s = SatelliteInput(HEXAGON, 3, HEXAGON, 3)
    ball = satellite_ball(s)
    assert set(ball.rays) == {0, F(1, 3), 3, inf}
    assert ball.faces == 8


def test_seed_is_5_22():
    seed = hexagon_seed()
    assert seed.lk == 3
    assert seed.ball == HEXAGON
    assert abs(linking_number(RationalDiagram(positive_cf(F(5, 14))))) == 1


@pytest.mark.parametrize("n, rays", [(0, {0, 1, inf}), (1, {0, F(1, 3), 3, inf}), (2, {0, F(1, 9), 1, 9, inf})])
def test_family_small(n, rays):
    steps = iterated_family(mirrored_5_14_seed(), n)
    assert set(steps[-1].ball.rays) == rays
    assert steps[-1].ball.faces == 2 * (n + 3)


def test_family_closed_form_and_linking():
    seed = hexagon_seed()
    steps = iterated_family(seed, 8)
    for i, step in enumerate(steps):
        assert set(step.ball.rays) == family_rays(3, i)
        assert step.ball.faces == 2 * (i + 3)
        assert step.lk == 3 ** (i + 1)


def test_family_ray_arithmetic_collisions():
    steps = iterated_family(hexagon_seed(), 6)
    for prev, step in zip(steps, steps[1:]):
        s = SatelliteInput(prev.ball, prev.lk, steps[0].ball, steps[0].lk)
        predicted = predicted_rays(s)
        # transported ray sets meet exactly in {0, inf}
        assert len(step.ball.rays) == len(prev.ball.rays) + len(steps[0].ball.rays) - 2
        assert set(step.ball.rays) == predicted


def test_family_rejects_bad_seed():
    with pytest.raises(DomainError):
        iterated_family(FamilyStep(SQUARE, 2, "square"), 1)
    with pytest.raises(DomainError):
        iterated_family(mirrored_5_14_seed(lam=1), 1)
    with pytest.raises(DomainError):
        iterated_family(hexagon_seed(), -1)


def test_ball_with_face_count():
    start = time.perf_counter()
    for n in range(13):
        ball, chain = ball_with_face_count(n)
        assert ball.faces == 2 * n and chain
    assert time.perf_counter() - start < 1.0
    assert ball_with_face_count(1)[0] == ball_of(F(1, 4))
    assert ball_with_face_count(2)[0] == SQUARE
    with pytest.raises(DomainError):
        ball_with_face_count(-1)


def test_step_from_fraction():
    step = step_from_fraction(F(5, 14), mirror=True)
    assert step.ball == HEXAGON and abs(step.lk) == 1


def two_bridge_fractions(max_q=30):
    return [F(p, q) for q in range(2, max_q + 1, 2) for p in range(1, q, 2) if F(p, q).denominator == q]


@given(
    st.sampled_from(two_bridge_fractions()),
    st.sampled_from(two_bridge_fractions()),
    st.integers(-4, 4),
    st.integers(-4, 4),
    st.booleans(),
    st.booleans(),
)
def test_ray_and_minkowski_routes_agree(f, g, lam, lam_p, mf, mg):
    s = SatelliteInput(vertex_ball(f, mf), lam, vertex_ball(g, mg), lam_p)
    ball, oracle = satellite_ball(s), satellite_ball_dual(s)
    assert ball == oracle
    assert dict(ball.finite_rays) == dict(oracle.finite_rays)
    assert ball.null_directions == oracle.null_directions
    rng = random.Random(hash((f, g, lam, lam_p)))
    for _ in range(20):
        a, b = rng.randint(-30, 30), rng.randint(-30, 30)
        assert ball.evaluate(a, b) == satellite_evaluate(s, a, b)
