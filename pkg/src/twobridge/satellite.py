"""Norm balls of satellite links and balls with a prescribed number of faces.

For a companion L with linking number lam and a pattern L' with linking
number lam_p the satellite norm is

    x(a, b) = x_L(lam_p * a, b) + x_L'(a, lam * b).

A companion breakpoint of slope alpha therefore reappears at slope
lam_p * alpha, and a pattern breakpoint beta at beta / lam.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import positive_cf
from .ball import (
    INF,
    NormBall,
    Slope,
    ball_from_candidates,
    ball_from_dual,
    ball_of,
    build_ball,
    format_slope,
    primitive,
    slope_direction,
    upper,
    vertex_norms,
)
from .diagram import RationalDiagram, linking_number
from .errors import DomainError, InternalConsistencyError
from .geometry import minkowski_sum


@dataclass(frozen=True)
class SatelliteInput:
    companion: NormBall
    lk_companion: int
    pattern: NormBall
    lk_pattern: int


@dataclass(frozen=True)
class FamilyStep:
    ball: NormBall
    lk: int
    provenance: str


def satellite_evaluate(s: SatelliteInput, a: Fraction | int, b: Fraction | int) -> Fraction:
    a, b = Fraction(a), Fraction(b)
    return s.companion.evaluate(s.lk_pattern * a, b) + s.pattern.evaluate(a, s.lk_companion * b)


def _companion_direction(alpha: Slope, lk_pattern: int) -> tuple[int, int] | None:
    a0, b0 = slope_direction(alpha)
    d = (a0, lk_pattern * b0)
    return None if d == (0, 0) else d


def _pattern_direction(beta: Slope, lk_companion: int) -> tuple[int, int] | None:
    c0, d0 = slope_direction(beta)
    d = (lk_companion * c0, d0)
    return None if d == (0, 0) else d


def satellite_ball(s: SatelliteInput) -> NormBall:
    """Breakpoint-pruned ball from the transported rays of both summands."""
    dirs = {(1, 0), (0, 1)}
    for alpha in s.companion.rays:
        d = _companion_direction(alpha, s.lk_pattern)
        if d is not None:
            dirs.add(upper(primitive(d)))
    for beta in s.pattern.rays:
        d = _pattern_direction(beta, s.lk_companion)
        if d is not None:
            dirs.add(upper(primitive(d)))
    return ball_from_candidates((d, satellite_evaluate(s, *d)) for d in dirs)


def satellite_ball_dual(s: SatelliteInput) -> NormBall:
    """Oracle: dual polygon diag(lam_p, 1) K_L plus diag(1, lam) K_L'."""
    k = minkowski_sum(
        s.companion.dual.linear_image(((s.lk_pattern, 0), (0, 1))),
        s.pattern.dual.linear_image(((1, 0), (0, s.lk_companion))),
    )
    return ball_from_dual(k)


def predicted_rays(s: SatelliteInput) -> set[Slope]:
    """Ray set from slope arithmetic alone (before pruning)."""
    out: set[Slope] = set()
    for alpha in s.companion.rays:
        if alpha != INF:
            out.add(s.lk_pattern * alpha)
        elif s.lk_pattern != 0:
            out.add(INF)
    for beta in s.pattern.rays:
        if s.lk_companion == 0 or beta == INF:
            out.add(INF)
        else:
            out.add(beta / s.lk_companion)
    return out


SEED_FRACTION = Fraction(5, 22)


def hexagon_seed() -> FamilyStep:
    """L_{5/22} = T(4,2,2): rays {0, 1, inf} and traced lk 3.

    Its ball equals that of the mirror of L_{5/14}, but that link has
    |lk| = 1 and cannot seed a growing family.
    """
    d = RationalDiagram(positive_cf(SEED_FRACTION))
    lk = abs(linking_number(d))
    return FamilyStep(build_ball(vertex_norms(d)), lk, f"L_0 = L_{SEED_FRACTION} = {d}, lk {lk}")


def step_from_fraction(f: Fraction, mirror: bool = False) -> FamilyStep:
    d = RationalDiagram(positive_cf(Fraction(f)), mirror=mirror)
    lk = linking_number(d)
    return FamilyStep(build_ball(vertex_norms(d)), lk, f"L_{Fraction(f)} = {d}, lk {lk}")


def iterated_family(seed: FamilyStep, n: int) -> list[FamilyStep]:
    if n < 0:
        raise DomainError("family length must be nonnegative")
    if set(seed.ball.rays) != {Fraction(0), Fraction(1), INF}:
        raise DomainError(f"seed rays must be {{0, 1, inf}}, got {sorted(map(format_slope, seed.ball.rays))}")
    lam = seed.lk
    if lam < 2:
        raise DomainError("seed linking number must be at least 2")
    steps = [seed]
    for i in range(1, n + 1):
        prev = steps[-1]
        s = SatelliteInput(prev.ball, prev.lk, seed.ball, lam)
        ball = satellite_ball(s)
        steps.append(
            FamilyStep(ball, prev.lk * lam, f"L_{i} = satellite(companion L_{i - 1}, lk {prev.lk}; pattern L_0, lk {lam})")
        )
    return steps


def family_rays(lam: int, i: int) -> set[Slope]:
    """Closed form {0, lam^-i, lam^(-i+2), ..., lam^i, inf}."""
    return {Fraction(0), INF} | {Fraction(lam) ** e for e in range(-i, i + 1, 2)}


_SMALL = {0: Fraction(1, 2), 1: Fraction(1, 4), 2: Fraction(7, 16), 3: Fraction(5, 14)}


def ball_with_face_count(n: int) -> tuple[NormBall, list[str]]:
    """A 2-bridge or iterated satellite ball with exactly 2n faces."""
    if n < 0:
        raise DomainError("face count parameter must be nonnegative")
    if n in _SMALL:
        f = _SMALL[n]
        ball, chain = ball_of(f), [f"L_{f} (2-bridge)"]
    else:
        steps = iterated_family(hexagon_seed(), n - 3)
        ball, chain = steps[-1].ball, [s.provenance for s in steps]
    if ball.faces != 2 * n:
        raise InternalConsistencyError(f"built a ball with {ball.faces} faces, wanted {2 * n}")
    return ball, chain
