"""SVG rendering of a primal norm ball, clipped to the square [-3, 3]^2."""
from __future__ import annotations

from fractions import Fraction

from .ball import NormBall, format_slope, slope_direction
from .geometry import ConvexPolygon, Plane, Point, Strip, polar_dual

VIEW = 3
SIZE = 360


def _clip(poly: list[Point], normal: Point, bound: Fraction) -> list[Point]:
    """Sutherland-Hodgman against <normal, v> <= bound."""
    out: list[Point] = []
    n = len(poly)
    for i in range(n):
        cur, nxt = poly[i], poly[(i + 1) % n]
        fc, fn = cur.dot(normal) - bound, nxt.dot(normal) - bound
        if fc <= 0:
            out.append(cur)
        if (fc < 0 < fn) or (fn < 0 < fc):
            t = fc / (fc - fn)
            out.append(cur + (nxt - cur).scale(t))
    return out


def _view_square() -> list[Point]:
    return [Point.of(-VIEW, -VIEW), Point.of(VIEW, -VIEW), Point.of(VIEW, VIEW), Point.of(-VIEW, VIEW)]


def clipped_region(ball: NormBall) -> list[Point]:
    region = polar_dual(ball.dual)
    if isinstance(region, Plane):
        return _view_square()
    if isinstance(region, Strip):
        poly = _view_square()
        poly = _clip(poly, region.normal, Fraction(1))
        return _clip(poly, -region.normal, Fraction(1))
    assert isinstance(region, ConvexPolygon)
    poly = list(region.vertices)
    for normal in (Point.of(1, 0), Point.of(-1, 0), Point.of(0, 1), Point.of(0, -1)):
        poly = _clip(poly, normal, Fraction(VIEW))
    return poly


def _xy(p: Point) -> tuple[float, float]:
    scale = SIZE / (2 * VIEW)
    return (float(p.x) * scale + SIZE / 2, SIZE / 2 - float(p.y) * scale)


def render_svg(ball: NormBall, title: str = "") -> str:
    pts = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(_xy, clipped_region(ball)))
    c = SIZE / 2
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{title}</title>" if title else "",
        f'<line x1="0" y1="{c}" x2="{SIZE}" y2="{c}" stroke="#bbb"/>',
        f'<line x1="{c}" y1="0" x2="{c}" y2="{SIZE}" stroke="#bbb"/>',
        f'<polygon points="{pts}" fill="#cde" stroke="#246" stroke-width="1.5"/>',
    ]
    for d in ball.null_directions:
        for sgn in (1, -1):
            tip = Point.of(sgn * d[0], sgn * d[1])
            tip = tip.scale(Fraction(VIEW * 9, 10) / max(abs(tip.x), abs(tip.y)))
            x, y = _xy(tip)
            parts.append(
                f'<line x1="{c}" y1="{c}" x2="{x:.3f}" y2="{y:.3f}" stroke="#c33" marker-end="url(#arrow)"/>'
            )
        parts.append(f'<text x="{x:.3f}" y="{y:.3f}" fill="#c33" font-size="12">null</text>')
    for s in ball.rays:
        a, b = slope_direction(s)
        tip = Point.of(a, b).scale(Fraction(VIEW, max(abs(a), abs(b))))
        x, y = _xy(tip)
        parts.append(f'<text x="{min(x, SIZE - 30):.3f}" y="{max(y, 12):.3f}" font-size="10" fill="#555">{format_slope(s)}</text>')
    parts.insert(
        1,
        '<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="6" refY="3" orient="auto">'
        '<path d="M0,0 L6,3 L0,6 z" fill="#c33"/></marker></defs>',
    )
    parts.append("</svg>")
    return "\n".join(p for p in parts if p) + "\n"
