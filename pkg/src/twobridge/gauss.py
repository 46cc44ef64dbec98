"""Explicit polyline model of the plat, used as an independent oracle.

The diagram is drawn on the integer grid (x = twice the position 1..4,
y = twice the crossing level, growing downward).  Every crossing is a pair of unit diagonals in one
level; caps are drawn above and below.  Components are found by walking the
polyline graph, crossings by exact segment intersection, and signs from
the over/under tags, without reusing any of the tracer's bookkeeping.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .diagram import RationalDiagram

Node = tuple[int, int]


def _n(x: int, y: int) -> Node:
    # doubled so cap midpoints stay integral
    return (2 * x, 2 * y)


@dataclass(frozen=True)
class Crossing:
    over: int  # component of the over strand
    under: int
    sign: int
    level: int


@dataclass(frozen=True)
class PlatDrawing:
    # undirected segments, with an "over" tag on the crossing diagonals that pass over
    segments: tuple[tuple[Node, Node, bool], ...]


def draw(d: RationalDiagram) -> PlatDrawing:
    segs: list[tuple[Node, Node, bool]] = []
    level = 0
    for i, a in enumerate(d.boxes, start=1):
        pos = 2 if i % 2 else 1
        for _ in range(a):
            for p in range(1, 5):
                if p not in (pos, pos + 1):
                    segs.append((_n(p, level), _n(p, level + 1), False))
            right_down = (_n(pos, level), _n(pos + 1, level + 1))
            left_down = (_n(pos + 1, level), _n(pos, level + 1))
            # odd boxes: the down-right diagonal is on top; even boxes: the down-left one
            over_right = (i % 2 == 1) != d.mirror
            segs.append((*right_down, over_right))
            segs.append((*left_down, not over_right))
            level += 1
    for a, b in ((1, 2), (3, 4)):
        mid = (2 * a + 1, -2)
        segs += [(_n(a, 0), mid, False), (mid, _n(b, 0), False)]
    bottom = level
    if len(d.boxes) % 2:
        for a, b in ((1, 2), (3, 4)):
            mid = (2 * a + 1, 2 * bottom + 2)
            segs += [(_n(a, bottom), mid, False), (mid, _n(b, bottom), False)]
    else:
        mid = (5, 2 * bottom + 2)
        segs += [(_n(2, bottom), mid, False), (mid, _n(3, bottom), False)]
        c1, c2 = _n(1, bottom + 2), _n(4, bottom + 2)
        segs += [(_n(1, bottom), c1, False), (c1, c2, False), (c2, _n(4, bottom), False)]
    return PlatDrawing(tuple(segs))


def _components(drawing: PlatDrawing) -> list[list[tuple[Node, Node, bool]]]:
    """Oriented closed walks: component 1 leaves (1, 0) downward, component 2 leaves (3, 0) downward."""
    adj: dict[Node, list[tuple[Node, bool]]] = {}
    for a, b, over in drawing.segments:
        adj.setdefault(a, []).append((b, over))
        adj.setdefault(b, []).append((a, over))
    if any(len(v) != 2 for v in adj.values()):
        raise ValueError("plat drawing is not a closed 1-manifold")
    used: set[frozenset] = set()
    comps = []
    for start in (_n(1, 0), _n(3, 0)):
        walk = []
        cur = start
        nxt = [(w, o) for w, o in adj[start] if w[1] > start[1]]
        while nxt:
            w, over = nxt[0]
            used.add(frozenset((cur, w)))
            walk.append((cur, w, over))
            cur = w
            nxt = [(x, o) for x, o in adj[cur] if frozenset((cur, x)) not in used]
        comps.append(walk)
    if len(used) != len(drawing.segments):
        raise ValueError("drawing has more than two components")
    return comps


def _proper_intersection(s, t) -> bool:
    def orient(o, a, b):
        v = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
        return (v > 0) - (v < 0)

    (p1, p2), (q1, q2) = s, t
    if max(p1[0], p2[0]) < min(q1[0], q2[0]) or max(q1[0], q2[0]) < min(p1[0], p2[0]):
        return False
    if max(p1[1], p2[1]) < min(q1[1], q2[1]) or max(q1[1], q2[1]) < min(p1[1], p2[1]):
        return False
    return (
        orient(p1, p2, q1) * orient(p1, p2, q2) < 0
        and orient(q1, q2, p1) * orient(q1, q2, p2) < 0
    )


def _candidate_pairs(segments):
    """Index pairs of segments sharing a horizontal band (bands two units tall)."""
    bands: dict[int, list[int]] = {}
    for i, (a, b, _) in enumerate(segments):
        for band in range(min(a[1], b[1]) // 2, max(a[1], b[1]) // 2 + 1):
            bands.setdefault(band, []).append(i)
    pairs = set()
    for members in bands.values():
        pairs.update(combinations(members, 2))
    return sorted(pairs)


def crossings(d: RationalDiagram) -> list[Crossing]:
    comps = _components(draw(d))
    tagged = [(c + 1, seg) for c, walk in enumerate(comps) for seg in walk]
    out = []
    for i, j in _candidate_pairs([seg for _, seg in tagged]):
        (ca, sa), (cb, sb) = tagged[i], tagged[j]
        if not _proper_intersection(sa[:2], sb[:2]):
            continue
        if sa[2] == sb[2]:
            raise ValueError("two crossing strands with the same over/under tag")
        (co, so), (cu, su) = ((ca, sa), (cb, sb)) if sa[2] else ((cb, sb), (ca, sa))
        # flip y so the plane is right-handed, then sign = orientation of (over, under)
        ox, oy = so[1][0] - so[0][0], -(so[1][1] - so[0][1])
        ux, uy = su[1][0] - su[0][0], -(su[1][1] - su[0][1])
        cr = ox * uy - oy * ux
        level = min(so[0][1], so[1][1]) // 2
        out.append(Crossing(co, cu, 1 if cr > 0 else -1, level))
    out.sort(key=lambda c: c.level)
    return out


def gauss_linking_number(d: RationalDiagram) -> int:
    total = sum(c.sign for c in crossings(d) if c.over != c.under)
    if total % 2:
        raise ValueError("odd inter-component crossing sum")
    return total // 2


def is_alternating(d: RationalDiagram) -> bool:
    """Over and under alternate along every component."""
    drawing = draw(d)
    for walk in _components(drawing):
        pattern = []
        for seg in walk:
            if any(_proper_intersection(seg[:2], t[:2]) for t in drawing.segments):
                pattern.append(seg[2])
        if any(x == y for x, y in zip(pattern, pattern[1:] + pattern[:1])):
            return False
    return True
