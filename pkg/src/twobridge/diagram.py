"""Rational diagrams ``T(a_1, ..., a_k)`` as 4-strand plats.

Layout used throughout (positions numbered 1..4 from the left, strands
flowing top to bottom):

* top caps join positions (1, 2) and (3, 4);
* box i twists positions (2, 3) when i is odd and (1, 2) when i is even;
* bottom caps join (1, 2), (3, 4) for odd k and (2, 3), (1, 4) for even k.

In an odd box the strand running down-right passes over; in an even box the
strand running down-left does.  For positive labels this is the alternating
diagram.  The standard orientation runs each component downward through the
left end of its top cap, so component 1 owns positions 1-2 at the top and
component 2 owns positions 3-4.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import ContinuedFraction, cf_evaluate, convergent_pairs, positive_cf
from .errors import DomainError, InternalConsistencyError, KnotInputError

TOP_CAPS = ((1, 2), (3, 4))


def bottom_caps(k: int) -> tuple[tuple[int, int], tuple[int, int]]:
    return ((1, 2), (3, 4)) if k % 2 else ((2, 3), (1, 4))


def box_position(i: int) -> int:
    """Left position of the pair twisted by box ``i`` (1-based)."""
    return 2 if i % 2 else 1


@dataclass(frozen=True)
class RationalDiagram:
    boxes: ContinuedFraction
    mirror: bool = False

    def __post_init__(self):
        boxes = ContinuedFraction(self.boxes)
        if not boxes.all_positive:
            raise DomainError(f"box labels must be positive, got T({boxes}); use from_cf for signed input")
        object.__setattr__(self, "boxes", boxes)
        # positive coefficients: the last convergent pair is already reduced
        if convergent_pairs(boxes)[-1][1] % 2:
            raise KnotInputError(f"T({boxes}) has odd denominator: it is a knot, not a 2-component link")

    @classmethod
    def from_cf(cls, cf: Sequence[int]) -> "RationalDiagram":
        """Signed coefficients: all negative means the mirror of the absolute values."""
        cf = ContinuedFraction(cf)
        if cf.all_positive:
            return cls(cf)
        if all(a < 0 for a in cf):
            return cls(ContinuedFraction(-a for a in cf), mirror=True)
        raise DomainError(f"mixed-sign expansion [{cf}] is not an alternating diagram")

    @classmethod
    def from_fraction(cls, f: Fraction) -> "RationalDiagram":
        return cls(positive_cf(f))

    @classmethod
    def parse(cls, text: str, mirror: bool = False) -> "RationalDiagram":
        d = cls.from_cf(ContinuedFraction.parse(text))
        return cls(d.boxes, d.mirror != mirror) if mirror else d

    @property
    def k(self) -> int:
        return len(self.boxes)

    @property
    def crossing_count(self) -> int:
        return sum(self.boxes)

    @property
    def signed_cf(self) -> ContinuedFraction:
        return ContinuedFraction(-a for a in self.boxes) if self.mirror else self.boxes

    @property
    def fraction(self) -> Fraction:
        """The link's slope ``p/q`` normalised into (0, 1)."""
        return cf_evaluate(self.signed_cf) % 1

    def mirrored(self) -> "RationalDiagram":
        return RationalDiagram(self.boxes, not self.mirror)

    def __str__(self) -> str:
        text = f"T({self.boxes})"
        return f"mirror {text}" if self.mirror else text


@dataclass(frozen=True)
class ComponentTrace:
    """Strand bookkeeping for one diagram.

    ``box_components[i]`` gives the components of the two strands in box
    ``i + 1`` (left position first, as they enter from above);
    ``box_signs[i]`` is the common sign of that box's crossings.  Threads are
    the four top-to-bottom strands, indexed by their top position.
    """

    box_components: tuple[tuple[int, int], ...]
    box_signs: tuple[int, ...]
    thread_components: tuple[int, int, int, int]
    thread_directions: tuple[int, int, int, int]

    def is_self_crossing(self, i: int) -> bool:
        a, b = self.box_components[i - 1]
        return a == b


def _thread_walk(boxes: Sequence[int]):
    """Push the four threads through the boxes.

    Returns (per-box threads entering the box, thread -> bottom position).
    """
    at = {p: p for p in range(1, 5)}  # position -> thread
    entering = []
    for i, a in enumerate(boxes, start=1):
        pos = box_position(i)
        entering.append((at[pos], at[pos + 1]))
        if a % 2:
            at[pos], at[pos + 1] = at[pos + 1], at[pos]
    return entering, {t: p for p, t in at.items()}


def trace_components(d: RationalDiagram) -> ComponentTrace:
    entering, end_pos = _thread_walk(d.boxes)
    thread_at_bottom = {p: t for t, p in end_pos.items()}
    top = {}
    for x, y in TOP_CAPS:
        top[x], top[y] = y, x
    bottom = {}
    for x, y in bottom_caps(d.k):
        bottom[x], bottom[y] = y, x

    comp: dict[int, int] = {}
    direction: dict[int, int] = {}
    for label, start in ((1, 1), (2, 3)):
        if start in comp:
            raise KnotInputError(f"{d} closes up into a single component")
        t, dirn = start, 1
        while t not in comp:
            comp[t], direction[t] = label, dirn
            if dirn == 1:
                t, dirn = thread_at_bottom[bottom[end_pos[t]]], -1
            else:
                t, dirn = top[t], 1
    if len(comp) != 4:
        raise InternalConsistencyError(f"trace of {d} did not cover all four threads")

    chirality = -1 if d.mirror else 1
    box_components = []
    box_signs = []
    for i, (left, right) in enumerate(entering, start=1):
        box_components.append((comp[left], comp[right]))
        # both strands downward: odd boxes are negative, even boxes positive
        base = -1 if i % 2 else 1
        box_signs.append(chirality * base * direction[left] * direction[right])
    return ComponentTrace(
        tuple(box_components),
        tuple(box_signs),
        tuple(comp[t] for t in range(1, 5)),
        tuple(direction[t] for t in range(1, 5)),
    )


def self_crossing_boxes(d: RationalDiagram) -> list[tuple[int, int]]:
    tr = trace_components(d)
    return [(i, a) for i, a in enumerate(d.boxes, start=1) if tr.is_self_crossing(i)]


def is_base_type(d: RationalDiagram) -> bool:
    """Parity pattern: k = 1 with a_1 even, or odd ends and even interior."""
    a = d.boxes
    if len(a) == 1:
        return a[0] % 2 == 0
    return a[0] % 2 == 1 and a[-1] % 2 == 1 and all(x % 2 == 0 for x in a[1:-1])


def linking_number(d: RationalDiagram) -> int:
    tr = trace_components(d)
    total = sum(
        a * sign
        for a, (c1, c2), sign in zip(d.boxes, tr.box_components, tr.box_signs)
        if c1 != c2
    )
    if total % 2:
        raise InternalConsistencyError(f"odd inter-component crossing sum for {d}")
    return total // 2


def seifert_circles(d: RationalDiagram, relative: bool = False) -> int:
    """Number of Seifert circles under the standard orientation.

    ``relative=True`` reverses component 2 first.  Smoothing a crossing
    between co-directed strands keeps both verticals; between opposed
    strands it joins them by a cap above and a cup below.
    """
    tr = trace_components(d)
    direction = dict(zip(range(1, 5), tr.thread_directions))
    if relative:
        for t, c in zip(range(1, 5), tr.thread_components):
            if c == 2:
                direction[t] = -direction[t]

    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    # node (level, position): the arc of that position below crossing number `level`
    at = {p: p for p in range(1, 5)}
    level = 0
    for i, a in enumerate(d.boxes, start=1):
        pos = box_position(i)
        for _ in range(a):
            left, right = at[pos], at[pos + 1]
            for p in range(1, 5):
                if p not in (pos, pos + 1):
                    union((level, p), (level + 1, p))
            if direction[left] == direction[right]:
                union((level, pos), (level + 1, pos))
                union((level, pos + 1), (level + 1, pos + 1))
            else:
                union((level, pos), (level, pos + 1))
                union((level + 1, pos), (level + 1, pos + 1))
            at[pos], at[pos + 1] = right, left
            level += 1
    for x, y in TOP_CAPS:
        union((0, x), (0, y))
    for x, y in bottom_caps(d.k):
        union((level, x), (level, y))
    for lv in range(level + 1):
        for p in range(1, 5):
            find((lv, p))
    return len({find(x) for x in parent})


def seifert_norms(d: RationalDiagram) -> tuple[int, int]:
    """``(x(l1+l2), x(l1-l2))`` as crossings minus Seifert circles.

    Seifert's algorithm is norm-minimising on alternating diagrams, so this
    is an independent route to the bisector norms.
    """
    c = d.crossing_count
    plus = c - seifert_circles(d)
    minus = c - seifert_circles(d, relative=True)
    if d.mirror:
        plus, minus = minus, plus
    return plus, minus


@dataclass(frozen=True)
class TangleDecomposition:
    pieces: tuple[RationalDiagram, ...]
    signs: tuple[int, ...]
    cut_indices: tuple[int, ...]
    cut_labels: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.cut_indices)


def tangle_decomposition(d: RationalDiagram) -> TangleDecomposition:
    """Cut at every self-crossing box into base-type pieces D_0..D_r.

    Piece j sits between cuts j and j+1.  Its sign says whether the
    orientation induced from ``d`` is the piece's own standard one: each cut
    at box i with label b contributes (-1)^(b + i - i_prev), where i_prev is
    the previous cut (0 for the first), so piece j carries
    (-1)^(b_1 + ... + b_j + i_j).
    """
    cuts = self_crossing_boxes(d)
    idx = [i for i, _ in cuts]
    bounds = [0] + idx + [d.k + 1]
    pieces = []
    for lo, hi in zip(bounds, bounds[1:]):
        coeffs = d.boxes[lo:hi - 1]
        if not coeffs:
            raise InternalConsistencyError(f"empty tangle piece between boxes {lo} and {hi} of {d}")
        piece = RationalDiagram(ContinuedFraction(coeffs))
        if not is_base_type(piece):
            raise InternalConsistencyError(f"piece {piece} of {d} is not base-type")
        pieces.append(piece)
    signs = [1]
    exponent = 0
    for i, b in cuts:
        exponent += b
        signs.append(-1 if (exponent + i) % 2 else 1)
    return TangleDecomposition(tuple(pieces), tuple(signs), tuple(idx), tuple(b for _, b in cuts))


def split_diagram(d: RationalDiagram) -> tuple[list[RationalDiagram], list[int]]:
    dec = tangle_decomposition(d)
    return list(dec.pieces), list(dec.signs)
