"""The tree T_{1/0} of even-denominator Farey vertices, built from a group orbit.

The Farey tessellation is cut into quadrilaterals, each the union of two
triangles across a diagonal from the orbit of (0/1, 1/1).  The group G is
generated by ``z -> z + 1`` and ``R: z -> (z - 1)/(2z - 1)``; the fundamental
quadrilateral is 0/1, 1/2, 1/1, 1/0 and T_{1/0} consists of the G-images of
its other diagonal (1/0, 1/2).

Walking from a quadrilateral to its neighbour across a side is right
multiplication by a fixed word, so breadth-first search over words visits
every quadrilateral exactly once.  Only the quadrilaterals over [0, 1] are
generated: the rest of the tessellation consists of integer translates, and
every link slope lives in (0, 1).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterator

from .arith import require_unit_interval
from .errors import DomainError, KnotInputError, PathNotFound

Matrix = tuple[int, int, int, int]

_T: Matrix = (1, 1, 0, 1)
_T_INV: Matrix = (1, -1, 0, 1)
_R: Matrix = (1, -1, 2, -1)

PATH_CAP_FACTOR = 2**20


def _mul(g: Matrix, h: Matrix) -> Matrix:
    a, b, c, d = g
    e, f, x, y = h
    return (a * e + b * x, a * f + b * y, c * e + d * x, c * f + d * y)


@dataclass(frozen=True, order=True)
class FareyVertex:
    """Projective rational ``p/q`` with q >= 0; 1/0 is infinity."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        g = gcd(p, q)
        if g == 0:
            raise DomainError("0/0 is not a Farey vertex")
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)

    @classmethod
    def of(cls, f: Fraction) -> "FareyVertex":
        return cls(f.numerator, f.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def admissible(self) -> bool:
        return self.q % 2 == 0

    def act(self, g: Matrix) -> "FareyVertex":
        a, b, c, d = g
        return FareyVertex(a * self.p + b * self.q, c * self.p + d * self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


INFINITY = FareyVertex(1, 0)

_QUAD = (FareyVertex(0, 1), FareyVertex(1, 2), FareyVertex(1, 1), INFINITY)
_DIAGONAL = (INFINITY, FareyVertex(1, 2))
# (side of the fundamental quadrilateral, word taking it to the neighbour across that side)
_MOVES: tuple[tuple[tuple[FareyVertex, FareyVertex], Matrix, bool], ...] = (
    ((_QUAD[0], _QUAD[1]), _mul(_R, _T), False),
    ((_QUAD[1], _QUAD[2]), _mul(_R, _T_INV), False),
    # the two sides at infinity lead to translates; skipped from the root
    ((_QUAD[3], _QUAD[0]), _T_INV, True),
    ((_QUAD[2], _QUAD[3]), _T, True),
)


def _edge(u: FareyVertex, v: FareyVertex) -> tuple[FareyVertex, FareyVertex]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class FareyTree:
    max_den: int
    edges: frozenset[tuple[FareyVertex, FareyVertex]]

    @property
    def adjacency(self) -> dict[FareyVertex, list[FareyVertex]]:
        return _adjacency(self)

    @property
    def vertices(self) -> set[FareyVertex]:
        return set(self.adjacency)

    def __contains__(self, edge) -> bool:
        u, v = (x if isinstance(x, FareyVertex) else FareyVertex.of(Fraction(x)) for x in edge)
        return _edge(u, v) in self.edges

    def is_forest(self) -> bool:
        """Edges = vertices - components, i.e. no cycles."""
        adj = self.adjacency
        seen: set[FareyVertex] = set()
        components = 0
        for v in adj:
            if v in seen:
                continue
            components += 1
            stack = [v]
            seen.add(v)
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return len(self.edges) == len(adj) - components

    def distances(self) -> dict[FareyVertex, int]:
        return _distances(self)

    def path(self, target: FareyVertex) -> list[FareyVertex] | None:
        """Vertices of the path from 1/0 to ``target`` (BFS parents), or None."""
        adj = self.adjacency
        if target not in adj:
            return None
        parent = {INFINITY: None}
        queue = deque([INFINITY])
        while queue:
            v = queue.popleft()
            if v == target:
                break
            for w in adj[v]:
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        if target not in parent:
            return None
        out = [target]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out[::-1]


@lru_cache(maxsize=32)
def _adjacency(tree: FareyTree) -> dict[FareyVertex, list[FareyVertex]]:
    adj: dict[FareyVertex, list[FareyVertex]] = {}
    for u, v in sorted(tree.edges):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return adj


@lru_cache(maxsize=32)
def _distances(tree: FareyTree) -> dict[FareyVertex, int]:
    adj = tree.adjacency
    dist = {INFINITY: 0}
    queue = deque([INFINITY])
    while queue:
        v = queue.popleft()
        for w in adj.get(v, ()):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _act(g: Matrix, v: tuple[int, int]) -> tuple[int, int]:
    a, b, c, d = g
    x, y = a * v[0] + b * v[1], c * v[0] + d * v[1]
    # matrices have determinant +-1, so images of reduced pairs stay reduced
    return (-x, -y) if y < 0 or (y == 0 and x < 0) else (x, y)


_QUAD_RAW = tuple((v.p, v.q) for v in _QUAD)
_MOVES_RAW = tuple((((u.p, u.q), (v.p, v.q)), m, inf) for (u, v), m, inf in _MOVES)


def _orbit_words(max_den: int) -> Iterator[Matrix]:
    """Group words for every quadrilateral over [0, 1] with a side of denominator sum <= max_den."""
    seen: set[frozenset[tuple[int, int]]] = set()
    queue: deque[tuple[Matrix, bool]] = deque([((1, 0, 0, 1), True)])
    while queue:
        g, root = queue.popleft()
        key = frozenset(_act(g, v) for v in _QUAD_RAW)
        if key in seen:
            continue
        seen.add(key)
        yield g
        for (u, v), move, at_infinity in _MOVES_RAW:
            if root and at_infinity:
                continue
            # vertices beyond side (u, v) have denominators at least the sum of its ends
            if _act(g, u)[1] + _act(g, v)[1] > max_den:
                continue
            queue.append((_mul(g, move), False))


@lru_cache(maxsize=16)
def t10_tree_build(max_den: int) -> FareyTree:
    if max_den < 2:
        raise DomainError("max_den must be at least 2")
    raw = set()
    ends = tuple((x.p, x.q) for x in _DIAGONAL)
    for g in _orbit_words(max_den):
        u, v = (_act(g, x) for x in ends)
        if u[1] <= max_den and v[1] <= max_den:
            raw.add((u, v) if u <= v else (v, u))
    edges = frozenset((FareyVertex(*u), FareyVertex(*v)) for u, v in raw)
    return FareyTree(max_den, edges)


def _admissible_target(f: Fraction) -> FareyVertex:
    f = require_unit_interval(Fraction(f))
    if f.denominator % 2:
        raise KnotInputError(f"{f} has odd denominator")
    return FareyVertex.of(f)


def _initial_bound(q: int) -> int:
    # round up to a power of two so nearby denominators share one cached tree
    bound = 2
    while bound < q:
        bound *= 2
    return bound


def t10_path(f: Fraction) -> list[FareyVertex]:
    target = _admissible_target(f)
    bound = _initial_bound(target.q)
    cap = PATH_CAP_FACTOR * target.q
    while bound <= cap:
        found = t10_tree_build(bound).path(target)
        if found is not None:
            return found
        bound *= 2
    raise PathNotFound(f"no path from 1/0 to {target} with denominators up to {cap}")


def t10_path_length(f: Fraction) -> int:
    target = _admissible_target(f)
    bound = _initial_bound(target.q)
    cap = PATH_CAP_FACTOR * target.q
    while bound <= cap:
        dist = t10_tree_build(bound).distances()
        if target in dist:
            return dist[target]
        bound *= 2
    raise PathNotFound(f"no path from 1/0 to {target} with denominators up to {cap}")


def x10_via_farey(f: Fraction) -> int:
    return t10_path_length(f) - 1
