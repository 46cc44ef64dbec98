"""Closed-form norms of base-type diagrams and their (+/-)-type."""
from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from .diagram import RationalDiagram, is_base_type
from .errors import DomainError, InternalConsistencyError


class VertexNorms(NamedTuple):
    """Norms of l1, l2, l1+l2 and l1-l2."""

    x10: int
    x01: int
    x11: int
    x1m1: int

    def bisector(self, sign: int) -> int:
        """x(l1 + sign*l2)."""
        return self.x11 if sign > 0 else self.x1m1

    def swapped(self) -> "VertexNorms":
        return VertexNorms(self.x10, self.x01, self.x1m1, self.x11)

    def check(self) -> "VertexNorms":
        if min(self) < 0:
            raise DomainError(f"negative norm value in {tuple(self)}")
        if self.x10 != self.x01:
            raise DomainError(f"x(l1) != x(l2) in {tuple(self)}")
        s = self.x10 + self.x01
        if self.x11 > s or self.x1m1 > s or 2 * self.x10 > self.x11 + self.x1m1:
            raise DomainError(f"{tuple(self)} violates the triangle inequality")
        return self

    def as_json(self) -> dict[str, int]:
        return {"l1": self.x10, "l2": self.x01, "l1+l2": self.x11, "l1-l2": self.x1m1}


def _require_base(d: RationalDiagram) -> None:
    if not is_base_type(d):
        raise DomainError(f"{d} is not base-type")


def base_vertex_norms(d: RationalDiagram) -> VertexNorms:
    _require_base(d)
    a = d.boxes
    if a == (2,):
        return VertexNorms(0, 0, 0, 0)
    total = sum(a)
    x10 = total // 2 - 1
    even_sum = sum(a[1::2])
    odd_sum = sum(a[0::2])
    if len(a) % 2:
        x11, x1m1 = even_sum, odd_sum - 2
    else:
        x11, x1m1 = even_sum - 1, odd_sum - 1
    if min(x10, x11, x1m1) < 0:
        raise InternalConsistencyError(f"negative base norm for {d}")
    v = VertexNorms(x10, x10, x11, x1m1)
    return v.swapped() if d.mirror else v


class PMType(str, Enum):
    PLUS = "plus"
    MINUS = "minus"
    BOTH = "both"
    NEITHER = "neither"


def _pattern_type(a: tuple[int, ...]) -> PMType:
    if a in ((2,), (1, 1)):
        return PMType.BOTH
    if len(a) == 2 and a[0] == 1 and a[1] % 2:
        return PMType.PLUS
    if len(a) == 3 and a[0] == a[2] == 1 and a[1] % 2 == 0:
        return PMType.PLUS
    if len(a) == 1:
        return PMType.MINUS
    if len(a) == 2 and a[1] == 1 and a[0] % 2:
        return PMType.MINUS
    return PMType.NEITHER


def pm_type(d: RationalDiagram) -> PMType:
    """plus iff x(l1)+x(l2) = x(l1+l2); minus iff it equals x(l1-l2)."""
    _require_base(d)
    if d.mirror:
        raise DomainError("pm_type expects a mirror-normalised diagram")
    v = base_vertex_norms(d)
    s = v.x10 + v.x01
    plus, minus = s == v.x11, s == v.x1m1
    by_norms = {
        (True, True): PMType.BOTH,
        (True, False): PMType.PLUS,
        (False, True): PMType.MINUS,
        (False, False): PMType.NEITHER,
    }[plus, minus]
    by_pattern = _pattern_type(tuple(d.boxes))
    if by_norms != by_pattern:
        raise InternalConsistencyError(f"{d}: norms say {by_norms.value}, pattern list says {by_pattern.value}")
    return by_norms
