"""Exact rational helpers and continued fractions.

Continued fractions follow the convention

    [a_1, ..., a_k] = 1 / (a_1 + 1 / (a_2 + ... + 1 / a_k))

so that every value of interest lies in (0, 1).  All values are
:class:`fractions.Fraction`; infinity only exists as the Farey vertex 1/0
(see :mod:`twobridge.farey`).
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, IndeterminateExpansion, InternalConsistencyError

__all__ = [
    "ContinuedFraction",
    "Fraction",
    "convergent_pairs",
    "convergents",
    "cf_evaluate",
    "even_cf",
    "format_fraction",
    "parse_fraction",
    "positive_cf",
    "require_unit_interval",
]

_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_fraction(text: str) -> Fraction:
    """Parse ``"p/q"`` (or a bare integer) into a reduced Fraction."""
    m = _FRACTION_RE.match(text)
    if not m:
        raise DomainError(f"not a fraction: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_fraction(value: Fraction | int) -> str:
    return str(Fraction(value))


def require_unit_interval(f: Fraction) -> Fraction:
    f = Fraction(f)
    if not 0 < f < 1:
        raise DomainError(f"{f} is not in the open interval (0, 1)")
    return f


class ContinuedFraction(tuple):
    """Immutable list of nonzero integer coefficients ``[a_1, ..., a_k]``."""

    def __new__(cls, coefficients: Iterable[int]):
        coeffs = tuple(coefficients)
        if not coeffs:
            raise DomainError("a continued fraction needs at least one coefficient")
        for a in coeffs:
            if isinstance(a, bool) or int(a) != a:
                raise DomainError(f"coefficient {a!r} is not an integer")
            if a == 0:
                raise DomainError("continued fraction coefficients must be nonzero")
        return super().__new__(cls, (int(a) for a in coeffs))

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        """Accept ``"2,4,-2"``, ``"[2,4,-2]"`` or ``"T(2,4,-2)"``."""
        body = text.strip()
        for prefix, suffix in (("T(", ")"), ("[", "]"), ("(", ")")):
            if body.startswith(prefix) and body.endswith(suffix):
                body = body[len(prefix):-len(suffix)]
                break
        try:
            return cls(int(tok) for tok in body.split(",") if tok.strip())
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"cannot parse continued fraction {text!r}") from None

    @property
    def all_positive(self) -> bool:
        return all(a > 0 for a in self)

    @property
    def all_even(self) -> bool:
        return all(a % 2 == 0 for a in self)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self)

    def __repr__(self) -> str:
        return f"ContinuedFraction({list(self)!r})"


def cf_evaluate(cf: Sequence[int]) -> Fraction:
    cf = ContinuedFraction(cf)
    tail = Fraction(cf[-1])
    for a in reversed(cf[:-1]):
        if tail == 0:
            raise IndeterminateExpansion(f"expansion {cf} divides by zero")
        tail = a + 1 / tail
    if tail == 0:
        raise IndeterminateExpansion(f"expansion {cf} divides by zero")
    return 1 / tail


def convergents(cf: Sequence[int]) -> list[Fraction]:
    """Convergents ``p_j/q_j = [a_1, ..., a_j]`` for j = 1..k.

    Uses ``p_{j+1} = a_{j+1} p_j + p_{j-1}`` (same for q) seeded with
    ``p_0/q_0 = 0/1`` and ``p_{-1}/q_{-1} = 1/0``.
    """
    cf = ContinuedFraction(cf)
    p_prev, q_prev = 1, 0
    p, q = 0, 1
    out = []
    for a in cf:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        if q == 0:
            raise IndeterminateExpansion(f"expansion {cf} has an infinite convergent")
        out.append(Fraction(p, q))
    return out


def convergent_pairs(cf: Sequence[int]) -> list[tuple[int, int]]:
    """Unreduced-sign integer pairs ``(p_j, q_j)`` for j = -1..k, as in the recurrence."""
    cf = ContinuedFraction(cf)
    pairs = [(1, 0), (0, 1)]
    for a in cf:
        (p_before, q_before), (p_j, q_j) = pairs[-2], pairs[-1]
        pairs.append((a * p_j + p_before, a * q_j + q_before))
    return pairs


def positive_cf(f: Fraction) -> ContinuedFraction:
    """Euclidean expansion with all coefficients positive; last one is >= 2."""
    f = require_unit_interval(f)
    n, d = f.denominator, f.numerator
    out = []
    while d:
        a, r = divmod(n, d)
        out.append(a)
        n, d = d, r
    return ContinuedFraction(out)


def even_cf(f: Fraction) -> ContinuedFraction:
    """The expansion with every coefficient even, via nearest-even quotients."""
    f = require_unit_interval(f)
    if f.denominator % 2:
        raise DomainError(f"{f} has odd denominator (knot case, no even expansion)")
    # x = n/d with d > 0; the remainder denominator strictly shrinks each step
    n, d = f.denominator, f.numerator
    out = []
    while d:
        a = 2 * ((n + d) // (2 * d))
        rem = n - a * d
        if a == 0 or abs(rem) >= d:
            raise InternalConsistencyError(f"nearest-even expansion of {f} stalled")
        out.append(a)
        n, d = (d, rem) if rem >= 0 else (-d, -rem)
    return ContinuedFraction(out)
