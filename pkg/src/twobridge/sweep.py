"""Exhaustive checks over every 2-component 2-bridge link up to a denominator bound."""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterator

from .ball import ball_of, classify, vertex_norms
from .errors import DomainError, TwoBridgeError
from .farey import x10_via_farey

MAX_Q = 2000
WORKERS_ENV = "TWOBRIDGE_WORKERS"


def link_fractions(max_q: int) -> Iterator[Fraction]:
    """All reduced p/q in (0, 1) with q even and q <= max_q, ordered by (q, p)."""
    for q in range(2, max_q + 1, 2):
        for p in range(1, q, 2):
            if gcd(p, q) == 1:
                yield Fraction(p, q)


def check_fraction(f: Fraction) -> tuple[Fraction, str, list[str]]:
    """Run every per-link check; returns (fraction, shape, failure messages)."""
    problems = []
    try:
        v = vertex_norms(f)
        c = classify(f)
        ball = ball_of(f)
        farey = x10_via_farey(f)
        if farey != v.x10:
            problems.append(f"x(l1) = {v.x10} but the Farey path gives {farey}")
        if c.faces > 8:
            problems.append(f"{c.faces} faces")
        if ball.evaluate(2, 1) != ball.evaluate(1, 0) + ball.evaluate(1, 1):
            problems.append("x(2,1) != x(1,0) + x(1,1)")
        if ball.evaluate(2, -1) != ball.evaluate(1, 0) + ball.evaluate(1, -1):
            problems.append("x(2,-1) != x(1,0) + x(1,-1)")
        if c.base_type != (set(c.rays) <= {Fraction(1), Fraction(-1)}):
            problems.append("base-type does not match rays within {1,-1}")
        return f, c.shape, problems
    except TwoBridgeError as exc:
        return f, "error", [f"{type(exc).__name__}: {exc}"]


@dataclass
class SweepReport:
    max_q: int
    checked: int = 0
    failures: list[tuple[Fraction, str]] = field(default_factory=list)
    shapes: Counter = field(default_factory=Counter)

    @property
    def summary(self) -> str:
        return f"checked {self.checked} links, {len(self.failures)} failures"


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise DomainError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def sweep(max_q: int, workers: int | None = None) -> SweepReport:
    if not 2 <= max_q <= MAX_Q:
        raise DomainError(f"max_q must lie in [2, {MAX_Q}]")
    workers = workers or _workers()
    fractions = list(link_fractions(max_q))
    if workers == 1:
        results = map(check_fraction, fractions)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        # chunking keeps each worker's Farey tree cache warm
        results = pool.map(check_fraction, fractions, chunksize=max(1, len(fractions) // (4 * workers)))
    report = SweepReport(max_q)
    try:
        for f, shape, problems in results:
            report.checked += 1
            report.shapes[shape] += 1
            report.failures.extend((f, msg) for msg in problems)
    finally:
        if workers != 1:
            pool.shutdown()
    return report
