"""Shared enumerations for the test suite."""
from twobridge.arith import convergent_pairs
from twobridge.diagram import RationalDiagram


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def even_compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(2, n + 1, 2):
        for rest in even_compositions(n - first):
            yield (first,) + rest


def two_component(max_crossings, min_crossings=1):
    for n in range(min_crossings, max_crossings + 1):
        for a in compositions(n):
            if convergent_pairs(a)[-1][1] % 2 == 0:
                yield RationalDiagram(a)


def base_type_diagrams(max_crossings):
    """k = 1 with a_1 even, or odd ends around even interior entries."""
    for n in range(2, max_crossings + 1, 2):
        yield RationalDiagram((n,))
    for n in range(2, max_crossings + 1):
        for a in range(1, n, 2):
            for b in range(1, n - a + 1, 2):
                for mid in even_compositions(n - a - b):
                    yield RationalDiagram((a, *mid, b))
