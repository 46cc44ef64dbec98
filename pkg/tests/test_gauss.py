from twobridge.diagram import RationalDiagram, linking_number, trace_components
from twobridge.gauss import crossings, draw, gauss_linking_number, is_alternating

from helpers import two_component


def test_hopf():
    cs = crossings(RationalDiagram((2,)))
    assert len(cs) == 2 and all(c.over != c.under for c in cs)
    assert abs(gauss_linking_number(RationalDiagram((2,)))) == 1


def test_crossing_count_matches_boxes():
    for d in two_component(9):
        assert len(crossings(d)) == d.crossing_count


def test_drawing_is_closed():
    d = RationalDiagram((2, 1, 4))
    degree = {}
    for a, b, _ in draw(d).segments:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    assert set(degree.values()) == {2}


def test_positive_diagrams_alternate():
    for d in two_component(9):
        assert is_alternating(d)
        assert is_alternating(d.mirrored())


def test_self_crossings_agree_with_tracer():
    for d in two_component(10):
        tr = trace_components(d)
        levels = {}
        level = 0
        for i, a in enumerate(d.boxes, start=1):
            for _ in range(a):
                levels[level] = tr.is_self_crossing(i)
                level += 1
        for c in crossings(d):
            assert (c.over == c.under) == levels[c.level]


def test_linking_agrees_with_tracer_small():
    for d in two_component(10):
        for e in (d, d.mirrored()):
            assert gauss_linking_number(e) == linking_number(e)
