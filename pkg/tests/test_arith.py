from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from twobridge.arith import (
    ContinuedFraction,
    cf_evaluate,
    convergent_pairs,
    convergents,
    even_cf,
    parse_fraction,
    positive_cf,
)
from twobridge.errors import DomainError, IndeterminateExpansion


@pytest.mark.parametrize(
    "cf, value",
    [([2, 3, 2], F(7, 16)), ([2, 4, -2], F(7, 16)), ([3, 1], F(1, 4)), ([4], F(1, 4))],
)
def test_cf_evaluate_examples(cf, value):
    assert cf_evaluate(cf) == value


def test_cf_evaluate_zero_partial_denominator():
    # 1/(1 + 1/(-1)) divides by zero
    with pytest.raises(IndeterminateExpansion):
        cf_evaluate([1, -1])


def test_continued_fraction_rejects_zero_and_empty():
    with pytest.raises(DomainError):
        ContinuedFraction([2, 0, 2])
    with pytest.raises(DomainError):
        ContinuedFraction([])


def test_continued_fraction_parse_forms():
    for text in ("2,4,-2", "[2,4,-2]", "T(2,4,-2)", " 2, 4, -2 "):
        assert ContinuedFraction.parse(text) == (2, 4, -2)
    assert str(ContinuedFraction([2, 4, -2])) == "2,4,-2"
    assert ContinuedFraction([2, 4, 2]).all_even
    assert not ContinuedFraction([2, 4, -2]).all_positive
    with pytest.raises(DomainError):
        ContinuedFraction.parse("2,x")


def test_parse_fraction():
    assert parse_fraction("14/28") == F(1, 2)
    assert parse_fraction("-3/4") == F(-3, 4)
    with pytest.raises(DomainError):
        parse_fraction("1/0")
    with pytest.raises(DomainError):
        parse_fraction("abc")


@pytest.mark.parametrize(
    "cf, expected",
    [([2, 3, 2], [F(1, 2), F(3, 7), F(7, 16)]), ([4], [F(1, 4)]), ([2, 1, 4], [F(1, 2), F(1, 3), F(5, 14)])],
)
def test_convergents_examples(cf, expected):
    assert convergents(cf) == expected
    assert convergents(cf)[-1] == cf_evaluate(cf)


def test_convergent_pairs_seeds():
    assert convergent_pairs([2, 3, 2])[:2] == [(1, 0), (0, 1)]
    assert convergent_pairs([2, 3, 2])[-1] == (7, 16)


@pytest.mark.parametrize(
    "f, cf",
    [(F(7, 16), [2, 3, 2]), (F(1, 4), [4]), (F(5, 24), [4, 1, 4])],
)
def test_positive_cf_examples(f, cf):
    assert list(positive_cf(f)) == cf


@pytest.mark.parametrize("f, cf", [(F(7, 16), [2, 4, -2]), (F(1, 2), [2]), (F(1, 4), [4])])
def test_even_cf_examples(f, cf):
    assert list(even_cf(f)) == cf


def test_even_cf_rejects_odd_denominator():
    with pytest.raises(DomainError):
        even_cf(F(2, 5))


@pytest.mark.parametrize("bad", [F(0), F(1), F(3, 2), F(-1, 4)])
def test_positive_cf_domain(bad):
    with pytest.raises(DomainError):
        positive_cf(bad)


unit_fractions = st.integers(2, 10**6).flatmap(
    lambda q: st.integers(1, q - 1).filter(lambda p: gcd(p, q) == 1).map(lambda p: F(p, q))
)


@given(unit_fractions)
def test_positive_round_trip(f):
    cf = positive_cf(f)
    assert cf.all_positive
    assert len(cf) == 1 or cf[-1] >= 2
    assert cf_evaluate(cf) == f


# an even expansion can have length about q/2, e.g. (q-1)/q = [2, 2, ..., 2]
@settings(deadline=None)
@given(
    st.integers(1, 2000).flatmap(
        lambda h: st.integers(1, 2 * h - 1).filter(lambda p: gcd(p, 2 * h) == 1).map(lambda p: F(p, 2 * h))
    )
)
def test_even_round_trip(f):
    cf = even_cf(f)
    assert cf.all_even
    assert cf_evaluate(cf) == f


@given(st.lists(st.integers(1, 50), min_size=1, max_size=12))
def test_convergent_determinant(cf):
    pairs = convergent_pairs(cf)
    for (p0, q0), (p1, q1) in zip(pairs, pairs[1:]):
        assert abs(p0 * q1 - p1 * q0) == 1


def test_even_cf_terminates_up_to_10_4():
    for q in range(2, 10**4 + 1, 2):
        # a spread of numerators per denominator keeps this fast
        # (q-1)/q has the longest expansion; sample it on a sparser grid
        for p in {1, q // 2 - 1, q // 3} | ({q - 1} if q % 50 == 0 else set()):
            if 0 < p < q and gcd(p, q) == 1:
                # integer recurrence instead of nested Fractions: the expansion can be ~q/2 long
                num, den = convergent_pairs(even_cf(F(p, q)))[-1]
                assert F(num, den) == F(p, q)


def test_even_cf_exhaustive_small():
    for q in range(2, 401, 2):
        for p in range(1, q, 2):
            if gcd(p, q) == 1:
                assert cf_evaluate(even_cf(F(p, q))) == F(p, q)
