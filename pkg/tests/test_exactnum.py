import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckecells.exactnum import NEG_INF, ONE, XI, ZERO, ZETA, LaurentV, arith, bar, leading

laurent = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentV)


def test_examples():
    assert ZETA * ZETA == LaurentV({2: 1, 0: -2, -2: 1})
    assert XI + ZETA == LaurentV({1: 2})
    assert arith(ZETA, ZERO, "mul") == ZERO
    assert bar(LaurentV({2: 1, 0: 1})) == LaurentV({-2: 1, 0: 1})
    assert bar(XI) == XI
    assert leading(XI ** 3) == (3, 1)
    assert leading(ZERO) == (NEG_INF, 0)
    assert leading(LaurentV({2: 1, 0: -2})) == (2, 1)


def test_zero_terms_dropped_and_json():
    p = LaurentV({3: 0, 1: 2, -1: -1})
    assert p.terms == {1: 2, -1: -1}
    assert p.to_json() == [[-1, -1], [1, 2]]
    assert LaurentV.from_json(p.to_json()) == p
    assert LaurentV.from_json([]) == ZERO


def test_q_coeffs():
    p = LaurentV.from_q_coeffs([1, 3, 2])
    assert p == LaurentV({0: 1, 2: 3, 4: 2})
    assert p.q_coeffs() == [1, 3, 2]


def test_unknown_arith_kind():
    with pytest.raises(ValueError):
        arith(ONE, ONE, "div")


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == ZERO
    assert a * ONE == a


@given(laurent, laurent)
def test_bar_is_ring_homomorphism(a, b):
    assert bar(a * b) == bar(a) * bar(b)
    assert bar(a + b) == bar(a) + bar(b)
    assert bar(bar(a)) == a


@given(laurent, laurent)
def test_leading_degree_additive(a, b):
    if a and b:
        assert leading(a * b)[0] == leading(a)[0] + leading(b)[0]
        assert leading(a * b)[1] == leading(a)[1] * leading(b)[1]


@given(laurent, st.integers(0, 4))
def test_power_matches_repeated_product(a, n):
    p = ONE
    for _ in range(n):
        p = p * a
    assert a ** n == p
