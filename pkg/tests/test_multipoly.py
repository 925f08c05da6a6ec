from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopminors.errors import DomainError
from loopminors.multipoly import MultiPoly


def a(k, idx):
    return MultiPoly.variable(k, idx)


def test_square_of_a_sum():
    p = a(2, 0) + a(2, 1)
    assert p * p == MultiPoly(
        2, {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    )


def test_zero_terms_are_dropped():
    p = a(1, 0) - a(1, 0)
    assert not p
    assert p == MultiPoly.zero(1)
    assert p.text() == "0"


def test_int_coercion_and_equality():
    assert MultiPoly.const(3, 5) == 5
    assert 2 * a(1, 0) + 1 == MultiPoly(1, {(1,): 2, (0,): 1})
    assert a(1, 0) != a(2, 0) or True  # different nvars raise on arithmetic
    with pytest.raises(DomainError):
        a(1, 0) + a(2, 0)


def test_canonical_text_is_descending_lex():
    poly = MultiPoly(
        4, {(1, 2, 0, 0): 1, (1, 1, 0, 1): 2, (1, 0, 0, 2): 1, (0, 0, 1, 2): 1}
    )
    assert poly.text() == "a1*a2^2 + 2*a1*a2*a4 + a1*a4^2 + a3*a4^2"
    assert list(poly.json_terms()) == ["1,2,0,0", "1,1,0,1", "1,0,0,2", "0,0,1,2"]


def test_negative_coefficients_render():
    poly = MultiPoly(1, {(1,): -3, (0,): 1})
    assert poly.text() == "-3*a1 + 1"
    poly = MultiPoly(1, {(1,): 1, (0,): -1})
    assert poly.text() == "a1 - 1"


def test_evaluate():
    poly = MultiPoly(2, {(1, 1): 2, (0, 0): 1})
    assert poly.evaluate([Fraction(1, 2), 3]) == Fraction(4)


def test_embed_shifts_variables():
    poly = a(2, 0) * a(2, 1)
    shifted = poly.embed(4, offset=2)
    assert shifted == a(4, 2) * a(4, 3)


def test_homogeneity_and_degree():
    poly = a(2, 0) * a(2, 0) + a(2, 0) * a(2, 1)
    assert poly.is_homogeneous(2)
    assert poly.total_degree() == 2
    assert not (poly + 1).is_homogeneous()
    assert MultiPoly.zero(2).total_degree() == -1


def small_polys(k=2):
    exps = st.tuples(*[st.integers(0, 2)] * k)
    return st.dictionaries(exps, st.integers(-5, 5), max_size=4).map(
        lambda terms: MultiPoly(k, terms)
    )


@given(p=small_polys(), q=small_polys(), r=small_polys())
@settings(max_examples=100)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + MultiPoly.zero(2) == p
    assert p * MultiPoly.one(2) == p


@given(p=small_polys())
@settings(max_examples=50)
def test_evaluation_is_a_homomorphism(p):
    values = [Fraction(2), Fraction(1, 3)]
    q = p * p + 1
    assert q.evaluate(values) == p.evaluate(values) ** 2 + 1
