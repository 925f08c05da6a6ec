from fractions import Fraction

import pytest
from hypothesis import given, settings

from loopminors.errors import DomainError
from loopminors.loop import (
    LaurentPoly,
    LoopElement,
    generator,
    identity_loop,
    is_unipotent_plus,
    word_to_loop,
)
from loopminors.multipoly import MultiPoly

from conftest import word_strategy


def sym(k, idx):
    return MultiPoly.variable(k, idx)


def test_generator_matrices():
    a = Fraction(3)
    x0 = generator(0, a)
    assert x0.entry(2, 1) == LaurentPoly({1: a})
    assert x0.entry(1, 1) == LaurentPoly({0: Fraction(1)})
    assert x0.entry(1, 2) == LaurentPoly()
    x1 = generator(1, a)
    assert x1.entry(1, 2) == LaurentPoly({0: a})
    assert x1.entry(2, 1) == LaurentPoly()


def test_generator_determinants_are_one():
    for i in (0, 1):
        g = generator(i, Fraction(5, 7))
        assert g.determinant() == LaurentPoly({0: Fraction(1)})


def test_word_to_loop_two_letters():
    g = word_to_loop((1, 0))
    a1, a2 = sym(2, 0), sym(2, 1)
    one = MultiPoly.one(2)
    assert g.entry(1, 1) == LaurentPoly({0: one, 1: a1 * a2})
    assert g.entry(1, 2) == LaurentPoly({0: a1})
    assert g.entry(2, 1) == LaurentPoly({1: a2})
    assert g.entry(2, 2) == LaurentPoly({0: one})


def test_word_to_loop_single_letter():
    g = word_to_loop((0,))
    assert g.entry(2, 1) == LaurentPoly({1: sym(1, 0)})


def test_word_to_loop_four_letters_top_entry():
    g = word_to_loop((1, 0, 1, 0))
    a1, a2, a3, a4 = (sym(4, t) for t in range(4))
    expected = LaurentPoly(
        {0: MultiPoly.one(4), 1: a1 * a2 + a1 * a4 + a3 * a4, 2: a1 * a2 * a3 * a4}
    )
    assert g.entry(1, 1) == expected


def test_word_to_loop_rejects_bad_words():
    with pytest.raises(DomainError):
        word_to_loop((1, 1))
    with pytest.raises(DomainError):
        word_to_loop(())


@given(w1=word_strategy(max_length=4), w2=word_strategy(max_length=4))
@settings(max_examples=40, deadline=None)
def test_multiplicativity_after_reindexing(w1, w2):
    if w1[-1] == w2[0]:
        return  # concatenation must stay alternating
    word = w1 + w2
    k = len(word)
    combined = word_to_loop(word)
    g1, g2 = word_to_loop(w1), word_to_loop(w2)

    def embed(g, offset, nv):
        rows = []
        for i in (1, 2):
            rows.append(
                tuple(
                    LaurentPoly(
                        {
                            e: c.embed(nv, offset)
                            for e, c in g.entry(i, j).terms.items()
                        }
                    )
                    for j in (1, 2)
                )
            )
        return LoopElement(tuple(rows), nvars=nv)

    product = embed(g1, 0, k) * embed(g2, len(w1), k)
    assert product == combined


def test_unipotent_plus_membership():
    assert is_unipotent_plus(word_to_loop((1, 0, 1)))
    assert is_unipotent_plus(identity_loop())
    bad = LoopElement(
        (
            (LaurentPoly({0: Fraction(1)}), LaurentPoly({-1: Fraction(1)})),
            (LaurentPoly(), LaurentPoly({0: Fraction(1)})),
        )
    )
    assert not is_unipotent_plus(bad)


@given(word=word_strategy(max_length=6))
@settings(max_examples=24, deadline=None)
def test_every_word_lands_in_unipotent_plus(word):
    assert is_unipotent_plus(word_to_loop(word))


@given(word=word_strategy(max_length=6))
@settings(max_examples=24, deadline=None)
def test_word_entries_respect_degree_bound(word):
    # length-k words never push the t-degree past ceil(k/2) + 1
    g = word_to_loop(word)
    bound = (len(word) + 1) // 2 + 1
    for i in (1, 2):
        for j in (1, 2):
            top = g.entry(i, j).max_exp()
            assert top is None or top <= bound
            low = g.entry(i, j).min_exp()
            assert low is None or low >= 0


def test_loop_element_rejects_bad_determinant():
    one = LaurentPoly({0: Fraction(1)})
    with pytest.raises(DomainError):
        LoopElement(((one, one), (one, one)))


def test_loop_element_json():
    data = generator(0, Fraction(1, 2)).to_json()
    assert data["g21"] == {"1": "1/2"}
    assert data["g11"] == {"0": "1"}
    assert data["g12"] == {}
