"""Tests for the word algebras, their polynomial encodings and the
coaction component."""

import random
from fractions import Fraction

from doubleshuffle.exact_algebra import Poly
from doubleshuffle.words import (BINARY, INDEX, WordSum, coaction_component,
                                 depth, exponents_to_word,
                                 index_word_to_binary, is_translation_invariant,
                                 poly_rep, poly_to_words, reduced_rep,
                                 restrict_y0, shuffle, str_to_word, stuffle,
                                 to_index_sum, to_index_word, translation_lift,
                                 weight, word_compose, word_exponents,
                                 word_to_str)


def random_word(rng, alphabet, max_len=4):
    n = rng.randint(0, max_len)
    if alphabet == BINARY:
        return tuple(rng.randint(0, 1) for _ in range(n))
    return tuple(rng.randint(1, 3) for _ in range(n))


# -- shuffle --------------------------------------------------------------

def test_shuffle_single_letters():
    assert shuffle((1,), (0,)) == WordSum(BINARY, {(1, 0): 1, (0, 1): 1})


def test_shuffle_label_sequences():
    # 1 sh 234 and 12 sh 34 on integer letter sequences
    s = shuffle((1,), (2, 3, 4), alphabet=INDEX)
    assert s == WordSum(INDEX, {(1, 2, 3, 4): 1, (2, 1, 3, 4): 1,
                                (2, 3, 1, 4): 1, (2, 3, 4, 1): 1})
    s = shuffle((1, 2), (3, 4), alphabet=INDEX)
    assert s == WordSum(INDEX, {(1, 2, 3, 4): 1, (1, 3, 2, 4): 1,
                                (1, 3, 4, 2): 1, (3, 1, 2, 4): 1,
                                (3, 1, 4, 2): 1, (3, 4, 1, 2): 1})


def test_shuffle_unit_and_total_count():
    w = (1, 0, 1)
    assert shuffle(w, ()) == WordSum.single(w)
    from math import comb
    rng = random.Random(3)
    for _ in range(20):
        a = random_word(rng, BINARY)
        b = random_word(rng, BINARY)
        total = sum(shuffle(a, b).terms.values())
        assert total == comb(len(a) + len(b), len(a))


def test_shuffle_commutative_associative():
    rng = random.Random(5)
    for _ in range(15):
        a = random_word(rng, BINARY, 3)
        b = random_word(rng, BINARY, 3)
        c = random_word(rng, BINARY, 2)
        assert shuffle(a, b) == shuffle(b, a)
        assert shuffle(shuffle(a, b), WordSum.single(c)) == \
            shuffle(WordSum.single(a), shuffle(b, c))


def test_shuffle_preserves_weight_and_depth():
    rng = random.Random(9)
    for _ in range(20):
        a = random_word(rng, BINARY)
        b = random_word(rng, BINARY)
        for word in shuffle(a, b).terms:
            assert weight(word) == weight(a) + weight(b)
            assert depth(word) == depth(a) + depth(b)


# -- stuffle --------------------------------------------------------------

def test_stuffle_y1_y1():
    assert stuffle((1,), (1,)) == WordSum(INDEX, {(1, 1): 2, (2,): 1})


def test_stuffle_single_letters():
    for m, n in [(2, 3), (5, 2), (4, 4)]:
        expected = {(m, n): 1, (n, m): 1, (m + n,): 1}
        if m == n:
            expected = {(m, n): 2, (m + n,): 1}
        assert stuffle((m,), (n,)) == WordSum(INDEX, expected)


def test_stuffle_unit():
    w = (3, 1, 2)
    assert stuffle((), w) == WordSum.single(w, INDEX)
    assert stuffle(w, ()) == WordSum.single(w, INDEX)


def test_stuffle_commutative_associative_weight():
    rng = random.Random(11)
    for _ in range(15):
        a = random_word(rng, INDEX, 3)
        b = random_word(rng, INDEX, 3)
        c = random_word(rng, INDEX, 2)
        assert stuffle(a, b) == stuffle(b, a)
        assert stuffle(stuffle(a, b), WordSum.single(c, INDEX)) == \
            stuffle(WordSum.single(a, INDEX), stuffle(b, c))
        for word in stuffle(a, b).terms:
            assert weight(word, INDEX) == weight(a, INDEX) + weight(b, INDEX)
            assert depth(word, INDEX) <= depth(a, INDEX) + depth(b, INDEX)


def test_stuffle_top_depth_is_shuffle():
    rng = random.Random(13)
    for _ in range(20):
        a = random_word(rng, INDEX, 3)
        b = random_word(rng, INDEX, 3)
        full_depth = len(a) + len(b)
        top = {w: c for w, c in stuffle(a, b).terms.items() if len(w) == full_depth}
        assert WordSum(INDEX, top) == shuffle(a, b, alphabet=INDEX)


# -- polynomial encodings --------------------------------------------------

def test_poly_rep_examples():
    assert reduced_rep((1,)) == Poly.constant(1, 1)  # single e1 -> x1^0
    assert poly_rep((0, 1, 0, 0)) == Poly.monomial((1, 2))  # e0 e1 e0^2
    # e1 e0^{n1-1} ... e1 e0^{nr-1} -> x1^{n1-1} ... xr^{nr-1}
    for comp in [(2,), (3, 1), (2, 1, 2)]:
        word = index_word_to_binary(comp)
        assert reduced_rep(word) == Poly.monomial(tuple(n - 1 for n in comp))


def test_poly_rep_bijection_round_trip():
    rng = random.Random(17)
    for _ in range(30):
        word = random_word(rng, BINARY, 6)
        assert poly_to_words(poly_rep(word)) == WordSum.single(word)
    assert word_exponents((0, 1, 0)) == (1, 1)
    assert exponents_to_word((1, 1)) == (0, 1, 0)


def test_translation_lift_examples():
    x1sq = Poly.monomial((2,))
    lifted = translation_lift(x1sq)
    assert lifted == Poly(2, {(0, 2): 1, (1, 1): -2, (2, 0): 1})  # (y1-y0)^2
    assert restrict_y0(lifted) == x1sq


def test_translation_lift_round_trip_random():
    rng = random.Random(19)
    for _ in range(20):
        arity = rng.randint(1, 3)
        terms = {tuple(rng.randint(0, 3) for _ in range(arity)):
                 Fraction(rng.randint(-3, 3)) for _ in range(3)}
        f = Poly(arity, terms)
        lifted = translation_lift(f)
        assert restrict_y0(lifted) == f
        assert is_translation_invariant(lifted)


def test_index_word_projection():
    assert to_index_word((0, 1)) is None  # starts with e0 -> zero
    assert to_index_word((1, 0)) == (2,)
    assert to_index_word((1, 1, 0, 0)) == (1, 3)
    ws = WordSum(BINARY, {(0, 1): 5, (1, 0): 2})
    assert to_index_sum(ws) == WordSum(INDEX, {(2,): 2})


# -- composition of words ----------------------------------------------------

def test_word_compose_base_cases():
    a = (1, 0, 1)
    assert word_compose(a, ()) == WordSum.single(a)
    # a . e0^n = e0^n a
    assert word_compose(a, (0, 0)) == WordSum.single((0, 0) + a)


def test_word_compose_e1_on_e1():
    assert word_compose((1,), (1,)) == WordSum.single((1, 1))


def test_word_compose_agrees_with_lifted_composition():
    from doubleshuffle.ihara import compose_lifted

    rng = random.Random(23)
    for _ in range(40):
        a = random_word(rng, BINARY, 4)
        g = random_word(rng, BINARY, 4)
        ws = word_compose(a, g)
        rhs = compose_lifted(poly_rep(a), poly_rep(g))
        if ws.is_zero():
            assert rhs.is_zero()
        else:
            assert poly_rep(ws) == rhs


# -- coaction ----------------------------------------------------------------

def test_coaction_weight_two_vanishes():
    assert coaction_component(1, (1, 0)) == {}


def test_coaction_weight_three_cancels():
    assert coaction_component(1, (1, 0, 0)) == {}


def test_coaction_full_word_single_term():
    for word in [(1, 0), (1, 0, 1, 0), (1, 1, 0)]:
        got = coaction_component(len(word), word)
        assert got == {(word, ()): Fraction(1)}


def test_coaction_boundary_rules():
    # r = 1 on (1, 0, 1): p=0 frames (0,..,0) -> drop; p=1 frames (1,..,1) -> drop;
    # p=2 frames (0,..,1) -> keep subword (1) with quotient (1, 0)
    got = coaction_component(1, (1, 0, 1))
    assert got == {((1,), (1, 0)): Fraction(1)}
    # reversal rule: r = 2 on (1, 0, 0): p=1 frames (1,..,1)->drop, p=0 frames
    # (0,(1,0),0) -> drop; full-word term remains at r=3 only
    got = coaction_component(2, (1, 0, 0))
    assert got == {}


def test_word_serialization():
    assert word_to_str((0, 1, 0, 0)) == "e0 e1 e0 e0"
    assert str_to_word("e0 e1 e0 e0") == (0, 1, 0, 0)
    assert word_to_str((3, 5, 7), INDEX) == "3,5,7"
    assert str_to_word("3,5,7", INDEX) == (3, 5, 7)
