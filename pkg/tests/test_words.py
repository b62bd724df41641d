from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gen import words
from omegabraid.words import (
    BraidSyntaxError,
    BraidWord,
    GeneralizedBraid,
    Permutation,
    compose,
    delete_strand,
    exponent_sum,
    format_word,
    half_twist,
    inverse,
    is_pure,
    parse_word,
    permutation_word,
    relabel,
    underlying_permutation,
)


def w(text):
    return parse_word(text)


def test_parse_basic():
    f = w("B3: s0 s1")
    assert f.strands == 3
    assert f.letters == ((0, 1), (1, 1))


def test_parse_empty_word_is_identity():
    assert w("B3:") == BraidWord.identity(3)


def test_parse_rejects_out_of_range_index():
    with pytest.raises(BraidSyntaxError) as info:
        w("B2: s1")
    assert info.value.position is not None


@pytest.mark.parametrize("text", ["", "s0", "B3 s0", "B3: t0", "B3: s0^-2", "B0:"])
def test_parse_rejects_garbage(text):
    with pytest.raises(ValueError):
        w(text)


def test_inverse_letters():
    assert w("B3: s0 s1^-1") == parse_word(format_word(w("B3: s0 s1^-1")))
    assert format_word(w("B3: s0 s1^-1")) == "B3: s0 s1^-1"


@given(words())
def test_format_parse_round_trip(f):
    assert parse_word(format_word(f)) == f


def test_compose_is_concatenation():
    s0 = w("B2: s0")
    assert compose(s0, s0) == w("B2: s0 s0")
    assert compose(BraidWord.identity(2), s0) == s0


def test_compose_needs_same_strand_count():
    with pytest.raises(ValueError):
        compose(w("B2: s0"), w("B3: s0"))


def test_inverse_reverses_and_negates():
    assert inverse(w("B3: s0 s1")) == w("B3: s1^-1 s0^-1")
    assert inverse(BraidWord.identity(4)) == BraidWord.identity(4)


@given(words())
def test_inverse_is_involution(f):
    assert inverse(inverse(f)) == f


def test_permutation_examples():
    assert str(underlying_permutation(w("B2: s0"))) == "(0 1)"
    assert underlying_permutation(w("B2: s0 s0")).is_identity()


def test_permutation_of_s0_s1_by_hand():
    # strand 0: pos 0 -> 1 -> 2; strand 1: 1 -> 0 -> 0; strand 2: 2 -> 2 -> 1
    p = underlying_permutation(w("B3: s0 s1"))
    assert p.images == (2, 0, 1)
    assert str(p) == "(0 2 1)"


@given(words(), words())
def test_permutation_is_homomorphism(f, g):
    if f.strands != g.strands:
        return
    lhs = underlying_permutation(compose(f, g))
    assert lhs == underlying_permutation(f).then(underlying_permutation(g))


@given(st.permutations(range(5)))
def test_permutation_word_realizes(images):
    p = Permutation(tuple(images))
    assert underlying_permutation(permutation_word(p)) == p


def test_exponent_sum_examples():
    assert exponent_sum(w("B3: s0 s1 s0^-1")) == 1
    assert exponent_sum(BraidWord.identity(3)) == 0


def test_pure_words_have_even_exponent_sum_exhaustively():
    from itertools import product

    letters = [(0, 1), (0, -1), (1, 1), (1, -1)]
    for length in range(7):
        for seq in product(letters, repeat=length):
            f = BraidWord(3, seq)
            if is_pure(f):
                assert exponent_sum(f) % 2 == 0


def test_half_twist_is_reversal():
    assert underlying_permutation(half_twist(4)).images == (3, 2, 1, 0)


def test_delete_strand_example():
    g = delete_strand(w("B3: s0 s1"), 2)
    assert g.word == w("B2: s0")
    # strand 2 ends at position 1; the survivors end at 2 and 0
    assert g.endpoints == (0, 2)


def test_delete_from_identity():
    for n in range(2, 6):
        for i in range(n):
            g = delete_strand(BraidWord.identity(n), i)
            assert g.word == BraidWord.identity(n - 1)


@given(words(min_strands=2), st.data())
def test_delete_strand_keeps_matching(f, data):
    i = data.draw(st.integers(0, f.strands - 1))
    full = GeneralizedBraid.plain(f).matching()
    g = delete_strand(f, i)
    assert g.matching() == tuple(e for k, e in enumerate(full) if k != i)


def test_generalized_braid_string():
    assert str(GeneralizedBraid(w("B2: s0"), (0, 1))) == "B2: s0 | E=0,1"


def test_relabel_examples():
    g = GeneralizedBraid(w("B2: s0"), (0, 1))
    assert relabel(g, lambda k: k) == g
    assert relabel(g, lambda k: k + 5).endpoints == (5, 6)
    with pytest.raises(ValueError):
        relabel(g, {0: 3, 1: 2})
