from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from gen import random_word, relator_insertion, word_pairs, words
from lk import ExactLK, lk_trivial
from omegabraid.equivalence import equivalent, is_trivial
from omegabraid.garside import garside_normal_form
from omegabraid.handle import ReductionBudgetExceeded, handle_reduce
from omegabraid.handle import is_trivial as handle_trivial
from omegabraid.words import BraidWord, compose, half_twist, inverse, parse_word, power


def w(text):
    return parse_word(text)


def test_free_cancellation():
    assert handle_reduce(w("B2: s0 s0^-1")).is_empty()


def test_braid_relation_reduces_to_empty():
    f = w("B3: s0 s1 s0 s1^-1 s0^-1 s1^-1")
    assert ExactLK(3).is_identity(f.letters)
    assert handle_reduce(f).is_empty()


def test_nontrivial_word_survives():
    assert not handle_reduce(w("B3: s0 s1")).is_empty()


def test_budget_is_enforced():
    f = compose(power(half_twist(4), 3), inverse(power(half_twist(4), 3)))
    with pytest.raises(ReductionBudgetExceeded):
        handle_reduce(f, budget=1)


@given(words(max_length=12))
def test_handle_result_is_equivalent(f):
    r = handle_reduce(f)
    assert r.strands == f.strands
    assert lk_trivial(compose(r, inverse(f)))


def test_normal_form_of_identity():
    nf = garside_normal_form(BraidWord.identity(3))
    assert nf.infimum == 0 and nf.factors == ()


def test_half_twist_is_garside_element():
    nf = garside_normal_form(w("B3: s0 s1 s0"))
    assert nf.infimum == 1 and nf.factors == ()


def test_delta_squared_is_central_in_b3():
    d2 = power(half_twist(3), 2)
    for g in ("B3: s0", "B3: s1", "B3: s0 s1^-1"):
        lhs, rhs = compose(d2, w(g)), compose(w(g), d2)
        assert lk_trivial(compose(lhs, inverse(rhs)))
        assert garside_normal_form(lhs) == garside_normal_form(rhs)


def test_braid_relation_same_normal_form():
    assert garside_normal_form(w("B3: s0 s1 s0")) == garside_normal_form(w("B3: s1 s0 s1"))


@given(words(max_length=10))
def test_normal_form_word_is_equivalent(f):
    nf = garside_normal_form(f)
    assert garside_normal_form(nf.to_word()) == nf
    assert handle_trivial(compose(nf.to_word(), inverse(f)))


@given(words(max_length=10))
def test_normal_form_factors_are_proper_simples(f):
    nf = garside_normal_form(f)
    n = f.strands
    for p in nf.factors:
        assert not p.is_identity()
        assert p.images != tuple(range(n - 1, -1, -1))


def test_compose_with_inverse_is_trivial():
    f = w("B3: s0 s1 s0")
    g = compose(f, inverse(f))
    assert is_trivial(g)
    assert ExactLK(3).is_identity(g.letters)


def test_equivalent_examples():
    assert equivalent(w("B3: s0 s1 s0"), w("B3: s1 s0 s1"))
    assert not equivalent(w("B2: s0"), w("B2: s0^-1"))


@given(words())
def test_equivalence_is_reflexive(f):
    assert equivalent(f, f)


@given(word_pairs())
def test_equivalence_is_symmetric(pair):
    f, g = pair
    assert equivalent(f, g) == equivalent(g, f)


@settings(max_examples=50)
@given(words(max_length=8))
def test_relator_insertion_is_equivalent(f):
    g = relator_insertion(random.Random(len(f.letters)), f)
    assert equivalent(f, g)


def test_deciders_agree_with_matrix_oracle():
    rng = random.Random(11)
    for _ in range(400):
        n = rng.randint(2, 4)
        f = random_word(rng, n, rng.randint(0, 10))
        if rng.random() < 0.5:
            f = relator_insertion(rng, compose(f, inverse(f)), 2)
        expected = lk_trivial(f)
        assert handle_trivial(f) == expected
        assert garside_normal_form(f).is_trivial() == expected
