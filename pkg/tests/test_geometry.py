from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import random_word, words
from omegabraid.equivalence import equivalent
from omegabraid.geometry import (
    CPoint,
    PLBraid,
    certify_disjoint,
    cpoint,
    crossing_events,
    disjointness_violations,
    dogleg_connect,
    endpoint_permutation,
    format_pl,
    parse_cpoint,
    parse_pl,
    pl_compose,
    pl_inverse,
    pl_to_word,
    relabel_isomorphism,
    segment_hits_origin,
    strands_meet,
    word_to_pl,
)
from omegabraid.words import BraidWord, compose, inverse, is_pure, parse_word, underlying_permutation


def P(re, im=0):
    return CPoint(Fraction(re), Fraction(im))


def random_configuration(rng: random.Random, size: int) -> list[CPoint]:
    """Distinct rational points; half the time all on one line."""
    pts: set[CPoint] = set()
    collinear = rng.random() < 0.5
    a, b = Fraction(rng.randint(-3, 3), rng.randint(1, 3)), Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    while len(pts) < size:
        x = Fraction(rng.randint(-6, 6), rng.randint(1, 2))
        y = a * x + b if collinear else Fraction(rng.randint(-6, 6), rng.randint(1, 2))
        pts.add(CPoint(x, y))
    return list(pts)


def test_parse_cpoint():
    assert parse_cpoint("1/2+-3i") == P(Fraction(1, 2), -3)
    assert parse_cpoint("4") == P(4)
    with pytest.raises(ValueError):
        parse_cpoint("x")


def test_segment_hits_origin():
    assert segment_hits_origin(P(-1), P(1))
    assert segment_hits_origin(P(0), P(3, 3))
    assert not segment_hits_origin(P(1, 1), P(2, 2))
    assert not segment_hits_origin(P(-1, 1), P(1, 1))


def test_strands_meet_finds_a_collision():
    a = ((Fraction(0), P(0)), (Fraction(1), P(2)))
    b = ((Fraction(0), P(2)), (Fraction(1), P(0)))
    assert strands_meet(a, b) == Fraction(1, 2)


def test_dogleg_identity_is_vertical():
    b = dogleg_connect([0, 1], [0, 1])
    assert certify_disjoint(b)
    assert all(len({z for _, z in pts}) == 1 for pts in b.strands)


def test_dogleg_swap():
    b = dogleg_connect([0, 1], [1, 0])
    assert certify_disjoint(b)
    mids = [pts[1][1] for pts in b.strands]
    assert mids[0] != mids[1]
    g = pl_to_word(b)
    assert len(g.word.letters) == 1
    assert is_pure(compose(g.word, g.word))


def test_dogleg_three_cycle():
    assert certify_disjoint(dogleg_connect([0, 1, 2], [1, 2, 0]))


def test_dogleg_random_configurations():
    rng = random.Random(4)
    for _ in range(60):
        start = random_configuration(rng, rng.randint(1, 12))
        end = start[:]
        rng.shuffle(end)
        b = dogleg_connect(start, end)
        assert disjointness_violations(b) == []


def test_certificate_rejects_a_collision():
    bad = PLBraid((
        ((Fraction(0), P(0)), (Fraction(1), P(2))),
        ((Fraction(0), P(2)), (Fraction(1), P(0))),
    ))
    assert not certify_disjoint(bad)


def test_plbraid_validation():
    with pytest.raises(ValueError):
        PLBraid((((Fraction(0), P(0)), (Fraction(1), P(1))),
                 ((Fraction(0), P(0)), (Fraction(1), P(2)))))


def test_word_to_pl_identity_is_vertical():
    b = word_to_pl(BraidWord.identity(3))
    assert crossing_events(b) == []
    assert pl_to_word(b).word == BraidWord.identity(3)


def test_single_crossing_event():
    (ev,) = crossing_events(word_to_pl(parse_word("B2: s0")))
    assert ev.time == Fraction(1, 2) and ev.position == 0 and ev.sign == 1


def test_braid_relation_round_trip():
    g = pl_to_word(word_to_pl(parse_word("B3: s0 s1 s0")))
    assert g.is_plain()
    assert equivalent(g.word, parse_word("B3: s1 s0 s1"))


@settings(max_examples=40)
@given(words(max_length=8))
def test_round_trip_property(f):
    b = word_to_pl(f)
    assert certify_disjoint(b)
    assert endpoint_permutation(b) == underlying_permutation(f)
    g = pl_to_word(b)
    assert g.is_plain() and equivalent(g.word, f)


def test_pl_compose_and_inverse_match_words():
    rng = random.Random(9)
    for _ in range(15):
        n = rng.randint(2, 4)
        f, g = random_word(rng, n, 4), random_word(rng, n, 4)
        fg = pl_to_word(pl_compose(word_to_pl(f), word_to_pl(g)))
        assert equivalent(fg.word, compose(f, g))
        assert equivalent(pl_to_word(pl_inverse(word_to_pl(f))).word, inverse(f))


def test_relabel_identity_keeps_word():
    f = parse_word("B3: s0 s1^-1")
    b = word_to_pl(f)
    g = relabel_isomorphism(b, {z: z for z in b.starts()})
    assert equivalent(pl_to_word(g).word, f)


def test_relabel_to_other_points():
    b = word_to_pl(parse_word("B2: s0"))
    g = relabel_isomorphism(b, {P(0): P(5), P(1): P(7, 1)})
    assert certify_disjoint(g)
    assert sorted(g.starts()) == [P(5), P(7, 1)]
    assert pl_to_word(g).word == parse_word("B2: s0")


@given(st.lists(st.integers(-4, 4), min_size=2, max_size=5, unique=True))
def test_relabel_is_a_homomorphism(targets):
    n = len(targets)
    rng = random.Random(n)
    f, g = random_word(rng, n, 3), random_word(rng, n, 3)
    phi = {P(k): P(targets[k], k % 2) for k in range(n)}
    lhs = pl_to_word(relabel_isomorphism(word_to_pl(compose(f, g)), phi)).word
    rhs = compose(pl_to_word(relabel_isomorphism(word_to_pl(f), phi)).word,
                  pl_to_word(relabel_isomorphism(word_to_pl(g), phi)).word)
    assert equivalent(lhs, rhs)


def test_pl_to_word_with_natural_endpoints():
    b = PLBraid((
        ((Fraction(0), P(0)), (Fraction(1), P(0))),
        ((Fraction(0), P(1)), (Fraction(1), P(3))),
    ))
    g = pl_to_word(b)
    assert g.endpoints == (0, 3)
    assert g.word == BraidWord.identity(2)


def test_pl_file_round_trip():
    b = dogleg_connect([0, "1/2+1i", 3], ["1/2+1i", 3, 0])
    text = format_pl(b)
    assert text.startswith("PL strands=3")
    assert parse_pl(text) == b
    with pytest.raises(ValueError):
        parse_pl("PL strands=2\nx=0 : (0,0);(1,0)\n")


def test_cpoint_coercion():
    assert cpoint(2) == P(2)
    assert cpoint("1/3+1/2i") == P(Fraction(1, 3), Fraction(1, 2))


def _rigid_half_turn(sign: int) -> PLBraid:
    """Three points on a diameter rotating by a half turn; collinear at every instant."""
    half = Fraction(1, 2)
    return PLBraid((
        ((Fraction(0), P(-1)), (half, P(0, -sign)), (Fraction(1), P(1))),
        ((Fraction(0), P(0)), (Fraction(1), P(0))),
        ((Fraction(0), P(1)), (half, P(0, sign)), (Fraction(1), P(-1))),
    ))


def test_triple_point_reads_as_half_twist():
    assert equivalent(pl_to_word(_rigid_half_turn(1)).word, parse_word("B3: s0 s1 s0"))
    assert equivalent(pl_to_word(_rigid_half_turn(-1)).word, parse_word("B3: s0^-1 s1^-1 s0^-1"))


def test_relabel_homomorphism_regression():
    rng = random.Random(4)
    f, g = random_word(rng, 4, 3), random_word(rng, 4, 3)
    phi = {P(k): P(t, k % 2) for k, t in enumerate([3, 0, -2, -4])}
    lhs = pl_to_word(relabel_isomorphism(word_to_pl(compose(f, g)), phi)).word
    rhs = compose(pl_to_word(relabel_isomorphism(word_to_pl(f), phi)).word,
                  pl_to_word(relabel_isomorphism(word_to_pl(g), phi)).word)
    assert equivalent(lhs, rhs)
