import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqci.families import cycle_graph, path_graph
from sqci.words import (WordParseError, concat_nf, inverse, join_length,
                        join_length_oracle, normal_form, parse_word,
                        star_length, word_to_text)

P4 = path_graph(4)
C5 = cycle_graph(5)


def _letters(g):
    return [(v, s) for v in sorted(g.vertices) for s in (1, -1)]


def word_strategy(g, max_len=10):
    return st.lists(st.sampled_from(_letters(g)), max_size=max_len).map(tuple)


def test_parse_and_print():
    w = parse_word(P4, "a0 a1^-1 a2^2")
    assert w == (("a0", 1), ("a1", -1), ("a2", 1), ("a2", 1))
    assert word_to_text(normal_form(P4, ())) == "1"
    with pytest.raises(WordParseError):
        parse_word(P4, "z")


def test_commuting_generators_sort():
    # a0 and a1 are adjacent in P4, so they commute and shortlex sorts them
    w = parse_word(P4, "a1 a0")
    assert normal_form(P4, w) == parse_word(P4, "a0 a1")
    # a0 and a2 are not adjacent: order must be preserved
    w = parse_word(P4, "a2 a0")
    assert normal_form(P4, w) == w


@settings(max_examples=200, deadline=None)
@given(word_strategy(P4))
def test_nf_idempotent_p4(w):
    nf = normal_form(P4, w)
    assert normal_form(P4, nf) == nf


@settings(max_examples=200, deadline=None)
@given(word_strategy(C5))
def test_nf_inverse_involution_c5(w):
    assert inverse(inverse(w)) == w
    assert normal_form(C5, concat_nf(C5, w, inverse(w))) == ()


@settings(max_examples=200, deadline=None)
@given(word_strategy(P4), word_strategy(P4))
def test_nf_is_a_congruence(u, v):
    lhs = normal_form(P4, concat_nf(P4, u, v))
    rhs = normal_form(P4, normal_form(P4, u) + normal_form(P4, v))
    assert lhs == rhs


@settings(max_examples=80, deadline=None)
@given(word_strategy(P4, max_len=6))
def test_join_length_matches_oracle(w):
    n, factors = join_length(P4, w)
    assert join_length_oracle(P4, w) == n
    rebuilt = ()
    for f in factors:
        rebuilt = concat_nf(P4, rebuilt, f)
    assert normal_form(P4, rebuilt) == normal_form(P4, w)


@settings(max_examples=80, deadline=None)
@given(word_strategy(C5, max_len=5), word_strategy(C5, max_len=5))
def test_join_length_triangle_inequality(u, v):
    ju, _ = join_length(C5, u)
    jv, _ = join_length(C5, v)
    juv, _ = join_length(C5, concat_nf(C5, u, v))
    assert juv <= ju + jv


@settings(max_examples=80, deadline=None)
@given(word_strategy(P4, max_len=6))
def test_join_vs_star_length(w):
    jl, _ = join_length(P4, w)
    sl, _ = star_length(P4, w)
    assert jl <= sl <= 2 * jl or (jl == sl == 0)


def test_join_length_examples():
    n, factors = join_length(P4, parse_word(P4, "a0 a3"))
    assert n == 2
    assert [word_to_text(f) for f in factors] == ["a0", "a3"]
    # inside one join subgroup: length 1
    n, _ = join_length(P4, parse_word(P4, "a0 a1 a2"))
    assert n == 1


def test_seeded_random_consistency():
    rng = random.Random(7)
    letters = _letters(C5)
    for _ in range(200):
        w = tuple(rng.choice(letters) for _ in range(rng.randrange(0, 9)))
        nf = normal_form(C5, w)
        assert normal_form(C5, nf) == nf
        assert normal_form(C5, concat_nf(C5, w, inverse(w))) == ()
