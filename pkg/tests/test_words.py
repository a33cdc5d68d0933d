#!/usr/bin/env python3
"""
Tests for words: substitutions, scattered subwords, the J_m / U_m oracles and
the word constructions.
"""

import os
import random
import sys

import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from safety.limits import GuardExceeded
from safety.validation import PreconditionError
from utils.formats import format_identity
from words.constructions import (
    build_u_n_m, build_v_literal, build_w_n, check_P1, check_P2, expanded_length, f_expand, fbar_expand,
    interleaved_y, is_sparse, mirror_tail_levels, predicted_u_length, sparse_preimage, zimin,
)
from words.core import (
    Identity, OccurrenceKind, alphabet, apply_substitution, canonical_identity, classify_occurrences,
    enumerate_words, make_identity, parse_identity, parse_word,
)
from words.subwords import (
    count_scattered_embeddings, gap_alphabets, in_Jm, in_Um, is_unambiguously_scattered,
    scattered_subwords_upto, um_key,
)

@pytest.fixture
def w():
    return parse_word


@pytest.fixture
def u22():
    return build_u_n_m(2, 2)


class TestWordCore:
    """Alphabets, substitutions and identities."""

    def test_alphabet(self, w):
        assert alphabet(w("x y x z")) == {"x", "y", "z"}
        assert alphabet(()) == set()

    def test_apply_substitution(self, w):
        theta = {"x": w("a b"), "y": w("c")}
        assert apply_substitution(theta, w("x y x")) == w("a b c a b")
        assert apply_substitution({"x": ("x",), "y": ("y",)}, w("x y")) == w("x y")

    def test_apply_substitution_undefined_variable(self, w):
        with pytest.raises(PreconditionError):
            apply_substitution({"x": ("a",)}, w("x y"))

    def test_apply_substitution_empty_image(self, w):
        with pytest.raises(ValueError):
            apply_substitution({"x": ()}, w("x"))

    def test_classify_occurrences(self, w):
        occurrences = classify_occurrences(w("x t x"))
        assert occurrences["x"].kind is OccurrenceKind.REPEATED
        assert occurrences["x"].positions == (1, 3)
        assert occurrences["t"].kind is OccurrenceKind.LINEAR

    def test_parse_identity(self):
        identity = parse_identity("x x y ~ x y")
        assert identity == Identity(("x", "x", "y"), ("x", "y"))
        assert str(identity) == "x x y ~ x y"
        assert parse_identity(format_identity(identity)) == identity

    def test_parse_identity_rejects_missing_tilde(self):
        with pytest.raises(PreconditionError):
            parse_identity("x y = y x")

    def test_identity_sides_nonempty(self):
        with pytest.raises(PreconditionError):
            make_identity((), ("x",))

    def test_canonical_identity_renames_and_orders(self, w):
        assert canonical_identity(w("b a"), w("a b")) == canonical_identity(w("y x"), w("x y"))
        assert canonical_identity(w("z z z"), w("z")) == Identity(("x1",), ("x1", "x1", "x1"))

    def test_enumerate_words_shortlex(self):
        words = list(enumerate_words(["x", "y"], 2))
        assert words[:2] == [("x",), ("y",)]
        assert len(words) == 6

    def test_enumerate_words_guard(self):
        with pytest.raises(GuardExceeded):
            list(enumerate_words(list("abcdefghij"), 9))


class TestScatteredSubwords:
    """Embedding counts, unambiguity and gap alphabets."""

    def test_counts(self, w):
        assert count_scattered_embeddings(w("x y"), w("x x y y"), cap=10) == 4
        assert count_scattered_embeddings(w("x y"), w("y y x x"), cap=10) == 0

    def test_count_saturates(self, w):
        assert count_scattered_embeddings(w("x"), w("x x x x"), cap=2) == 2

    def test_unambiguous(self, w):
        assert is_unambiguously_scattered(w("x y"), w("x y y")) == (False, None)
        assert is_unambiguously_scattered(w("x y"), w("x z y")) == (True, (1, 3))
        assert is_unambiguously_scattered(w("x"), w("x x"))[0] is False

    def test_subwords_upto(self, w):
        assert scattered_subwords_upto(w("x y"), 0) == set()
        assert scattered_subwords_upto(w("x y x"), 2) == {
            ("x",), ("y",), ("x", "y"), ("y", "x"), ("x", "x"),
        }

    def test_gap_alphabets(self, w):
        gaps = gap_alphabets(w("a x b y c"), (2, 4))
        assert gaps == (frozenset("a"), frozenset("b"), frozenset("c"))


class TestOracles:
    """J_m and U_m membership."""

    def test_jm_membership(self, w):
        assert in_Jm(Identity(w("x y"), w("y x")), 1)
        assert not in_Jm(Identity(w("x y"), w("y x")), 2)
        assert in_Jm(Identity(w("x"), w("y")), 0)

    def test_um_membership(self, w):
        assert in_Um(Identity(w("x x y y"), w("y y x x")), 1)
        assert not in_Um(Identity(w("x t y"), w("y t x")), 1)

    def test_um_zero_is_alphabet(self, w):
        assert um_key(w("x y x"), 0) == um_key(w("y x"), 0)
        assert um_key(w("x"), 0) != um_key(w("x y"), 0)

    def test_strict_inclusion_witness(self):
        for m in range(1, 4):
            identity = Identity(("x",) * (m + 1) + ("y",) * (m + 1), ("y",) * (m + 1) + ("x",) * (m + 1))
            assert in_Um(identity, m)
            assert not in_Jm(identity, m + 1)


class TestConstructions:
    """f-expansion, u_n(m), w_n, Zimin words and the P1 / P2 checkers."""

    def test_f_expand_length(self):
        assert len(f_expand(("x",), 1)) == 3
        assert expanded_length(3, 2) == 15

    def test_u22_shape(self, u22):
        assert u22.word == ("x", "p1_0", "y1", "p1_1", "y2", "p1_2", "x", "y1", "y2")
        assert u22.blocks == ((0, 6), (6, 9))
        assert check_P1(u22.word)
        assert check_P2(u22.word, 2)

    def test_u33_length(self):
        assert len(build_u_n_m(3, 3).word) == 28 == predicted_u_length(3, 3)

    def test_u_passes_properties(self):
        for n in range(1, 6):
            for m in range(1, 5):
                built = build_u_n_m(n, m)
                assert check_P1(built.word), (n, m)
                assert check_P2(built.word, n), (n, m)

    def test_w_n(self):
        built = build_w_n(3, 2)
        assert check_P2(built.word, 3)
        assert check_P1(built.word)
        assert "x" in set(built.head) & set(built.tail)
        assert built.tail[:6] == interleaved_y(3)
        assert built.tail[-1] == "x"

    def test_w2_matches_printed_word(self, w):
        printed = w(
            "x p1_0 y1 p1_1 y2 p1_2 y3 p1_3 y4 p1_4 x y1 y2 y3 y4 "
            "y1 y3 y2 y4 x p1_4 y1 p1_3 y3 p1_2 y2 p1_1 y4 p1_0 x"
        )
        assert build_w_n(2, 2).word == printed
        assert mirror_tail_levels(2, 2)[1] == fbar_expand(interleaved_y(2), 1)

    def test_w_n_two_letter_factors_unique(self):
        for n in range(2, 6):
            for m in range(1, 5):
                built = build_w_n(n, m)
                assert check_P1(built.word), (n, m)
                assert check_P2(built.word, n), (n, m)

    def test_w3_tail_avoids_head_factors(self):
        level = mirror_tail_levels(3, 2)[1]
        assert level != fbar_expand(interleaved_y(3), 1)
        assert set(level) == set(fbar_expand(interleaved_y(3), 1))
        assert ("y2", "p1_2") not in set(zip(level, level[1:]))

    def test_w_n_same_alphabet(self):
        built = build_w_n(2, 3)
        assert alphabet(built.head) == alphabet(built.tail)

    def test_literal_tail(self):
        literal = build_v_literal(2, 3)
        assert literal.count("x") == 2
        assert literal[:4] == interleaved_y(2)

    def test_zimin(self):
        assert zimin(1) == ("x1",)
        assert zimin(2) == ("x1", "x2", "x1")
        assert len(zimin(5)) == 31

    def test_p1_p2_examples(self, w):
        assert not check_P1(w("x y x y"))
        assert check_P2(w("x a b c x"), 3)
        assert not check_P2(w("x a b a x"), 3)

    def test_length_guard(self):
        with pytest.raises(GuardExceeded):
            build_u_n_m(40, 20)


class TestSparse:
    """Sparse words and preimages of u_n(m)."""

    def test_is_sparse(self, w):
        assert is_sparse(w("x t x")).is_sparse
        result = is_sparse(w("x y x y"))
        assert not result.is_sparse
        assert result.violating_pair == (1, 3)

    def test_preimages_are_sparse(self):
        rng = random.Random(7)
        target = build_u_n_m(4, 2).word
        for _ in range(10):
            preimage = sparse_preimage(target, 4, rng)
            if preimage is not None:
                assert len(set(preimage)) < 4
                assert is_sparse(preimage).is_sparse
