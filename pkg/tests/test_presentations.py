#!/usr/bin/env python3
"""
Tests for presentations: shortlex completion, enumeration of presented monoids,
Coxeter models, 0-Hecke monoids and the bridges between them.
"""

import os
import sys

import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from monoids.green import triviality
from monoids.homomorphisms import extend_homomorphism
from presentations.bridges import (
    catalan_cross_check, dihedral_hecke_relation, free_tree_onto_catalan, hecke_onto_lee, hecke_two_route,
    lee_onto_hecke, present, subdiagram_onto_catalan,
)
from presentations.catalog import Presentation, catalan, free_tree, hecke0, lee_L3, lee_L4, named_presentation
from presentations.coxeter import (
    CoxeterMatrix, alternating, coxeter_group_model, coxeter_matrix, hecke0_via_unitary, simple_paths,
)
from presentations.rewriting import CompletionStatus, complete, enumerate_presented, t_sequence
from safety.validation import PreconditionError
from transformations.families import FamilyKind, family_monoid
from utils.formats import format_coxeter_matrix, format_presentation, parse_coxeter_matrix, parse_presentation


@pytest.fixture
def a3():
    return coxeter_matrix("A", 3)


@pytest.fixture
def b3():
    return coxeter_matrix("B", 3)


class TestCompletion:
    """Shortlex completion and normal-form enumeration."""

    def test_free_monoid_is_complete(self):
        system = complete(Presentation(("a", "b"), ()))
        assert system.status is CompletionStatus.COMPLETE
        assert system.rules == []

    def test_idempotent_rules(self):
        system = complete(Presentation(("a",), (((("a", "a"), ("a",))),)))
        assert system.status is CompletionStatus.COMPLETE
        assert system.decoded_rules() == [(("a", "a"), ("a",))]

    def test_free_monoid_enumeration_capped(self):
        system = complete(Presentation(("a", "b"), ()))
        with pytest.raises(ValueError):
            enumerate_presented(system, size_cap=50)

    def test_reduce(self):
        system = complete(catalan(3))
        assert system.reduce(("a1", "a1", "a1")) == ("a1",)
        assert system.reduce(("a2", "a1", "a2")) == system.reduce(("a2", "a1"))

    def test_free_tree_sizes(self):
        for n, expected in ((1, 2), (2, 6), (3, 42)):
            presented, _ = present(free_tree(n))
            assert presented.exact
            assert presented.monoid.size == expected

    @pytest.mark.slow
    def test_free_tree_four(self):
        presented, _ = present(free_tree(4))
        assert presented.monoid.size == 1806

    def test_t_sequence(self):
        assert [t_sequence(n) for n in range(5)] == [1, 2, 6, 42, 1806]

    def test_lee_semigroups(self):
        l3, _ = present(lee_L3())
        l4, _ = present(lee_L4())
        assert l3.reported_size == 6
        assert l4.reported_size == 8
        assert l3.monoid.size == 7

    def test_capped_completion(self):
        # the positive braid relation has no finite shortlex completion
        system = complete(Presentation(("a", "b"), ((("a", "b", "a"), ("b", "a", "b")),)), rule_cap=10)
        assert system.status is CompletionStatus.CAPPED


class TestCatalogue:
    """Named presentations and their file format."""

    def test_catalan_relations(self):
        presentation = catalan(4)
        assert presentation.generators == ("a1", "a2", "a3")
        assert (("a1", "a3"), ("a3", "a1")) in presentation.relations

    def test_hecke_relations(self, b3):
        relations = hecke0(b3).relations
        assert (alternating("s1", "s2", 4), alternating("s2", "s1", 4)) in relations
        assert (("s1", "s3"), ("s3", "s1")) in relations
        assert len(relations) == 6

    def test_named(self):
        assert named_presentation("catalan", {"m": "3"}) == catalan(3)
        assert named_presentation("hecke0", {"family": "A", "n": 2}).generators == ("s1", "s2")
        with pytest.raises(PreconditionError):
            named_presentation("free_tree")
        with pytest.raises(PreconditionError):
            named_presentation("plactic")

    def test_stray_symbols(self):
        with pytest.raises(PreconditionError):
            Presentation(("a",), ((("a", "b"), ("a",)),))

    def test_file_round_trip(self):
        text = format_presentation(lee_L3())
        assert text.splitlines()[:2] == ["gens: e f", "semigroup: true"]
        assert parse_presentation(text, name="L3") == lee_L3()

    def test_empty_word_side(self):
        presentation = parse_presentation("gens: a\na a = 1\n")
        assert presentation.relations == ((("a", "a"), ()),)
        presented, _ = present(presentation)
        assert presented.monoid.size == 2


class TestCoxeter:
    """Coxeter matrices, permutation models and 0-Hecke monoids."""

    def test_matrix_validation(self):
        with pytest.raises(PreconditionError):
            CoxeterMatrix(((1, 3), (2, 1)))
        with pytest.raises(PreconditionError):
            coxeter_matrix("E", 6)

    def test_matrix_file(self, b3):
        text = format_coxeter_matrix(b3)
        assert text == "3\n4 2\n3\n"
        assert parse_coxeter_matrix(text, name="B3") == b3
        assert parse_coxeter_matrix("2\ninf\n").m(1, 2) is None

    def test_group_orders(self):
        for family, n, order in (("A", 2, 6), ("A", 3, 24), ("I2", 5, 10), ("B", 3, 48)):
            model = coxeter_group_model(coxeter_matrix(family, n))
            assert model.group.size == order
            assert model.relations_hold

    def test_commuting_pair_model(self):
        matrix = coxeter_matrix("I2", 2)
        model = coxeter_group_model(matrix)
        assert model.group.size == 4
        assert model.relations_hold
        assert len(set(model.generator_indices)) == 2
        assert hecke0_via_unitary(matrix).size == 4
        result = hecke_two_route(matrix)
        assert result.isomorphic
        assert result.presented_size == result.model_size == 4

    def test_dihedral_group_orders(self):
        for k in range(2, 9):
            model = coxeter_group_model(coxeter_matrix("I2", k))
            assert model.group.size == 2 * k, k
            assert model.relations_hold, k

    def test_hecke_sizes(self):
        for family, n, size in (("I2", 4, 8), ("I2", 5, 10), ("A", 3, 24), ("B", 3, 48)):
            monoid = hecke0_via_unitary(coxeter_matrix(family, n))
            assert monoid.size == size
            assert triviality(monoid).j_trivial

    def test_two_route(self, a3):
        result = hecke_two_route(a3)
        assert result.exact and result.isomorphic
        assert result.presented_size == result.model_size == 24

    def test_simple_paths(self, a3):
        assert (1, 2, 3) in simple_paths(a3)
        assert all(path[0] <= path[-1] for path in simple_paths(a3))
        assert len(simple_paths(coxeter_matrix("I2", 4))) == 3

    def test_paths_onto_catalan(self, b3):
        for path in simple_paths(b3):
            assert subdiagram_onto_catalan(b3, path).success, path


class TestBridges:
    """Homomorphisms between presented monoids and concrete models."""

    def test_catalan_cross_check(self):
        for m in range(2, 6):
            result = catalan_cross_check(m)
            assert result.isomorphic, m
            assert result.presented_size == family_monoid(FamilyKind.C, m).size

    def test_free_tree_onto_catalan(self):
        for n in range(1, 4):
            result = free_tree_onto_catalan(n)
            assert result.success and result.surjective

    def test_failed_relation_is_a_value(self):
        target = family_monoid(FamilyKind.C, 3)
        result = extend_homomorphism(free_tree(2), target, {"a1": target.generators[1], "a2": target.generators[0]})
        assert not result.success
        assert result.failed_relation is not None

    def test_lee_bridge(self):
        for n in (4, 5):
            assert lee_onto_hecke(n).success
            backward = hecke_onto_lee(n)
            assert backward.success and backward.surjective

    def test_dihedral_relation(self):
        assert all(dihedral_hecke_relation(n) for n in range(4, 7))
