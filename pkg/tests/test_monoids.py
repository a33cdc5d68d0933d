#!/usr/bin/env python3
"""
Tests for the finite monoid engine: tables, products, Green triviality,
identity checking, bounded theories, isoterms and unitary power monoids.
"""

import os
import sys

import numpy as np
import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from monoids.finite import (
    FiniteMonoid, direct_product, dual, evaluate_word, rectangular_band, semilattice, symmetric_group,
    trivial_monoid, two_element_semigroups,
)
from monoids.green import embed_rtrivial_in_Em, green_classes, structure_flags, triviality
from monoids.identities import (
    band_identity_check, bounded_identity_theory, check_alphabet_chain, is_isoterm_bounded, oracle_theory,
    satisfies_identity, satisfies_identity_sampled,
)
from monoids.power import unitary_power_monoid, unitary_submonoid
from safety.limits import GuardExceeded
from safety.validation import PreconditionError
from transformations.families import FamilyKind, family_monoid
from utils.formats import format_monoid, parse_monoid
from words.constructions import build_u_n_m, zimin
from words.core import parse_identity, parse_word
from words.subwords import jm_key, um_key


@pytest.fixture(scope="module")
def c3():
    return family_monoid(FamilyKind.C, 3)


@pytest.fixture(scope="module")
def e3():
    return family_monoid(FamilyKind.E, 3)


@pytest.fixture(scope="module")
def ic2():
    return family_monoid(FamilyKind.IC, 2)


class TestFiniteMonoid:
    """Tables, identities and products."""

    def test_from_table(self):
        monoid = FiniteMonoid.from_table([[0, 1], [1, 1]])
        assert monoid.identity == 0
        assert monoid.multiply(1, 1) == 1

    def test_rejects_non_associative(self):
        with pytest.raises(PreconditionError):
            FiniteMonoid.from_table([[0, 1, 2], [1, 2, 1], [2, 2, 1]], identity=0)

    def test_rejects_missing_identity(self):
        with pytest.raises(PreconditionError):
            FiniteMonoid.from_table([[0, 0], [0, 0]])

    def test_adjoined_identity(self):
        null = two_element_semigroups()["null"]
        assert null.size == 3
        assert null.substitution_domain() == (0, 1)

    def test_closure_from_maps(self, c3):
        assert c3.size == 5
        assert c3.identity == 0
        assert c3.index_of(c3.elements[3]) == 3

    def test_direct_product(self, c3):
        product = direct_product(c3, semilattice(2))
        assert product.size == 10
        assert product.multiply(product.identity, 7) == 7

    def test_direct_product_cap(self, c3):
        with pytest.raises(GuardExceeded):
            direct_product(c3, c3, cap=20)

    def test_dual(self):
        left_zero = two_element_semigroups()["left-zero"]
        assert np.array_equal(dual(left_zero).table, left_zero.table.T)

    def test_evaluate_word(self):
        chain = semilattice(3)
        assert evaluate_word(chain, {"x": 2, "y": 1}, parse_word("x y x")) == 1
        with pytest.raises(PreconditionError):
            evaluate_word(chain, {"x": 2}, parse_word("x y"))

    def test_symmetric_group(self):
        assert symmetric_group(3).size == 6

    def test_dump_round_trip(self, c3):
        parsed = parse_monoid(format_monoid(c3))
        assert parsed.same_table(c3)
        assert parsed.generators == c3.generators


class TestGreen:
    """R-, L- and J-triviality and related structure."""

    def test_catalan_is_j_trivial(self, c3):
        flags = triviality(c3)
        assert flags.r_trivial and flags.l_trivial and flags.j_trivial

    def test_group_is_not_trivial(self):
        flags = triviality(symmetric_group(3))
        assert not flags.r_trivial and not flags.j_trivial

    def test_left_zero_band(self):
        flags = triviality(rectangular_band(2, 1))
        assert flags.r_trivial
        assert not flags.l_trivial

    def test_extensive_is_r_trivial(self, e3):
        flags = triviality(e3)
        assert flags.r_trivial
        assert not flags.l_trivial

    def test_green_classes_partition(self, e3):
        classes = green_classes(e3)
        assert all(len(block) == 1 for block in classes["R"])
        assert sorted(a for block in classes["L"] for a in block) == list(range(e3.size))

    def test_structure_flags(self):
        assert structure_flags(semilattice(4)).is_band
        assert not structure_flags(symmetric_group(3)).aperiodic

    def test_embedding(self, e3):
        assert embed_rtrivial_in_Em(e3).verified
        assert embed_rtrivial_in_Em(two_element_semigroups()["semilattice"]).verified

    def test_embedding_rejects_non_r_trivial(self):
        with pytest.raises(PreconditionError):
            embed_rtrivial_in_Em(symmetric_group(3))


class TestIdentities:
    """Exhaustive and sampled identity checking."""

    def test_semilattice_identities(self):
        chain = semilattice(3)
        assert satisfies_identity(chain, parse_identity("x x ~ x")).holds
        assert satisfies_identity(chain, parse_identity("x y ~ y x")).holds

    def test_counterexample(self, c3):
        result = satisfies_identity(c3, parse_identity("x y ~ y x"))
        assert not result.holds
        x, y = result.counterexample["x"], result.counterexample["y"]
        assert c3.multiply(x, y) != c3.multiply(y, x)
        assert set(result.describe(c3)) == {"x", "y"}

    def test_separating_identity(self, ic2, c3):
        identity = parse_identity("x x y y ~ y y x x")
        assert satisfies_identity(ic2, identity).holds
        assert not satisfies_identity(c3, identity).holds

    def test_swap_identity_separates(self):
        for m in (2, 3):
            identity = parse_identity(" ".join(["x"] * m + ["y"] * m) + " ~ " + " ".join(["y"] * m + ["x"] * m))
            assert satisfies_identity(family_monoid(FamilyKind.IC, m), identity).holds, m
            refuted = satisfies_identity(family_monoid(FamilyKind.C, m + 1), identity)
            assert not refuted.holds and refuted.counterexample is not None, m

    def test_square_swap_fails_in_ic3(self):
        result = satisfies_identity(family_monoid(FamilyKind.IC, 3), parse_identity("x x y y ~ y y x x"))
        assert not result.holds

    def test_sampled_agrees(self, c3):
        identity = parse_identity("x y ~ y x")
        assert not satisfies_identity_sampled(c3, identity, samples=500, seed=3).holds
        assert satisfies_identity_sampled(c3, parse_identity("x x ~ x x x"), samples=500, seed=3).holds

    def test_sampled_deterministic(self, e3):
        identity = parse_identity("x y z ~ z y x")
        first = satisfies_identity_sampled(e3, identity, samples=200, seed=11)
        second = satisfies_identity_sampled(e3, identity, samples=200, seed=11)
        assert first == second

    def test_substitution_budget(self, e3):
        with pytest.raises(GuardExceeded):
            satisfies_identity(e3, parse_identity("a b c d e f g h i j k ~ k j i h g f e d c b a"))

    def test_bounded_theory_matches_jm(self, c3):
        assert bounded_identity_theory(c3, 2, 4) == oracle_theory(2, 4, lambda w: jm_key(w, 2))

    def test_bounded_theory_matches_um(self, ic2):
        assert bounded_identity_theory(ic2, 2, 4) == oracle_theory(2, 4, lambda w: um_key(w, 1))

    def test_band_identity(self):
        result = band_identity_check(rectangular_band(2, 2), parse_word("x y"), "x", parse_word("x y"))
        assert result.holds

    def test_band_identity_requires_band(self, c3):
        with pytest.raises(PreconditionError):
            band_identity_check(c3, parse_word("x y"), "x", parse_word("x y"))

    def test_alphabet_chain(self):
        u = build_u_n_m(3, 4)
        assert check_alphabet_chain(u.word, u.blocks, ("x",))
        assert check_alphabet_chain(parse_word("x y"), [(0, 2)], ("y",))
        assert not check_alphabet_chain(parse_word("x x y"), [(0, 1), (1, 3)], ("x",))

    def test_alphabet_chain_bad_blocks(self):
        with pytest.raises(PreconditionError):
            check_alphabet_chain(parse_word("x y z"), [(0, 1), (2, 3)], ("x",))


class TestIsoterms:
    """Bounded isoterm search."""

    def test_sparse_word_isoterm(self):
        verdict = is_isoterm_bounded(family_monoid(FamilyKind.IC, 4), parse_word("x t x"), 4, 0)
        assert verdict.is_isoterm
        assert verdict.bound == {"max_len": 4, "extra_fresh": 0, "variables": 2}

    def test_zimin_isoterm_for_brandt(self):
        brandt = family_monoid(FamilyKind.POI, 2)
        assert is_isoterm_bounded(brandt, zimin(2), 5, 0).is_isoterm

    def test_trivial_monoid(self):
        verdict = is_isoterm_bounded(trivial_monoid(), ("x",), 2, 0)
        assert not verdict.is_isoterm
        assert verdict.witness == ("x", "x")


class TestUnitaryPower:
    """Unitary power monoids."""

    def test_sizes(self, c3):
        assert unitary_power_monoid(c3).size == 2 ** 4
        assert unitary_power_monoid(trivial_monoid()).size == 1

    def test_j_trivial(self):
        for base in (symmetric_group(3), semilattice(3), family_monoid(FamilyKind.POI, 2)):
            assert triviality(unitary_power_monoid(base)).j_trivial, base.name

    def test_identity_is_singleton(self, c3):
        power = unitary_power_monoid(c3)
        assert power.elements[power.identity] == frozenset({c3.identity})

    def test_submonoid_generated(self):
        group = symmetric_group(3)
        generators = [frozenset({group.identity, g}) for g in group.generators]
        assert unitary_submonoid(group, generators).size == 6

    def test_bitset_cap(self):
        with pytest.raises(GuardExceeded):
            unitary_power_monoid(family_monoid(FamilyKind.C, 5))
