#!/usr/bin/env python3
"""
Tests for partial transformations, the monoid families, digraph Catalan
monoids and the bar/hat bijection.
"""

import os
import sys
from itertools import product

import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from monoids.green import triviality
from safety.limits import GuardExceeded
from safety.validation import PreconditionError
from transformations.bijection import appendix_pairing, bar_map, hat_map, non_homomorphism_witness
from transformations.digraphs import (
    Digraph, build_gamma_n, catalan_of_digraph, digraph_analysis, longest_path_vertices, path_digraph,
)
from transformations.families import (
    FamilyKind, catalan_generators, catalan_number, enumerate_family, family_monoid, is_member, parse_family,
)
from transformations.maps import PartialMap, compose_all, parse_map, tau
from utils.formats import format_digraph, parse_digraph

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


@pytest.fixture
def e3():
    return enumerate_family(FamilyKind.E, 3)


@pytest.fixture
def ic3():
    return enumerate_family(FamilyKind.IC, 3)


class TestPartialMap:
    """Composition on the right and the four map properties."""

    def test_compose_identity(self):
        beta = parse_map("[2,-,3]")
        assert PartialMap.identity(3).compose(beta) == beta

    def test_compose_partial(self):
        alpha = PartialMap.from_dict(2, {1: 2})
        beta = PartialMap.from_dict(2, {2: 2})
        assert alpha.compose(beta) == PartialMap.from_dict(2, {1: 2})

    def test_compose_acts_on_right(self):
        # x(ab) = (xa)b
        a, b = tau(3, 1, 2), tau(3, 2, 3)
        assert (a * b)(1) == 3
        assert (b * a)(1) == 2
        assert compose_all([a, b], 3) == a * b
        assert compose_all([], 3) == PartialMap.identity(3)

    def test_compose_size_mismatch(self):
        with pytest.raises(PreconditionError):
            PartialMap.identity(2).compose(PartialMap.identity(3))

    def test_extensive_closed(self, e3):
        for a, b in product(e3, repeat=2):
            assert a.compose(b).properties().extensive

    def test_properties(self):
        flags = PartialMap.identity(4).properties()
        assert flags.total and flags.injective and flags.order_preserving and flags.extensive

        constant = PartialMap((3, 3, 3)).properties()
        assert constant.total and constant.order_preserving and constant.extensive
        assert not constant.injective

        partial = PartialMap.from_dict(3, {2: 1}).properties()
        assert partial.injective and partial.order_preserving
        assert not partial.extensive and not partial.total

    def test_literal_round_trip(self):
        alpha = parse_map("[2, -, 3]")
        assert alpha.literal() == "[2,-,3]"
        assert parse_map(alpha.literal()) == alpha

    def test_out_of_range(self):
        with pytest.raises(PreconditionError):
            PartialMap((4, 1, 2))
        with pytest.raises(PreconditionError):
            parse_map("[1,x]")


class TestFamilies:
    """Exhaustive family enumeration and closure."""

    def test_catalan_sizes(self):
        for m in range(1, 8):
            assert len(enumerate_family(FamilyKind.C, m)) == CATALAN[m]
        assert catalan_number(5) == 42

    def test_ic_sizes(self):
        for m in range(1, 6):
            assert len(enumerate_family(FamilyKind.IC, m)) == CATALAN[m + 1]

    def test_small_models(self):
        assert len(enumerate_family(FamilyKind.POI, 2)) == 6
        assert len(enumerate_family(FamilyKind.OPFixTop, 3)) == 6

    def test_closed_with_identity(self):
        for kind in FamilyKind:
            maps = set(enumerate_family(kind, 3))
            assert PartialMap.identity(3) in maps, kind
            assert all(a.compose(b) in maps for a, b in product(maps, repeat=2)), kind

    def test_membership_and_deduplication(self, ic3):
        assert len(set(ic3)) == len(ic3)
        assert all(is_member(FamilyKind.IC, alpha) for alpha in ic3)

    def test_catalan_generators_generate(self):
        monoid = family_monoid(FamilyKind.C, 4)
        assert monoid.size == 14
        assert set(catalan_generators(4)) <= set(monoid.elements)

    def test_parse_family(self):
        assert parse_family("opfixtop") is FamilyKind.OPFixTop
        with pytest.raises(PreconditionError):
            parse_family("XYZ")

    def test_filter_cap(self):
        with pytest.raises(GuardExceeded):
            enumerate_family(FamilyKind.E, 12)


class TestDigraphs:
    """Digraph Catalan monoids, Gamma_n and the digraph file format."""

    def test_single_edge(self):
        assert catalan_of_digraph(Digraph.from_edges(2, [(1, 2)])).size == 2

    def test_path_is_catalan(self):
        for m in range(2, 7):
            monoid = catalan_of_digraph(path_digraph(m))
            assert monoid.size == CATALAN[m]
            assert set(monoid.elements) == set(enumerate_family(FamilyKind.C, m))

    def test_path_analysis(self):
        analysis = digraph_analysis(path_digraph(5))
        assert analysis.is_acyclic
        assert analysis.longest_path_vertices == 5

    def test_gamma(self):
        gamma1 = build_gamma_n(1)
        assert gamma1.n == 3
        assert {(gamma1.label(u), gamma1.label(v)) for u, v in gamma1.edges} == {("0", "1"), ("0", "0'")}
        assert len(build_gamma_n(3).edges) == 6
        assert digraph_analysis(build_gamma_n(4)).longest_path_vertices == 5

    def test_gamma_r_trivial(self):
        assert triviality(catalan_of_digraph(build_gamma_n(4))).r_trivial

    def test_cycle(self):
        cycle = Digraph.from_edges(2, [(1, 2), (2, 1)])
        assert not digraph_analysis(cycle).is_acyclic
        with pytest.raises(PreconditionError):
            longest_path_vertices(cycle)

    def test_loops_rejected(self):
        with pytest.raises(PreconditionError):
            Digraph.from_edges(2, [(1, 1)])

    def test_file_format(self):
        text = "# Gamma_1\n3\n1 2\n1 3\n"
        graph = parse_digraph(text)
        assert graph.sorted_edges() == [(1, 2), (1, 3)]
        assert format_digraph(graph) == "3\n1 2\n1 3\n"


class TestBijection:
    """bar and hat between IC_m and C_{m+1}."""

    def test_bar_examples(self):
        assert bar_map(PartialMap.empty(3)).image == (4, 4, 4, 4)
        assert bar_map(PartialMap.from_dict(3, {2: 3})).image == (3, 3, 4, 4)
        assert bar_map(PartialMap.identity(3)) == PartialMap.identity(4)

    def test_hat_examples(self):
        assert hat_map(PartialMap.identity(4)) == PartialMap.identity(3)
        assert hat_map(PartialMap((2, 2, 4, 4))) == PartialMap.from_dict(3, {2: 2})

    def test_hat_requires_fixed_top(self):
        with pytest.raises(PreconditionError):
            hat_map(PartialMap((2, 3, 2)))

    def test_hat_inverts_bar(self, ic3):
        assert all(hat_map(bar_map(alpha)) == alpha for alpha in ic3)

    def test_pairing(self):
        for m in range(1, 5):
            pairing = appendix_pairing(m)
            assert pairing.is_bijection
            assert len(pairing.pairs) == CATALAN[m + 1]

    def test_poi_restriction(self):
        pairing = appendix_pairing(2, FamilyKind.POI)
        assert pairing.is_bijection
        assert pairing.target is FamilyKind.OPFixTop

    def test_preservation(self):
        for alpha in enumerate_family(FamilyKind.PC, 3):
            if alpha.properties().injective:
                assert bar_map(alpha).properties().order_preserving
                assert bar_map(alpha).properties().extensive

    def test_not_a_homomorphism(self):
        witness = non_homomorphism_witness(2)
        assert witness is not None
        alpha, beta = witness
        assert bar_map(alpha.compose(beta)) != bar_map(alpha).compose(bar_map(beta))
