"""Homomorphisms between presented monoids and their concrete models."""

from dataclasses import dataclass
from typing import Dict, Tuple

from monoids.finite import FiniteMonoid, evaluate_word
from monoids.homomorphisms import HomomorphismResult, extend_homomorphism, is_isomorphism
from presentations.catalog import catalan, free_tree, hecke0, lee_monoid
from presentations.coxeter import CoxeterMatrix, alternating, coxeter_matrix, hecke0_via_unitary
from presentations.rewriting import PresentedMonoid, complete, enumerate_presented, generator_index
from safety.validation import require
from transformations.digraphs import catalan_of_digraph, path_digraph
from transformations.families import FamilyKind, catalan_generators, family_monoid
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class TwoRouteResult:
    """A presented monoid compared against a concrete model of the same monoid."""
    presented_size: int
    model_size: int
    exact: bool
    isomorphic: bool


def catalan_generator_map(m: int, target: FiniteMonoid) -> Dict[str, int]:
    """a_i -> index of the i-th Catalan generator inside a monoid of maps on [m]."""
    return {f"a{i}": target.index_of(alpha) for i, alpha in enumerate(catalan_generators(m), start=1)}


def present(presentation) -> Tuple[PresentedMonoid, Dict[str, int]]:
    system = complete(presentation)
    presented = enumerate_presented(system)
    return presented, generator_index(presented, system)


def catalan_cross_check(m: int) -> TwoRouteResult:
    """Completion of the Catalan presentation against C(P_m), matched generator by generator."""
    presented, gens = present(catalan(m))
    model = catalan_of_digraph(path_digraph(m))
    targets = catalan_generator_map(m, model)
    isomorphic = presented.exact and is_isomorphism(
        presented.monoid, model, {gens[g]: targets[g] for g in gens}
    )
    return TwoRouteResult(presented.monoid.size, model.size, presented.exact, isomorphic)


def free_tree_onto_catalan(n: int) -> HomomorphismResult:
    """a_i -> a_i from FT_n into C_{n+1}; surjective when it succeeds."""
    target = family_monoid(FamilyKind.C, n + 1)
    return extend_homomorphism(free_tree(n), target, catalan_generator_map(n + 1, target))


def subdiagram_onto_catalan(matrix: CoxeterMatrix, path: Tuple[int, ...]) -> HomomorphismResult:
    """s_i -> a_i from the 0-Hecke monoid of an induced path on k vertices into C_{k+1}."""
    require(len(path) >= 1, "path must have at least one vertex")
    restricted = matrix.restrict(path)
    target = family_monoid(FamilyKind.C, len(path) + 1)
    catalan_map = catalan_generator_map(len(path) + 1, target)
    gen_map = {f"s{i}": catalan_map[f"a{i}"] for i in range(1, len(path) + 1)}
    return extend_homomorphism(hecke0(restricted), target, gen_map)


def lee_onto_hecke(n: int) -> HomomorphismResult:
    """e -> s1, f -> s2 from L_n^1 into H0(I_n)."""
    target = hecke0_via_unitary(coxeter_matrix("I2", n))
    return extend_homomorphism(lee_monoid(n), target, {"e": target.generators[0], "f": target.generators[1]})


def hecke_onto_lee(n: int) -> HomomorphismResult:
    """s1 -> e, s2 -> f from H0(I_{n+1}) into L_n^1 (enumerated from its presentation)."""
    presented, gens = present(lee_monoid(n))
    return extend_homomorphism(hecke0(coxeter_matrix("I2", n + 1)), presented.monoid,
                               {"s1": gens["e"], "s2": gens["f"]})


def dihedral_hecke_relation(n: int) -> bool:
    """In H0(I_n): s1 s2 ... (n) = s2 s1 s2 ... (n+1) = s1 s2 s1 ... (n+1)."""
    monoid = hecke0_via_unitary(coxeter_matrix("I2", n))
    assignment = {"s1": monoid.generators[0], "s2": monoid.generators[1]}
    values = {evaluate_word(monoid, assignment, word) for word in (
        alternating("s1", "s2", n), alternating("s2", "s1", n + 1), alternating("s1", "s2", n + 1),
    )}
    return len(values) == 1


def hecke_two_route(matrix: CoxeterMatrix) -> TwoRouteResult:
    """Presentation completion against the unitary-subset model of H0(CD)."""
    model = hecke0_via_unitary(matrix)
    presented, gens = present(hecke0(matrix))
    gen_map = {gens[f"s{i}"]: model.generators[i - 1] for i in range(1, matrix.n + 1)}
    isomorphic = presented.exact and is_isomorphism(presented.monoid, model, gen_map)
    logger.info(f"H0({matrix.name}): presented {presented.monoid.size}, unitary model {model.size}")
    return TwoRouteResult(presented.monoid.size, model.size, presented.exact, isomorphic)
