"""Suites about concrete monoids: family sizes, the bar/hat bijection, presented
monoids, 0-Hecke monoids, unitary power monoids and digraph Catalan monoids."""

from typing import Callable, List

from harness.registry import Check, Outcome, SuiteContext, register_suite
from monoids.finite import FiniteMonoid, closure_from_generators, semilattice, symmetric_group, trivial_monoid
from monoids.green import triviality
from monoids.power import unitary_power_monoid
from presentations.bridges import (
    catalan_cross_check, dihedral_hecke_relation, free_tree_onto_catalan, hecke_onto_lee, hecke_two_route,
    lee_onto_hecke, present, subdiagram_onto_catalan,
)
from presentations.catalog import free_tree, hecke0, lee_L3, lee_L4
from presentations.coxeter import coxeter_group_model, coxeter_matrix, hecke0_via_unitary, simple_paths
from presentations.rewriting import t_sequence
from transformations.bijection import appendix_pairing, bar_map, non_homomorphism_witness
from transformations.digraphs import (
    Digraph, build_gamma_n, catalan_of_digraph, digraph_analysis, path_digraph,
)
from transformations.families import FamilyKind, enumerate_family, extensive_generators, family_monoid
from transformations.maps import PartialMap

CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862)
T_VALUES = (1, 2, 6, 42, 1806)
HECKE_SIZES = (("I2", 2, 4), ("A", 2, 6), ("I2", 4, 8), ("I2", 5, 10), ("A", 3, 24), ("B", 3, 48))
STRETCH_HECKE_SIZES = (("H", 3, 120), ("D", 4, 192))


def _size_check(check_id: str, anchor: str, expected: int, compute: Callable[[], int], **params) -> Check:
    return Check(check_id, anchor, lambda: Outcome(expected, compute()), params=params)


@register_suite("cardinalities", "Family sizes, t(n) and 0-Hecke monoid sizes")
def cardinality_suite(ctx: SuiteContext) -> List[Check]:
    checks = []
    for m in range(1, int(ctx.get("max_c", 8)) + 1):
        checks.append(_size_check(f"C{m}", "|C_m| is the m-th Catalan number", CATALAN[m],
                                  lambda m=m: len(enumerate_family(FamilyKind.C, m)), m=m))
    for m in range(1, int(ctx.get("max_ic", 7)) + 1):
        checks.append(_size_check(f"IC{m}", "|IC_m| is the (m+1)-th Catalan number", CATALAN[m + 1],
                                  lambda m=m: len(enumerate_family(FamilyKind.IC, m)), m=m))
    checks.append(_size_check("POI2", "six partial order-preserving injections form B_2^1", 6,
                              lambda: len(enumerate_family(FamilyKind.POI, 2))))
    checks.append(_size_check("OPFixTop3", "six order-preserving maps of [3] fixing 3 form A_2^1", 6,
                              lambda: len(enumerate_family(FamilyKind.OPFixTop, 3))))

    for m in range(1, 7):
        def extensive(m=m) -> Outcome:
            enumerated = enumerate_family(FamilyKind.E, m)
            closure = closure_from_generators(PartialMap.identity(m), extensive_generators(m), PartialMap.compose,
                                              name=f"E{m}")
            return Outcome(len(enumerated), closure.size, passed=set(enumerated) == set(closure.elements))
        checks.append(Check(f"E{m}-enumeration-vs-closure", "E_m is generated by the elementary maps i -> j, i < j",
                            extensive, params={"m": m}))

    for n, expected in enumerate(T_VALUES):
        checks.append(_size_check(f"t({n})", "t(0) = 1, t(n) = t(n-1)(t(n-1)+1)", expected,
                                  lambda n=n: t_sequence(n), n=n))
    for family, n, expected in HECKE_SIZES:
        checks.append(_size_check(f"H0({family}{n})", "|H_0(CD)| = |W(CD)|", expected,
                                  lambda family=family, n=n: hecke0_via_unitary(coxeter_matrix(family, n)).size,
                                  diagram=f"{family}{n}"))
    return checks


@register_suite("appendix", "bar/hat bijection between IC_m and C_{m+1}")
def appendix_suite(ctx: SuiteContext) -> List[Check]:
    checks = []
    for m in range(1, int(ctx.get("max_m", 6)) + 1):
        def bijection(m=m) -> Outcome:
            pairing = appendix_pairing(m)
            return Outcome({"bijection": True, "pairs": CATALAN[m + 1]},
                           {"bijection": pairing.is_bijection, "pairs": len(pairing.pairs)})
        checks.append(Check(f"IC{m}-C{m + 1}-bijection", "bar and hat are mutually inverse bijections",
                            bijection, params={"m": m}))

    for m in range(1, 6):
        def preserved(m=m) -> Outcome:
            order = [a.literal() for a in enumerate_family(FamilyKind.POI, m)
                     if not bar_map(a).properties().order_preserving]
            extensive = [a.literal() for a in enumerate_family(FamilyKind.IE, m)
                         if not bar_map(a).properties().extensive]
            return Outcome({"order": [], "extensive": []}, {"order": order, "extensive": extensive})
        checks.append(Check(f"bar-preserves-m{m}", "bar preserves order-preservation and extensivity",
                            preserved, params={"m": m}))

    def alignment() -> Outcome:
        pairing = appendix_pairing(3)
        sources = {alpha for alpha, _ in pairing.pairs}
        return Outcome(
            {"pairs": 14, "sources": True},
            {"pairs": len(pairing.pairs), "sources": sources == set(enumerate_family(FamilyKind.IC, 3))},
            detail="; ".join(f"{a.literal()}->{b.literal()}" for a, b in pairing.pairs),
        )
    checks.append(Check("IC3-C4-alignment", "the 14 maps of IC_3 align with the 14 maps of C_4", alignment))

    def brandt() -> Outcome:
        pairing = appendix_pairing(2, FamilyKind.POI)
        return Outcome({"bijection": True, "pairs": 6}, {"bijection": pairing.is_bijection, "pairs": len(pairing.pairs)})
    checks.append(Check("POI2-OPFixTop3-bijection", "bar restricts to B_2^1 -> A_2^1", brandt))

    for m in (2, 3):
        def not_homomorphic(m=m) -> Outcome:
            witness = non_homomorphism_witness(m)
            detail = None if witness is None else f"alpha={witness[0].literal()}, beta={witness[1].literal()}"
            return Outcome(True, witness is not None, detail=detail)
        checks.append(Check(f"bar-not-homomorphism-m{m}", "bar is a bijection but not a homomorphism",
                            not_homomorphic, params={"m": m}))
    return checks


@register_suite("free-tree", "Free tree monoids and the Catalan presentation")
def free_tree_suite(ctx: SuiteContext) -> List[Check]:
    checks = []
    for n in range(1, 5):
        def presented_size(n=n) -> Outcome:
            presented, _ = present(free_tree(n))
            return Outcome({"size": t_sequence(n), "exact": True},
                           {"size": presented.monoid.size, "exact": presented.exact})
        checks.append(Check(f"FT{n}-size", "|FT_n| = t(n)", presented_size, params={"n": n}, stretch=n >= 4))

    for n in range(1, int(ctx.get("max_hom", 5)) + 1):
        def onto_catalan(n=n) -> Outcome:
            result = free_tree_onto_catalan(n)
            failed = None if result.failed_relation is None else {
                "lhs": " ".join(result.failed_relation[0]), "rhs": " ".join(result.failed_relation[1])}
            return Outcome({"success": True, "surjective": True},
                           {"success": result.success, "surjective": result.surjective}, counterexample=failed)
        checks.append(Check(f"FT{n}-onto-C{n + 1}", "C_{n+1} is a homomorphic image of FT_n", onto_catalan,
                            params={"n": n}))

    for n in range(1, 4):
        def r_trivial(n=n) -> Outcome:
            presented, _ = present(free_tree(n))
            return Outcome(True, triviality(presented.monoid).r_trivial)
        checks.append(Check(f"FT{n}-R-trivial", "FT_n is R-trivial", r_trivial, params={"n": n}))

    for m in range(2, 6):
        def cross_check(m=m) -> Outcome:
            result = catalan_cross_check(m)
            return Outcome({"size": CATALAN[m], "isomorphic": True},
                           {"size": result.presented_size, "isomorphic": result.isomorphic})
        checks.append(Check(f"catalan-presentation-m{m}", "the Catalan relations present C_m", cross_check,
                            params={"m": m}))
    return checks


@register_suite("hecke", "0-Hecke monoids, Coxeter models and the Lee monoids")
def hecke_suite(ctx: SuiteContext) -> List[Check]:
    checks = []
    for family, n, expected in HECKE_SIZES:
        matrix = coxeter_matrix(family, n)

        def model(matrix=matrix, expected=expected) -> Outcome:
            group = coxeter_group_model(matrix)
            return Outcome({"order": expected, "relations": True},
                           {"order": group.group.size, "relations": group.relations_hold})
        checks.append(Check(f"W({matrix.name})", "s_i s_j has order m_ij in the permutation model", model,
                            params={"diagram": matrix.name}))

        def hecke(matrix=matrix, expected=expected) -> Outcome:
            monoid = hecke0_via_unitary(matrix)
            return Outcome({"size": expected, "j_trivial": True},
                           {"size": monoid.size, "j_trivial": triviality(monoid).j_trivial})
        checks.append(Check(f"H0({matrix.name})-unitary", "0-Hecke monoids are J-trivial and as large as W(CD)",
                            hecke, params={"diagram": matrix.name}))

        def two_route(matrix=matrix, expected=expected) -> Outcome:
            result = hecke_two_route(matrix)
            return Outcome({"presented": expected, "model": expected, "exact": True, "isomorphic": True},
                           {"presented": result.presented_size, "model": result.model_size,
                            "exact": result.exact, "isomorphic": result.isomorphic})
        checks.append(Check(f"H0({matrix.name})-two-route", "presentation and unitary model agree", two_route,
                            params={"diagram": matrix.name}))

        def paths(matrix=matrix) -> Outcome:
            failing = [list(path) for path in simple_paths(matrix)
                       if not subdiagram_onto_catalan(matrix, path).success]
            return Outcome([], failing, detail=f"{len(simple_paths(matrix))} induced paths")
        checks.append(Check(f"H0({matrix.name})-paths-onto-C", "C_{k+1} is a divisor of the 0-Hecke monoid "
                            "of any diagram with an induced k-vertex path", paths, params={"diagram": matrix.name}))

    for family, n, expected in STRETCH_HECKE_SIZES:
        def completed(family=family, n=n, expected=expected) -> Outcome:
            presented, _ = present(hecke0(coxeter_matrix(family, n)))
            return Outcome({"size": expected, "exact": True}, {"size": presented.monoid.size, "exact": presented.exact})
        checks.append(Check(f"H0({family}{n})-completion", "|H_0(CD)| = |W(CD)|", completed,
                            params={"diagram": f"{family}{n}"}, stretch=True))

    for n in range(4, 9):
        def bridge(n=n) -> Outcome:
            forward, backward = lee_onto_hecke(n), hecke_onto_lee(n)
            return Outcome({"lee_to_hecke": True, "hecke_to_lee": True, "onto_lee": True},
                           {"lee_to_hecke": forward.success, "hecke_to_lee": backward.success,
                            "onto_lee": backward.surjective})
        checks.append(Check(f"lee-bridge-n{n}", "var L_{n-1}^1 is in var H(I_n), which is in var L_n^1", bridge,
                            params={"n": n}))
        checks.append(Check(f"I2({n})-alternating-relation", "s1s2... (n) = s2s1... (n+1) = s1s2... (n+1) in H_0(I_n)",
                            lambda n=n: Outcome(True, dihedral_hecke_relation(n)), params={"n": n}))

    for presentation, expected in ((lee_L3, 6), (lee_L4, 8)):
        def lee_size(presentation=presentation, expected=expected) -> Outcome:
            presented, _ = present(presentation())
            return Outcome({"size": expected, "exact": True}, {"size": presented.reported_size, "exact": presented.exact})
        checks.append(Check(presentation.__name__.replace("lee_", ""), "L_3 has 6 elements and L_4 has 8", lee_size))
    return checks


def _unitary_bases() -> List[FiniteMonoid]:
    return [
        symmetric_group(3),
        family_monoid(FamilyKind.C, 3),
        family_monoid(FamilyKind.POI, 2),
        coxeter_group_model(coxeter_matrix("I2", 4)).group,
        semilattice(3),
        trivial_monoid(),
    ]


@register_suite("unitary", "Unitary power monoids")
def unitary_suite(ctx: SuiteContext) -> List[Check]:
    checks = []
    for base in _unitary_bases():
        def power(base=base) -> Outcome:
            monoid = unitary_power_monoid(base)
            return Outcome({"size": 2 ** (base.size - 1), "j_trivial": True},
                           {"size": monoid.size, "j_trivial": triviality(monoid).j_trivial})
        checks.append(Check(f"P1({base.name})", "P_1(M) has 2^(|M|-1) elements and is J-trivial", power,
                            params={"base": base.name, "order": base.size}))

    for family, n in (("A", 2), ("A", 3), ("I2", 4)):
        def generated(family=family, n=n) -> Outcome:
            matrix = coxeter_matrix(family, n)
            return Outcome(coxeter_group_model(matrix).group.size, hecke0_via_unitary(matrix).size)
        checks.append(Check(f"{family}{n}-unitary-hecke", "the subsets {1, s_i} generate a copy of H_0(CD) in P_1(W)",
                            generated, params={"diagram": f"{family}{n}"}))
    return checks


@register_suite("digraphs", "Digraph Catalan monoids and the digraphs Gamma_n")
def digraph_suite(ctx: SuiteContext) -> List[Check]:
    checks = []
    for n in range(1, int(ctx.get("max_gamma", 6)) + 1):
        def gamma(n=n) -> Outcome:
            graph = build_gamma_n(n)
            analysis = digraph_analysis(graph)
            return Outcome({"vertices": 2 * n + 1, "edges": 2 * n, "acyclic": True, "longest_path": n + 1},
                           {"vertices": graph.n, "edges": len(graph.edges), "acyclic": analysis.is_acyclic,
                            "longest_path": analysis.longest_path_vertices})
        checks.append(Check(f"Gamma{n}", "Gamma_n is acyclic with a directed path on n+1 vertices", gamma,
                            params={"n": n}))

    for n in range(1, int(ctx.get("max_gamma_monoid", 4)) + 1):
        def r_trivial(n=n) -> Outcome:
            monoid = catalan_of_digraph(build_gamma_n(n))
            return Outcome(True, triviality(monoid).r_trivial, detail=f"{monoid.size} elements")
        checks.append(Check(f"C(Gamma{n})-R-trivial", "the Catalan monoid of an acyclic digraph is R-trivial",
                            r_trivial, params={"n": n}))

    for m in range(2, 7):
        def path(m=m) -> Outcome:
            monoid = catalan_of_digraph(path_digraph(m))
            same = set(monoid.elements) == set(enumerate_family(FamilyKind.C, m))
            return Outcome({"size": CATALAN[m], "equals_C": True}, {"size": monoid.size, "equals_C": same})
        checks.append(Check(f"C(P{m})", "C_m is the Catalan monoid of the path P_m", path, params={"m": m}))

    def cycle() -> Outcome:
        analysis = digraph_analysis(Digraph.from_edges(2, [(1, 2), (2, 1)]))
        return Outcome(False, analysis.is_acyclic)
    checks.append(Check("two-cycle", "a 2-cycle is not acyclic", cycle))
    return checks
