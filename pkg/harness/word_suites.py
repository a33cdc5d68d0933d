"""Suites about identities: the J_m / U_m oracles, sparse-word constructions,
isoterm searches and the band identities."""

import random
from functools import partial
from typing import Callable, Hashable, List, Sequence, Set, Tuple

from harness.registry import Check, Outcome, SuiteContext, register_suite
from monoids.finite import (
    FiniteMonoid, direct_product, dual, rectangular_band, semilattice, trivial_monoid, two_element_semigroups,
)
from monoids.green import embed_rtrivial_in_Em, triviality
from monoids.identities import (
    band_identity_check, bounded_identity_theory, check_alphabet_chain, is_isoterm_bounded,
    oracle_theory, satisfies_identity, satisfies_identity_sampled, uxv_check,
)
from transformations.families import FamilyKind, family_monoid
from words.constructions import build_u_n_m, build_w_n, check_P1, check_P2, is_sparse, sparse_preimage, zimin
from words.core import Identity, Word, format_word, parse_word, power_word
from words.subwords import in_Jm, in_Um, jm_key, um_key

# (variables, max side length)
Universe = Tuple[int, int]

ORACLE_UNIVERSES: Tuple[Universe, ...] = ((2, 6), (3, 5))


def _universes(ctx: SuiteContext, defaults: Sequence[Universe]) -> Sequence[Universe]:
    if "vars" in ctx.params or "len" in ctx.params:
        return ((int(ctx.get("vars", 2)), int(ctx.get("len", 6))),)
    return defaults


def _first(identities: Set[Identity]) -> str:
    return str(min(identities, key=lambda i: (len(i.lhs) + len(i.rhs), i))) if identities else ""


def _theory_equality(kind: FamilyKind, m: int, universe: Universe,
                     key: Callable[[Word], Hashable]) -> Callable[[], Outcome]:
    def run() -> Outcome:
        var_count, max_len = universe
        theory = bounded_identity_theory(family_monoid(kind, m), var_count, max_len)
        oracle = oracle_theory(var_count, max_len, key)
        missing, extra = oracle - theory, theory - oracle
        detail = None
        if missing or extra:
            detail = f"first oracle-only: {_first(missing) or '-'}; first monoid-only: {_first(extra) or '-'}"
        return Outcome(len(oracle), len(theory), passed=not missing and not extra, detail=detail)
    return run


@register_suite("jm-oracle", "Bounded Id C_m equals the J_{m-1} fragment")
def jm_oracle_suite(ctx: SuiteContext) -> List[Check]:
    ms = [int(ctx.params["m"])] if "m" in ctx.params else [2, 3, 4]
    checks = []
    for m in ms:
        for universe in _universes(ctx, ORACLE_UNIVERSES):
            checks.append(Check(
                f"jm-C{m}-v{universe[0]}-len{universe[1]}", "Id C_m = J_{m-1}",
                _theory_equality(FamilyKind.C, m, universe, lambda w, k=m - 1: jm_key(w, k)),
                params={"m": m, "vars": universe[0], "len": universe[1]},
            ))
    return checks


@register_suite("um-oracle", "Bounded Id IC_m equals the U_{m-1} fragment")
def um_oracle_suite(ctx: SuiteContext) -> List[Check]:
    if "m" in ctx.params:
        plan = [(int(ctx.params["m"]), _universes(ctx, ORACLE_UNIVERSES))]
    else:
        plan = [(2, ORACLE_UNIVERSES), (3, ORACLE_UNIVERSES), (4, ((2, 6), (3, 4)))]
    checks = []
    for m, universes in plan:
        for universe in universes:
            checks.append(Check(
                f"um-IC{m}-v{universe[0]}-len{universe[1]}", "Id IC_m = U_{m-1}",
                _theory_equality(FamilyKind.IC, m, universe, lambda w, k=m - 1: um_key(w, k)),
                params={"m": m, "vars": universe[0], "len": universe[1]},
            ))
    return checks


def _swap_witness(k: int) -> Identity:
    """x^k y^k ~ y^k x^k."""
    x, y = power_word("x", k), power_word("y", k)
    return Identity(x + y, y + x)


@register_suite("inclusion", "J_{m+1} is strictly contained in U_m")
def inclusion_suite(ctx: SuiteContext) -> List[Check]:
    checks = []
    for universe in _universes(ctx, ORACLE_UNIVERSES):
        var_count, max_len = universe
        for m in range(0, 4):
            def contained(m=m, var_count=var_count, max_len=max_len) -> Outcome:
                jm = oracle_theory(var_count, max_len, lambda w: jm_key(w, m + 1))
                um = oracle_theory(var_count, max_len, lambda w: um_key(w, m))
                outside = jm - um
                return Outcome(0, len(outside), detail=_first(outside) or None)
            checks.append(Check(f"J{m + 1}-in-U{m}-v{var_count}-len{max_len}", "J_{m+1} is contained in U_m",
                                contained, params={"m": m, "vars": var_count, "len": max_len}))

        def j1_is_u0(var_count=var_count, max_len=max_len) -> Outcome:
            j1 = oracle_theory(var_count, max_len, lambda w: jm_key(w, 1))
            u0 = oracle_theory(var_count, max_len, lambda w: um_key(w, 0))
            return Outcome(len(u0), len(j1), passed=j1 == u0, detail=_first(j1 ^ u0) or None)
        checks.append(Check(f"J1-equals-U0-v{var_count}-len{max_len}", "J_1 = U_0", j1_is_u0,
                            params={"vars": var_count, "len": max_len}))

    for m in range(1, 5):
        def witness(m=m) -> Outcome:
            identity = _swap_witness(m + 1)
            actual = {"in_U": in_Um(identity, m), "in_J": in_Jm(identity, m + 1)}
            return Outcome({"in_U": True, "in_J": False}, actual, detail=str(identity))
        checks.append(Check(f"strictness-witness-m{m}", "x^{m+1}y^{m+1} ~ y^{m+1}x^{m+1} lies in U_m but not J_{m+1}",
                            witness, params={"m": m}))

    for m in (2, 3):
        def separates(m=m) -> Outcome:
            identity = _swap_witness(m)
            injective = family_monoid(FamilyKind.IC, m)
            catalan = family_monoid(FamilyKind.C, m + 1)
            ic, c = satisfies_identity(injective, identity), satisfies_identity(catalan, identity)
            actual = {f"IC{m}": ic.holds, f"C{m + 1}": c.holds}
            # counterexample only when IC_m refutes; the C-side refutation is expected
            return Outcome({f"IC{m}": True, f"C{m + 1}": False}, actual,
                           counterexample=ic.describe(injective) if not ic.holds else None,
                           detail=f"C{m + 1} separated by {c.describe(catalan)}" if not c.holds else None)
        checks.append(Check(f"IC{m}-vs-C{m + 1}", "x^m y^m ~ y^m x^m holds in IC_m and fails in C_{m+1}", separates,
                            params={"m": m}))
    return checks


def _absorbs_x_identity(u: Word) -> Identity:
    return Identity(u, u + ("x",))


@register_suite("sparse", "Sparse-word constructions and the identities u ~ ux")
def sparse_suite(ctx: SuiteContext) -> List[Check]:
    checks = []
    max_n, max_m = int(ctx.get("max_n", 5)), int(ctx.get("max_m", 4))
    for n in range(1, max_n + 1):
        def properties(n=n) -> Outcome:
            failing = [m for m in range(1, max_m + 1)
                       if not (check_P1(build_u_n_m(n, m).word) and check_P2(build_u_n_m(n, m).word, n))]
            return Outcome([], failing)
        checks.append(Check(f"u{n}-P1-P2", "u_n(m) has no repeated two-letter factor and n-distinct gaps",
                            properties, params={"n": n, "max_m": max_m}))

    for n in range(2, 6):
        def w_properties(n=n) -> Outcome:
            failing = [m for m in range(1, 5)
                       if not (check_P1(build_w_n(n, m).word) and check_P2(build_w_n(n, m).word, n))]
            return Outcome([], failing)
        checks.append(Check(f"w{n}-P1-P2", "w_n has no repeated two-letter factor and n-distinct gaps",
                            w_properties, params={"n": n, "m": "1..4"}))

    u3 = build_u_n_m(2, 3)
    for name, semigroup in two_element_semigroups().items():
        if not triviality(semigroup).r_trivial:
            continue

        def exhaustive(semigroup=semigroup) -> Outcome:
            result = satisfies_identity(semigroup, _absorbs_x_identity(u3.word))
            chain = check_alphabet_chain(u3.word, u3.blocks, ("x",))
            return Outcome({"holds": True, "chain": True}, {"holds": result.holds, "chain": chain},
                           counterexample=result.describe(semigroup),
                           detail=f"{result.substitutions} substitutions")
        checks.append(Check(f"u2(3)-in-{name}", "u_n(|S|+1) ~ u_n(|S|+1) x holds in R-trivial S",
                            exhaustive, params={"semigroup": name, "n": 2, "m": 3}))

    def sampled() -> Outcome:
        e3 = family_monoid(FamilyKind.E, 3)
        u = build_u_n_m(2, e3.size + 1)
        result = satisfies_identity_sampled(e3, _absorbs_x_identity(u.word), ctx.samples, ctx.seed_for("u2(7)-in-E3"))
        chain = check_alphabet_chain(u.word, u.blocks, ("x",))
        return Outcome({"r_trivial": True, "holds": True, "chain": True},
                       {"r_trivial": triviality(e3).r_trivial, "holds": result.holds, "chain": chain},
                       counterexample=result.describe(e3), detail=f"{result.substitutions} sampled substitutions")
    checks.append(Check("u2(7)-in-E3", "u_n(|S|+1) ~ u_n(|S|+1) x holds in R-trivial S", sampled,
                        params={"n": 2, "m": 7, "samples": ctx.samples}))

    def chains() -> Outcome:
        failing = [(n, m) for n in range(1, 5) for m in range(1, 6)
                   if not check_alphabet_chain(build_u_n_m(n, m).word, build_u_n_m(n, m).blocks, ("x",))]
        return Outcome([], failing)
    checks.append(Check("u-alphabet-chain", "the blocks of u_n(m) form a decreasing alphabet chain above x",
                        chains, params={"n": "1..4", "m": "1..5"}))

    draws = int(ctx.get("preimage_draws", 25))
    for n, m in ((3, 2), (4, 2), (5, 3)):
        def preimages(n=n, m=m) -> Outcome:
            rng = random.Random(ctx.seed_for(f"preimage-{n}-{m}"))
            target = build_u_n_m(n, m).word
            found = [u for u in (sparse_preimage(target, n, rng) for _ in range(draws)) if u is not None]
            violations = [format_word(u) for u in found if not is_sparse(u).is_sparse]
            return Outcome([], violations[:3], detail=f"{len(found)} preimages drawn")
        checks.append(Check(f"preimage-sparse-n{n}-m{m}", "a preimage of u_n(m) with fewer than n variables is sparse",
                            preimages, params={"n": n, "m": m, "draws": draws}))
    return checks


ISOTERM_WORDS = ("x t x", "x t1 x t2 x", "x y t y x", "x y t x y")


def _isoterm(monoid_factory: Callable[[], FiniteMonoid], u: Word, max_len: int,
             extra_fresh: int) -> Callable[[], Outcome]:
    def run() -> Outcome:
        verdict = is_isoterm_bounded(monoid_factory(), u, max_len, extra_fresh)
        witness = {"v": format_word(verdict.witness)} if verdict.witness is not None else None
        return Outcome(True, verdict.is_isoterm, bound=verdict.bound, counterexample=witness)
    return run


@register_suite("isoterms", "Bounded isoterm searches (verdicts hold only up to their bounds)")
def isoterm_suite(ctx: SuiteContext) -> List[Check]:
    ic4 = partial(family_monoid, FamilyKind.IC, 4)
    brandt = partial(family_monoid, FamilyKind.POI, 2)
    checks = []
    extra = int(ctx.get("extra_length", 1))
    for text in ISOTERM_WORDS:
        u = parse_word(text)
        checks.append(Check(f"IC4-{text.replace(' ', '')}", "every sparse word is an isoterm for IC_4",
                            _isoterm(ic4, u, len(u) + extra, 0), params={"u": text}))
    for n, max_len, fresh in ((2, 7, 0), (2, 5, 1), (3, 8, 0)):
        u = zimin(n)
        checks.append(Check(f"B21-zimin{n}-len{max_len}-fresh{fresh}", "Zimin words are isoterms for B_2^1",
                            _isoterm(brandt, u, max_len, fresh), params={"u": format_word(u)}))

    def trivial_non_isoterm() -> Outcome:
        verdict = is_isoterm_bounded(trivial_monoid(), ("x",), 2, 0)
        return Outcome(("x", "x"), verdict.witness, bound=verdict.bound)
    checks.append(Check("trivial-x", "x is not an isoterm for the trivial monoid", trivial_non_isoterm))
    return checks


def small_bands() -> List[FiniteMonoid]:
    """Bands with at most five elements used by the band suite."""
    bands = [semilattice(k) for k in range(2, 6)]
    bands += [rectangular_band(p, q) for p, q in ((1, 2), (2, 1), (1, 3), (3, 1), (2, 2))]
    bands += [s for name, s in two_element_semigroups().items() if name in ("left-zero", "right-zero", "semilattice")]
    return bands


BAND_IDENTITIES = (("x y", "x", "x y"), ("x y z", "x", "x y z"), ("x y", "y", "y x"))


@register_suite("bands", "uxv ~ uv in bands and the head-x-tail identity in R x L x B")
def band_suite(ctx: SuiteContext) -> List[Check]:
    checks = []
    for band in small_bands():
        def green_rees(band=band) -> Outcome:
            failing = []
            for u, x, v in BAND_IDENTITIES:
                result = band_identity_check(band, parse_word(u), x, parse_word(v))
                if not result.holds:
                    failing.append({"u": u, "x": x, "v": v, "counterexample": result.describe(band)})
            return Outcome([], failing)
        checks.append(Check(f"band-{band.name}", "every band satisfies uxv ~ uv for x in alf(u) = alf(v)",
                            green_rees, params={"band": band.name, "size": len(band.substitution_domain())}))

    def non_band() -> Outcome:
        c4 = family_monoid(FamilyKind.C, 4)
        result = uxv_check(c4, ("x", "y"), "x", ("x", "y"))
        return Outcome(False, result.holds, counterexample=result.describe(c4))
    checks.append(Check("non-band-C4", "xy x xy ~ xy xy fails in C_4", non_band))

    def factor_structure() -> Outcome:
        e3 = family_monoid(FamilyKind.E, 3)
        product = direct_product(e3, dual(e3), semilattice(2))
        embedding = embed_rtrivial_in_Em(e3)
        return Outcome(
            {"R_r": True, "L_l": True, "product_r": False, "product_l": False, "embedding": True},
            {"R_r": triviality(e3).r_trivial, "L_l": triviality(dual(e3)).l_trivial,
             "product_r": triviality(product).r_trivial, "product_l": triviality(product).l_trivial,
             "embedding": embedding.verified},
        )
    checks.append(Check("factor-structure", "E_3 is R-trivial, its dual L-trivial, their product neither",
                        factor_structure))

    n, m = int(ctx.get("n", 2)), int(ctx.get("m", 6))

    def w_identity() -> Outcome:
        e3 = family_monoid(FamilyKind.E, 3)
        product = direct_product(e3, dual(e3), semilattice(2))
        w = build_w_n(n, m)
        identity = Identity(w.head + ("x",) + w.tail, w.word)
        result = satisfies_identity_sampled(product, identity, ctx.samples, ctx.seed_for("w-identity"))
        return Outcome(True, result.holds, counterexample=result.describe(product),
                       detail=f"{result.substitutions} sampled substitutions, |w| = {len(w.word)}")
    checks.append(Check(f"w{n}-m{m}-in-RxLxB", "head x tail ~ head tail holds in R x L x B", w_identity,
                        params={"n": n, "m": m, "samples": ctx.samples}))

    def w_structure() -> Outcome:
        w = build_w_n(n, m)
        shift = w.split
        tail_blocks = tuple((a - shift, b - shift) for a, b in w.tail_blocks)
        return Outcome(
            {"head_chain": True, "tail_chain": True, "same_alphabet": True, "P1": True, "P2": True},
            {"head_chain": check_alphabet_chain(w.head, w.blocks, ("x",)),
             "tail_chain": check_alphabet_chain(w.tail, tail_blocks, ("x",), dual=True),
             "same_alphabet": set(w.head) == set(w.tail),
             "P1": check_P1(w.word), "P2": check_P2(w.word, n)},
        )
    checks.append(Check(f"w{n}-m{m}-structure", "head and tail carry dual alphabet chains over the same alphabet",
                        w_structure, params={"n": n, "m": m}))
    return checks
