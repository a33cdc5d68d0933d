"""Monoid and semigroup presentations, and the named catalogue."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from presentations.coxeter import CoxeterMatrix, alternating, coxeter_matrix
from safety.validation import PreconditionError, require, require_variables
from words.core import Word

Relation = Tuple[Word, Word]


@dataclass(frozen=True)
class Presentation:
    """Generators plus defining relations; ``semigroup`` marks presentations without an identity."""
    generators: Tuple[str, ...]
    relations: Tuple[Relation, ...]
    semigroup: bool = False
    name: str = ""

    def __post_init__(self):
        require(len(set(self.generators)) == len(self.generators), "generator names must be distinct")
        require_variables(self.generators)
        known = set(self.generators)
        for lhs, rhs in self.relations:
            stray = (set(lhs) | set(rhs)) - known
            require(not stray, f"relation uses symbols {sorted(stray)} outside the generators")
            if self.semigroup:
                require(len(lhs) > 0 and len(rhs) > 0, "semigroup relations need nonempty sides")


def _idempotents(generators: List[str]) -> List[Relation]:
    return [((g, g), (g,)) for g in generators]


def catalan(m: int) -> Presentation:
    """C_m on a_1..a_{m-1}: idempotents, far commutation, a_i a_{i+1} a_i = a_{i+1} a_i a_{i+1} = a_{i+1} a_i."""
    require(m >= 2, "catalan presentation needs m >= 2")
    gens = [f"a{i}" for i in range(1, m)]
    relations = _idempotents(gens)
    for i in range(1, m):
        for k in range(i + 2, m):
            relations.append(((f"a{i}", f"a{k}"), (f"a{k}", f"a{i}")))
    for i in range(1, m - 1):
        a, b = f"a{i}", f"a{i + 1}"
        relations.append(((a, b, a), (b, a, b)))
        relations.append(((b, a, b), (b, a)))
    return Presentation(tuple(gens), tuple(relations), name=f"catalan({m})")


def free_tree(n: int) -> Presentation:
    """FT_n: idempotents and a_k a_i a_k = a_k a_i for i < k."""
    require(n >= 1, "free_tree needs n >= 1")
    gens = [f"a{i}" for i in range(1, n + 1)]
    relations = _idempotents(gens)
    for k in range(1, n + 1):
        for i in range(1, k):
            relations.append(((f"a{k}", f"a{i}", f"a{k}"), (f"a{k}", f"a{i}")))
    return Presentation(tuple(gens), tuple(relations), name=f"free_tree({n})")


def hecke0(matrix: CoxeterMatrix) -> Presentation:
    """H0(CD): s_i^2 = s_i plus the braid relations for every finite m_ij."""
    gens = [f"s{i}" for i in range(1, matrix.n + 1)]
    relations = _idempotents(gens)
    for i in range(1, matrix.n + 1):
        for j in range(i + 1, matrix.n + 1):
            order = matrix.m(i, j)
            if order is not None:
                relations.append((alternating(f"s{i}", f"s{j}", order), alternating(f"s{j}", f"s{i}", order)))
    return Presentation(tuple(gens), tuple(relations), name=f"hecke0({matrix.name})")


def lee_monoid(n: int) -> Presentation:
    """L_n^1: e, f idempotent and efe... (n) = fefe... (n+1) = efef... (n+1)."""
    require(n >= 3, "lee_monoid needs n >= 3")
    relations = _idempotents(["e", "f"])
    relations.append((alternating("e", "f", n), alternating("f", "e", n + 1)))
    relations.append((alternating("f", "e", n + 1), alternating("e", "f", n + 1)))
    return Presentation(("e", "f"), tuple(relations), name=f"lee_monoid({n})")


def lee_L3() -> Presentation:
    """Semigroup <e, f | e^2 = e, f^2 = f, efe = (ef)^2 = (fe)^2>."""
    relations = _idempotents(["e", "f"]) + [
        (("e", "f", "e"), ("e", "f", "e", "f")),
        (("e", "f", "e", "f"), ("f", "e", "f", "e")),
    ]
    return Presentation(("e", "f"), tuple(relations), semigroup=True, name="L3")


def lee_L4() -> Presentation:
    """Semigroup <e, f | e^2 = e, f^2 = f, (ef)^2 = (ef)^2 e = (fe)^2 f>."""
    relations = _idempotents(["e", "f"]) + [
        (("e", "f", "e", "f"), ("e", "f", "e", "f", "e")),
        (("e", "f", "e", "f", "e"), ("f", "e", "f", "e", "f")),
    ]
    return Presentation(("e", "f"), tuple(relations), semigroup=True, name="L4")


def named_presentation(kind: str, params: Optional[Dict[str, Any]] = None) -> Presentation:
    """Look up a catalogued presentation.

    Args:
        kind: One of catalan, free_tree, hecke0, lee_monoid, lee_L3, lee_L4
        params: ``m`` for catalan, ``n`` for free_tree and lee_monoid; for hecke0 either
            ``matrix`` (a CoxeterMatrix) or ``family`` and ``n``

    Returns:
        The Presentation with relations exactly as catalogued
    """
    params = params or {}
    try:
        if kind == "catalan":
            return catalan(int(params["m"]))
        if kind == "free_tree":
            return free_tree(int(params["n"]))
        if kind == "hecke0":
            matrix = params.get("matrix") or coxeter_matrix(str(params["family"]), int(params["n"]))
            return hecke0(matrix)
        if kind == "lee_monoid":
            return lee_monoid(int(params["n"]))
    except KeyError as e:
        raise PreconditionError(f"presentation {kind!r} needs parameter {e.args[0]!r}")
    if kind == "lee_L3":
        return lee_L3()
    if kind == "lee_L4":
        return lee_L4()
    raise PreconditionError(f"unknown presentation kind {kind!r}")


PRESENTATION_KINDS = ("catalan", "free_tree", "hecke0", "lee_monoid", "lee_L3", "lee_L4")
