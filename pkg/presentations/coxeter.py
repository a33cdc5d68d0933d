"""Coxeter matrices, concrete permutation models of their groups, and 0-Hecke monoids
realised inside unitary power monoids."""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from monoids.finite import FiniteMonoid, closure_from_generators, compose_permutations, evaluate_word
from monoids.power import unitary_submonoid
from safety.validation import PreconditionError, require
from utils.logger import get_logger

logger = get_logger(__name__)

Permutation = Tuple[int, ...]


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix with ones on the diagonal; ``None`` stands for infinity."""
    entries: Tuple[Tuple[Optional[int], ...], ...]
    name: str = ""

    def __post_init__(self):
        n = len(self.entries)
        require(n >= 1, "a Coxeter matrix needs at least one generator")
        for i, row in enumerate(self.entries):
            require(len(row) == n, "Coxeter matrix must be square")
            require(row[i] == 1, f"diagonal entry m_{i + 1}{i + 1} must be 1")
            for j, value in enumerate(row):
                require(value == self.entries[j][i], f"m_{i + 1}{j + 1} and m_{j + 1}{i + 1} differ")
                if i != j:
                    require(value is None or value >= 2, f"off-diagonal m_{i + 1}{j + 1} must be >= 2 or inf")

    @property
    def n(self) -> int:
        return len(self.entries)

    def m(self, i: int, j: int) -> Optional[int]:
        """Entry m_ij for 1-based generator indices."""
        return self.entries[i - 1][j - 1]

    def edges(self) -> List[Tuple[int, int]]:
        """Diagram edges (i < j with m_ij >= 3 or infinite)."""
        return [(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)
                if self.m(i, j) is None or self.m(i, j) >= 3]

    def restrict(self, vertices: Tuple[int, ...]) -> "CoxeterMatrix":
        entries = tuple(tuple(self.m(i, j) for j in vertices) for i in vertices)
        return CoxeterMatrix(entries, f"{self.name}|{','.join(map(str, vertices))}")


@dataclass(frozen=True)
class CoxeterModel:
    """Group W(CD) realised by permutations; generator k acts as ``generators[k]``."""
    matrix: CoxeterMatrix
    generators: Tuple[Permutation, ...]
    group: FiniteMonoid
    generator_indices: Tuple[int, ...]
    relations_hold: bool


def coxeter_matrix(family: str, n: int) -> CoxeterMatrix:
    """Catalogue matrices: A_n, B_3, I2(n), H_3 and D_4."""
    key = family.upper()
    if key == "A":
        require(n >= 1, "A_n needs n >= 1")
        entries = [[1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(n)] for i in range(n)]
        return CoxeterMatrix(tuple(map(tuple, entries)), f"A{n}")
    if key == "B":
        require(n == 3, "only B_3 is catalogued")
        return CoxeterMatrix(((1, 4, 2), (4, 1, 3), (2, 3, 1)), "B3")
    if key == "I2":
        require(n >= 2, "I2(n) needs n >= 2")
        return CoxeterMatrix(((1, n), (n, 1)), f"I2({n})")
    if key == "H":
        require(n == 3, "only H_3 is catalogued")
        return CoxeterMatrix(((1, 5, 2), (5, 1, 3), (2, 3, 1)), "H3")
    if key == "D":
        require(n == 4, "only D_4 is catalogued")
        entries = ((1, 3, 2, 2), (3, 1, 3, 3), (2, 3, 1, 2), (2, 3, 2, 1))
        return CoxeterMatrix(entries, "D4")
    raise PreconditionError(f"unknown Coxeter family {family!r}")


def _transposition(size: int, a: int, b: int) -> Permutation:
    image = list(range(size))
    image[a], image[b] = image[b], image[a]
    return tuple(image)


def _model_generators(matrix: CoxeterMatrix) -> Tuple[Permutation, ...]:
    n = matrix.n
    if matrix.entries == coxeter_matrix("A", n).entries:
        return tuple(_transposition(n + 1, i, i + 1) for i in range(n))
    if n == 2 and matrix.m(1, 2) is not None:
        k = matrix.m(1, 2)
        if k == 2:
            # A1 x A1: reflections of a square across its two axes
            return ((1, 0, 2, 3), (0, 1, 3, 2))
        return (tuple((-i) % k for i in range(k)), tuple((1 - i) % k for i in range(k)))
    if matrix.entries == coxeter_matrix("B", 3).entries:
        # points 0..2 are +1..+3, points 3..5 are -1..-3
        flip_first = (3, 1, 2, 0, 4, 5)
        return (flip_first, (1, 0, 2, 4, 3, 5), (0, 2, 1, 3, 5, 4))
    raise PreconditionError(f"no permutation model for diagram {matrix.name or matrix.entries}")


def alternating(first: str, second: str, length: int) -> Tuple[str, ...]:
    """first second first ... with ``length`` factors."""
    return tuple(first if k % 2 == 0 else second for k in range(length))


def coxeter_group_model(matrix: CoxeterMatrix) -> CoxeterModel:
    """Permutation model of W(CD) for A_n, I2(n) and B_3.

    ``relations_hold`` records that every s_i s_j has order exactly m_ij in the model.
    """
    generators = _model_generators(matrix)
    identity = tuple(range(len(generators[0])))
    group = closure_from_generators(identity, generators, compose_permutations, name=f"W({matrix.name})")
    indices = tuple(group.index_of(g) for g in generators)
    assignment = {f"s{i + 1}": indices[i] for i in range(matrix.n)}
    holds = True
    for i in range(1, matrix.n + 1):
        for j in range(i, matrix.n + 1):
            order = matrix.m(i, j)
            if order is None:
                continue
            pair = (f"s{i}", f"s{j}")
            powers = [evaluate_word(group, assignment, pair * k) for k in range(1, order + 1)]
            trivial_generator = i == j and indices[i - 1] == group.identity
            if powers[-1] != group.identity or group.identity in powers[:-1] or trivial_generator:
                logger.error(f"s{i} s{j} does not have order {order} in the model of {matrix.name}")
                holds = False
    logger.info(f"W({matrix.name}): {group.size} elements")
    return CoxeterModel(matrix, generators, group, indices, holds)


def hecke0_via_unitary(matrix: CoxeterMatrix) -> FiniteMonoid:
    """Submonoid of P1(W) generated by the subsets {1, s_i}."""
    model = coxeter_group_model(matrix)
    group = model.group
    subsets = [frozenset((group.identity, s)) for s in model.generator_indices]
    monoid = unitary_submonoid(group, subsets, name=f"H0({matrix.name})")
    logger.info(f"H0({matrix.name}) via unitary subsets: {monoid.size} elements")
    return monoid


def simple_paths(matrix: CoxeterMatrix) -> List[Tuple[int, ...]]:
    """Induced simple paths of the diagram, each listed once (first vertex < last)."""
    adjacent = {v: set() for v in range(1, matrix.n + 1)}
    for i, j in matrix.edges():
        adjacent[i].add(j)
        adjacent[j].add(i)
    found = []

    def extend(path: List[int]):
        if len(path) == 1 or path[0] < path[-1]:
            found.append(tuple(path))
        for v in sorted(adjacent[path[-1]]):
            # induced: v may only touch the current end of the path
            if v in path or any(v in adjacent[u] for u in path[:-1]):
                continue
            path.append(v)
            extend(path)
            path.pop()

    for start in range(1, matrix.n + 1):
        extend([start])
    return sorted(found, key=lambda p: (len(p), p))
