"""Green's relations on a finite monoid: triviality tests, class partitions and the
right-regular embedding of an R-trivial monoid into E_m."""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from config import DIRECT_J_IDEAL_CAP
from monoids.finite import FiniteMonoid
from safety.validation import PreconditionError
from transformations.maps import PartialMap
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class TrivialityFlags:
    r_trivial: bool
    l_trivial: bool
    j_trivial: bool


@dataclass(frozen=True)
class StructureFlags:
    aperiodic: bool
    idempotents_commute: bool
    is_band: bool


@dataclass(frozen=True)
class RTrivialEmbedding:
    """Element ordering plus the image of each element as a total map on [|M|]."""
    order: Tuple[int, ...]  # order[k] = element placed at point k + 1
    maps: Tuple[PartialMap, ...]  # maps[a] represents element a
    injective: bool
    multiplicative: bool
    extensive: bool

    @property
    def verified(self) -> bool:
        return self.injective and self.multiplicative and self.extensive


def right_ideals(monoid: FiniteMonoid) -> np.ndarray:
    """Boolean matrix, row a marks the elements of aM."""
    n = monoid.size
    ideals = np.zeros((n, n), dtype=bool)
    ideals[np.arange(n)[:, None], monoid.table] = True
    return ideals


def left_ideals(monoid: FiniteMonoid) -> np.ndarray:
    """Boolean matrix, row a marks the elements of Ma."""
    n = monoid.size
    ideals = np.zeros((n, n), dtype=bool)
    ideals[np.arange(n)[None, :], monoid.table] = True
    return ideals


def _rows_distinct(matrix: np.ndarray) -> bool:
    packed = np.packbits(matrix, axis=1)
    return np.unique(packed, axis=0).shape[0] == matrix.shape[0]


def _row_classes(matrix: np.ndarray) -> List[Tuple[int, ...]]:
    packed = np.packbits(matrix, axis=1)
    groups: Dict[bytes, List[int]] = {}
    for a in range(matrix.shape[0]):
        groups.setdefault(packed[a].tobytes(), []).append(a)
    return sorted(tuple(group) for group in groups.values())


def two_sided_ideals(monoid: FiniteMonoid) -> np.ndarray:
    """Row a marks MaM, the union of cM over c in Ma."""
    left = left_ideals(monoid).astype(np.float32)
    right = right_ideals(monoid).astype(np.float32)
    return (left @ right) > 0


def triviality(monoid: FiniteMonoid) -> TrivialityFlags:
    """R-, L- and J-triviality by comparing principal ideals element by element.

    Above DIRECT_J_IDEAL_CAP elements the J-flag is derived from R and L, which
    coincides with the direct test for finite monoids.
    """
    r_trivial = _rows_distinct(right_ideals(monoid))
    l_trivial = _rows_distinct(left_ideals(monoid))
    if monoid.size <= DIRECT_J_IDEAL_CAP:
        j_trivial = _rows_distinct(two_sided_ideals(monoid))
        if j_trivial and not (r_trivial and l_trivial):
            logger.error(f"{monoid.name}: J-trivial but not R- and L-trivial; table is inconsistent")
    else:
        logger.info(f"{monoid.name}: {monoid.size} elements, deriving J-triviality from R and L")
        j_trivial = r_trivial and l_trivial
    return TrivialityFlags(r_trivial, l_trivial, j_trivial)


def idempotents(monoid: FiniteMonoid) -> np.ndarray:
    n = np.arange(monoid.size)
    return n[monoid.table[n, n] == n]


def structure_flags(monoid: FiniteMonoid) -> StructureFlags:
    n = monoid.size
    every = np.arange(n)
    # a^k stabilises in at most n steps; aperiodic iff it stabilises with period 1
    power = every.copy()
    for _ in range(n):
        power = monoid.table[power, every]
    aperiodic = bool((monoid.table[power, every] == power).all())
    ids = idempotents(monoid)
    block = monoid.table[np.ix_(ids, ids)]
    return StructureFlags(
        aperiodic=aperiodic,
        idempotents_commute=bool((block == block.T).all()),
        is_band=len(ids) == n,
    )


def green_classes(monoid: FiniteMonoid) -> Dict[str, List[Tuple[int, ...]]]:
    """R-, L- and J-class partitions, each class as a sorted tuple of element indices."""
    classes = {
        "R": _row_classes(right_ideals(monoid)),
        "L": _row_classes(left_ideals(monoid)),
    }
    if monoid.size <= DIRECT_J_IDEAL_CAP:
        classes["J"] = _row_classes(two_sided_ideals(monoid))
    else:
        classes["J"] = _join_partitions(monoid.size, classes["R"], classes["L"])
    return classes


def _join_partitions(n: int, *partitions: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Finest partition coarser than all given ones (R v L = D = J for finite monoids)."""
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for partition in partitions:
        for block in partition:
            for a in block[1:]:
                parent[find(a)] = find(block[0])
    groups: Dict[int, List[int]] = {}
    for a in range(n):
        groups.setdefault(find(a), []).append(a)
    return sorted(tuple(group) for group in groups.values())


def embed_rtrivial_in_Em(monoid: FiniteMonoid) -> RTrivialEmbedding:
    """Right-regular representation of an R-trivial monoid by total extensive maps.

    Elements are placed on [|M|] by decreasing size of their principal right ideal
    (identity first), a linear extension of the reverse R-order; element b acts by
    x -> xb.
    """
    if not triviality(monoid).r_trivial:
        raise PreconditionError(f"{monoid.name or 'monoid'} is not R-trivial")
    n = monoid.size
    ideal_sizes = right_ideals(monoid).sum(axis=1)
    order = tuple(sorted(range(n), key=lambda a: (-int(ideal_sizes[a]), a)))
    point = {element: k + 1 for k, element in enumerate(order)}
    maps = tuple(
        PartialMap(tuple(point[int(monoid.table[order[k], b])] for k in range(n)))
        for b in range(n)
    )
    injective = len(set(maps)) == n
    multiplicative = all(
        maps[int(monoid.table[a, b])] == maps[a].compose(maps[b])
        for a in range(n) for b in range(n)
    )
    extensive = all(alpha.properties().extensive for alpha in maps)
    return RTrivialEmbedding(order, maps, injective, multiplicative, extensive)
