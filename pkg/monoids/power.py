"""Power monoids of unitary subsets and generated submonoids."""

from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from config import BITSET_CAP, closure_size_cap
from monoids.finite import FiniteMonoid, closure_from_generators
from safety.limits import ensure_within
from safety.validation import require
from utils.logger import get_logger

logger = get_logger(__name__)


def subset_code(elements: Iterable[int]) -> int:
    code = 0
    for a in elements:
        code |= 1 << int(a)
    return code


def code_members(code: int) -> List[int]:
    members = []
    index = 0
    while code:
        if code & 1:
            members.append(index)
        code >>= 1
        index += 1
    return members


def subset_product(monoid: FiniteMonoid, left: int, right: int) -> int:
    """Setwise product AB = {ab | a in A, b in B} on bitset codes."""
    right_members = code_members(right)
    result = 0
    for a in code_members(left):
        row = monoid.table[a]
        for b in right_members:
            result |= 1 << int(row[b])
    return result


def _subset_label(monoid: FiniteMonoid, code: int) -> str:
    return "{" + ",".join(monoid.labels[a] for a in code_members(code)) + "}"


def unitary_power_monoid(monoid: FiniteMonoid) -> FiniteMonoid:
    """P1(M): all subsets containing the identity, under setwise product.

    Subsets are uint64 bitsets; {1} gets index 0 and the rest follow by code.
    """
    n = monoid.size
    ensure_within("unitary power base size", n, BITSET_CAP)
    count = 1 << (n - 1)
    ensure_within("unitary power monoid size", count, closure_size_cap())
    others = [a for a in range(n) if a != monoid.identity]

    free = np.arange(count, dtype=np.uint64)
    codes = np.full(count, np.uint64(1) << np.uint64(monoid.identity), dtype=np.uint64)
    for bit, a in enumerate(others):
        codes |= ((free >> np.uint64(bit)) & np.uint64(1)) << np.uint64(a)
    codes = np.sort(codes)  # {1} is the smallest code
    members = ((codes[:, None] >> np.arange(n, dtype=np.uint64)[None, :]) & np.uint64(1)).astype(bool)

    # image[a, s] = code of a * subset s
    image = np.empty((n, count), dtype=np.uint64)
    for a in range(n):
        weights = np.uint64(1) << monoid.table[a].astype(np.uint64)
        image[a] = np.bitwise_or.reduce(np.where(members, weights[None, :], np.uint64(0)), axis=1)

    product_codes = np.empty((count, count), dtype=np.uint64)
    for s in range(count):
        product_codes[s] = np.bitwise_or.reduce(image[members[s]], axis=0)
    table = np.searchsorted(codes, product_codes).astype(np.int32)
    table.setflags(write=False)
    labels = tuple(_subset_label(monoid, int(c)) for c in codes)
    logger.info(f"P1({monoid.name or 'M'}): {count} unitary subsets")
    return FiniteMonoid(
        table=table,
        identity=0,
        generators=tuple(range(1, count)),
        labels=labels,
        elements=tuple(frozenset(code_members(int(c))) for c in codes),
        name=f"P1({monoid.name or 'M'})",
    )


def submonoid_generated(monoid: FiniteMonoid, subset: Sequence[int],
                        cap: Optional[int] = None) -> Tuple[FiniteMonoid, Tuple[int, ...]]:
    """Submonoid generated by ``subset`` together with its inclusion into ``monoid``.

    Returns:
        (submonoid, inclusion) where inclusion[i] is the index in ``monoid`` of element i
    """
    for a in subset:
        require(0 <= a < monoid.size, f"{a} is not an element index")
    sub = closure_from_generators(
        monoid.identity, [int(a) for a in subset], monoid.multiply,
        label=lambda a: monoid.labels[a], cap=cap, name=f"<{len(subset)} gens> in {monoid.name or 'M'}",
    )
    return sub, tuple(int(a) for a in sub.elements)


def unitary_submonoid(monoid: FiniteMonoid, generators: Sequence[FrozenSet[int]],
                      cap: Optional[int] = None, name: str = "") -> FiniteMonoid:
    """Submonoid of P1(M) generated by unitary subsets, without materialising P1(M).

    Elements are Python-int bitsets, so M is not bounded by the bitset width.
    """
    identity = 1 << monoid.identity
    codes = []
    for subset in generators:
        require(monoid.identity in subset, "generators of P1(M) must contain the identity")
        codes.append(subset_code(subset))
    return closure_from_generators(
        identity, codes, lambda a, b: subset_product(monoid, a, b),
        label=lambda c: _subset_label(monoid, c), cap=cap, name=name or f"unitary <gens> in {monoid.name}",
    )
