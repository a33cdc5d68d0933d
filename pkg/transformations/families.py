"""Named families of partial transformation monoids on [m]."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional

from config import FAMILY_CAP
from monoids.finite import FiniteMonoid, closure_from_generators
from safety.limits import ensure_within
from safety.validation import PreconditionError, require
from transformations.maps import PartialMap, tau
from utils.logger import get_logger

logger = get_logger(__name__)


class FamilyKind(Enum):
    """Tags for the transformation families."""
    E = "E"
    C = "C"
    IC = "IC"
    PE = "PE"
    PC = "PC"
    IE = "IE"
    POI = "POI"
    OPFixTop = "OPFixTop"


@dataclass(frozen=True)
class FamilyRule:
    partial: bool
    injective: bool = False
    order_preserving: bool = False
    extensive: bool = False
    fixes_top: bool = False


FAMILY_RULES: Dict[FamilyKind, FamilyRule] = {
    FamilyKind.E: FamilyRule(partial=False, extensive=True),
    FamilyKind.C: FamilyRule(partial=False, extensive=True, order_preserving=True),
    FamilyKind.IC: FamilyRule(partial=True, injective=True, extensive=True, order_preserving=True),
    FamilyKind.PE: FamilyRule(partial=True, extensive=True),
    FamilyKind.PC: FamilyRule(partial=True, extensive=True, order_preserving=True),
    FamilyKind.IE: FamilyRule(partial=True, injective=True, extensive=True),
    FamilyKind.POI: FamilyRule(partial=True, injective=True, order_preserving=True),
    FamilyKind.OPFixTop: FamilyRule(partial=False, order_preserving=True, fixes_top=True),
}


def parse_family(name: str) -> FamilyKind:
    for kind in FamilyKind:
        if kind.value.lower() == name.lower():
            return kind
    raise PreconditionError(f"unknown family {name!r}; expected one of {[k.value for k in FamilyKind]}")


def is_member(kind: FamilyKind, alpha: PartialMap) -> bool:
    rule = FAMILY_RULES[kind]
    flags = alpha.properties()
    return ((rule.partial or flags.total)
            and (not rule.injective or flags.injective)
            and (not rule.order_preserving or flags.order_preserving)
            and (not rule.extensive or flags.extensive)
            and (not rule.fixes_top or alpha(alpha.m) == alpha.m))


def _candidates(rule: FamilyRule, m: int, point: int) -> List[Optional[int]]:
    if rule.fixes_top and point == m:
        return [m]
    values: List[Optional[int]] = [None] if rule.partial else []
    values.extend(range(point if rule.extensive else 1, m + 1))
    return values


def _search(rule: FamilyRule, m: int) -> Iterator[PartialMap]:
    """Depth-first walk over images point by point, pruning on injectivity and monotonicity."""
    choices = [_candidates(rule, m, point) for point in range(1, m + 1)]
    image: List[Optional[int]] = []
    used = set()

    def walk(point: int, last: int) -> Iterator[PartialMap]:
        if point > m:
            yield PartialMap(tuple(image))
            return
        for value in choices[point - 1]:
            if value is not None:
                if rule.injective and value in used:
                    continue
                if rule.order_preserving and value < last:
                    continue
            image.append(value)
            if value is not None:
                used.add(value)
            yield from walk(point + 1, last if value is None else value)
            image.pop()
            if value is not None:
                used.discard(value)

    yield from walk(1, 1)


def enumerate_family(kind: FamilyKind, m: int) -> List[PartialMap]:
    """All maps of the family on [m].

    Up to FAMILY_CAP the candidates are filtered exhaustively; above it only the
    Catalan family is available, generated by closure from its elementary maps.

    Args:
        kind: Family tag
        m: Size of the chain

    Returns:
        The family's maps, each exactly once
    """
    require(m >= 1, "families need m >= 1")
    if m > FAMILY_CAP:
        if kind is FamilyKind.C:
            logger.info(f"C_{m} above the filter cap, generating by closure")
            return list(closure_from_generators(
                PartialMap.identity(m), catalan_generators(m), PartialMap.compose, name=f"C{m}"
            ).elements)
        ensure_within(f"exhaustive filter for {kind.value}_m", m, FAMILY_CAP)
    maps = list(_search(FAMILY_RULES[kind], m))
    logger.debug(f"Enumerated {kind.value}_{m}: {len(maps)} maps")
    return maps


def catalan_generators(m: int) -> List[PartialMap]:
    """Generators a_1..a_{m-1} of C_m satisfying its Catalan presentation.

    With maps acting on the right, a_i is the elementary map tau(m-i, m-i+1).
    """
    require(m >= 1, "catalan_generators needs m >= 1")
    return [tau(m, m - i, m - i + 1) for i in range(1, m)]


def extensive_generators(m: int) -> List[PartialMap]:
    """The elementary maps i -> j (i < j); they generate E_m."""
    return [tau(m, i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]


def family_monoid(kind: FamilyKind, m: int, cap: Optional[int] = None) -> FiniteMonoid:
    """The family as a FiniteMonoid, indexed in closure discovery order (identity first)."""
    elements = enumerate_family(kind, m)
    identity = PartialMap.identity(m)
    generators = catalan_generators(m) if kind is FamilyKind.C else elements
    monoid = closure_from_generators(identity, generators, PartialMap.compose, label=PartialMap.literal,
                                     cap=cap, name=f"{kind.value}{m}")
    if monoid.size != len(elements):
        raise RuntimeError(f"closure of {kind.value}_{m} has {monoid.size} elements, enumeration {len(elements)}")
    return monoid


def catalan_number(m: int) -> int:
    result = 1
    for k in range(m):
        result = result * 2 * (2 * k + 1) // (k + 2)
    return result
