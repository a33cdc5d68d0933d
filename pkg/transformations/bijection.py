"""The bar/hat bijection between partial injections of [m] and top-fixing maps of [m+1]."""

from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Tuple

from safety.validation import PreconditionError, require
from transformations.families import FamilyKind, enumerate_family
from transformations.maps import PartialMap


@dataclass(frozen=True)
class Pairing:
    """A family of [m] matched against its image family on [m+1] under bar."""
    source: FamilyKind
    target: FamilyKind
    m: int
    pairs: Tuple[Tuple[PartialMap, PartialMap], ...]  # (alpha, bar(alpha)), ordered by target
    is_bijection: bool


def bar_map(alpha: PartialMap) -> PartialMap:
    """Total map on [m+1]: k goes to l.alpha for the least l >= k in dom alpha, else to m+1."""
    m = alpha.m
    image = [m + 1] * (m + 1)
    for k in range(m, 0, -1):
        value = alpha(k)
        image[k - 1] = value if value is not None else image[k]
    return PartialMap(tuple(image))


def hat_map(beta: PartialMap) -> PartialMap:
    """Restriction of beta to the points k with k.beta != m+1 that are maximal in their fiber."""
    top = beta.m
    require(top >= 1, "hat_map needs a map on a nonempty chain")
    if not beta.properties().total:
        raise PreconditionError("hat_map needs a total map")
    if beta(top) != top:
        raise PreconditionError(f"hat_map needs a map fixing {top}")
    fiber_max = {}
    for k in range(1, top + 1):
        fiber_max[beta(k)] = k
    image: List[Optional[int]] = [None] * (top - 1)
    for k in range(1, top):
        value = beta(k)
        if value != top and fiber_max[value] == k:
            image[k - 1] = value
    return PartialMap(tuple(image))


def appendix_pairing(m: int, source: FamilyKind = FamilyKind.IC) -> Pairing:
    """Pair every map of IC_m (or POI_m) with its bar image in C_{m+1} (or OPFixTop_{m+1})."""
    targets = {FamilyKind.IC: FamilyKind.C, FamilyKind.POI: FamilyKind.OPFixTop}
    require(source in targets, f"no appendix pairing for {source.value}")
    target = targets[source]
    sources = enumerate_family(source, m)
    images = enumerate_family(target, m + 1)
    pairs = sorted(((alpha, bar_map(alpha)) for alpha in sources), key=lambda pair: pair[1].image)
    bars = {beta for _, beta in pairs}
    is_bijection = (len(bars) == len(sources) == len(images) and bars == set(images)
                    and all(hat_map(beta) == alpha for alpha, beta in pairs))
    return Pairing(source, target, m, tuple(pairs), is_bijection)


def non_homomorphism_witness(m: int) -> Optional[Tuple[PartialMap, PartialMap]]:
    """First pair (alpha, beta) of IC_m with bar(alpha beta) != bar(alpha) bar(beta), if any."""
    maps = enumerate_family(FamilyKind.IC, m)
    for alpha, beta in product(maps, repeat=2):
        if bar_map(alpha.compose(beta)) != bar_map(alpha).compose(bar_map(beta)):
            return alpha, beta
    return None
