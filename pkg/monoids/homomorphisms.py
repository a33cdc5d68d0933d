"""Extending generator maps to homomorphisms from presented monoids."""

from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, List, Mapping, Optional, Sequence, Tuple

from monoids.finite import FiniteMonoid
from monoids.power import submonoid_generated
from safety.validation import PreconditionError
from utils.logger import get_logger
from words.core import Word

if TYPE_CHECKING:
    from presentations.catalog import Presentation

logger = get_logger(__name__)


@dataclass(frozen=True)
class HomomorphismResult:
    """Outcome of :func:`extend_homomorphism`; a violated relation is a value, not an error."""
    success: bool
    failed_relation: Optional[Tuple[Word, Word]] = None
    image: Optional[FiniteMonoid] = None
    inclusion: Tuple[int, ...] = ()  # image element i sits at target index inclusion[i]
    surjective: bool = False


def evaluate_generator_word(target: FiniteMonoid, gen_map: Mapping[str, int], word: Sequence[str]) -> int:
    """Product of the images of ``word``'s generators; the empty word gives the identity."""
    result = target.identity
    for symbol in word:
        if symbol not in gen_map:
            raise PreconditionError(f"generator {symbol!r} has no image")
        result = target.multiply(result, gen_map[symbol])
    return result


def extend_homomorphism(source: "Presentation", target: FiniteMonoid,
                        gen_map: Mapping[str, int]) -> HomomorphismResult:
    """Check every defining relation of ``source`` under ``gen_map``.

    Args:
        source: Presentation whose generators are mapped
        target: Monoid receiving the generator images
        gen_map: Generator name to target element index, total on the source generators

    Returns:
        HomomorphismResult with the first violated relation, or with the image submonoid
    """
    missing = [g for g in source.generators if g not in gen_map]
    if missing:
        raise PreconditionError(f"generators {missing} have no image")
    for lhs, rhs in source.relations:
        if evaluate_generator_word(target, gen_map, lhs) != evaluate_generator_word(target, gen_map, rhs):
            logger.debug(f"Relation {' '.join(lhs)} = {' '.join(rhs)} fails in {target.name}")
            return HomomorphismResult(False, failed_relation=(tuple(lhs), tuple(rhs)))
    images = [gen_map[g] for g in source.generators]
    image, inclusion = submonoid_generated(target, images)
    return HomomorphismResult(True, image=image, inclusion=inclusion, surjective=image.size == target.size)


def generator_correspondence(source: FiniteMonoid, target: FiniteMonoid,
                             gen_map: Mapping[int, int]) -> Optional[Tuple[int, ...]]:
    """Element map extending ``gen_map`` along the right Cayley graph of ``source``.

    Returns the map when it is a well-defined homomorphism (f(ag) = f(a)f(g) on every
    element and generator), None otherwise. ``source`` must be generated by the keys.
    """
    image: List[Optional[int]] = [None] * source.size
    image[source.identity] = target.identity
    queue = deque([source.identity])
    while queue:
        a = queue.popleft()
        for g, h in gen_map.items():
            b = source.multiply(a, g)
            expected = target.multiply(image[a], h)
            if image[b] is None:
                image[b] = expected
                queue.append(b)
            elif image[b] != expected:
                return None
    if any(value is None for value in image):
        raise PreconditionError(f"{source.name or 'source'} is not generated by the mapped elements")
    return tuple(image)


def is_isomorphism(source: FiniteMonoid, target: FiniteMonoid, gen_map: Mapping[int, int]) -> bool:
    mapping = generator_correspondence(source, target, gen_map)
    return mapping is not None and source.size == target.size and len(set(mapping)) == target.size
