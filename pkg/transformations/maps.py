"""Partial transformations of the chain [m] = {1, ..., m}, acting on the right."""

from dataclasses import dataclass
from typing import FrozenSet, Optional, Sequence, Tuple

from safety.validation import PreconditionError, require


@dataclass(frozen=True)
class MapProperties:
    total: bool
    injective: bool
    order_preserving: bool
    extensive: bool


@dataclass(frozen=True)
class PartialMap:
    """Partial self-map of [m]; ``image[i - 1]`` is i's image or None when i is outside the domain.

    Composition follows x(ab) = (xa)b: ``a.compose(b)`` applies ``a`` first.
    """
    image: Tuple[Optional[int], ...]

    def __post_init__(self):
        m = len(self.image)
        for value in self.image:
            if value is not None and not 1 <= value <= m:
                raise PreconditionError(f"image value {value} outside [1, {m}]")

    @property
    def m(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, m: int) -> "PartialMap":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def empty(cls, m: int) -> "PartialMap":
        return cls((None,) * m)

    @classmethod
    def from_dict(cls, m: int, assignment) -> "PartialMap":
        """Build from {point: value}; points not listed are undefined."""
        return cls(tuple(assignment.get(i) for i in range(1, m + 1)))

    def __call__(self, point: int) -> Optional[int]:
        return self.image[point - 1]

    def domain(self) -> FrozenSet[int]:
        return frozenset(i for i, value in enumerate(self.image, start=1) if value is not None)

    def compose(self, other: "PartialMap") -> "PartialMap":
        if self.m != other.m:
            raise PreconditionError(f"cannot compose maps on [{self.m}] and [{other.m}]")
        return PartialMap(tuple(None if value is None else other.image[value - 1] for value in self.image))

    __mul__ = compose

    def properties(self) -> MapProperties:
        defined = [(i, value) for i, value in enumerate(self.image, start=1) if value is not None]
        values = [value for _, value in defined]
        return MapProperties(
            total=len(defined) == self.m,
            injective=len(set(values)) == len(values),
            order_preserving=all(a <= b for a, b in zip(values, values[1:])),
            extensive=all(i <= value for i, value in defined),
        )

    def literal(self) -> str:
        """Map literal ``[a1,...,am]`` with ``-`` for undefined points."""
        return "[" + ",".join("-" if value is None else str(value) for value in self.image) + "]"

    def __str__(self) -> str:
        return self.literal()


def parse_map(text: str) -> PartialMap:
    """Parse a map literal ``[a1,...,am]``; ``-`` marks an undefined point."""
    body = text.strip()
    require(body.startswith("[") and body.endswith("]"), f"map literal must be bracketed: {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        return PartialMap(())
    values = []
    for token in inner.split(","):
        token = token.strip()
        if token == "-":
            values.append(None)
        elif token.isdigit():
            values.append(int(token))
        else:
            raise PreconditionError(f"bad map entry {token!r} in {text!r}")
    return PartialMap(tuple(values))


def tau(m: int, source: int, target: int) -> PartialMap:
    """Elementary total map sending ``source`` to ``target`` and fixing every other point."""
    require(1 <= source <= m and 1 <= target <= m, f"points must lie in [1, {m}]")
    require(source != target, "elementary maps need distinct endpoints")
    image = list(range(1, m + 1))
    image[source - 1] = target
    return PartialMap(tuple(image))


def compose_all(maps: Sequence[PartialMap], m: int) -> PartialMap:
    result = PartialMap.identity(m)
    for alpha in maps:
        result = result.compose(alpha)
    return result
