"""Finite monoids given by a full multiplication table."""

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from config import ASSOCIATIVITY_CHECK_CAP, closure_size_cap
from safety.limits import ensure_within
from safety.validation import PreconditionError, require
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    """Element list + product table + identity index + generator indices.

    ``table[a, b]`` is the index of the product ab. When the monoid was built from
    concrete objects (maps, subsets, normal forms) they are kept in ``elements``.
    ``semigroup_elements`` lists the elements of the original semigroup when an
    identity has been adjoined externally.
    """
    table: np.ndarray
    identity: int
    generators: Tuple[int, ...]
    labels: Tuple[str, ...]
    elements: Optional[Tuple[Any, ...]] = None
    semigroup_elements: Optional[Tuple[int, ...]] = None
    name: str = ""
    _index: Dict[Hashable, int] = field(default=None, repr=False, compare=False)

    @property
    def size(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.size

    def multiply(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def index_of(self, element: Hashable) -> int:
        """Index of a concrete element (only for monoids built from concrete carriers)."""
        if self.elements is None:
            raise PreconditionError(f"monoid {self.name or '<anonymous>'} has no concrete carrier")
        if self._index is None:
            object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})
        if element not in self._index:
            raise PreconditionError(f"{element!r} is not an element of {self.name or 'the monoid'}")
        return self._index[element]

    def substitution_domain(self) -> Tuple[int, ...]:
        """Elements a variable may take: the semigroup part when an identity was adjoined."""
        if self.semigroup_elements is not None:
            return self.semigroup_elements
        return tuple(range(self.size))

    def same_table(self, other: "FiniteMonoid") -> bool:
        return self.identity == other.identity and np.array_equal(self.table, other.table)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]], identity: Optional[int] = None,
                   generators: Optional[Sequence[int]] = None,
                   labels: Optional[Sequence[str]] = None, name: str = "") -> "FiniteMonoid":
        """Build from a hand-entered table, checking closure, identity and associativity."""
        t = np.asarray(table, dtype=np.int32)
        require(t.ndim == 2 and t.shape[0] == t.shape[1] and t.shape[0] > 0, "table must be a nonempty square")
        n = t.shape[0]
        require(bool(((t >= 0) & (t < n)).all()), "table entries must be element indices")
        if identity is None:
            identity = find_identity(t)
            require(identity is not None, "table has no identity element")
        rn = np.arange(n)
        require(bool((t[identity, :] == rn).all() and (t[:, identity] == rn).all()),
                f"element {identity} is not a two-sided identity")
        if n <= ASSOCIATIVITY_CHECK_CAP:
            require(bool(np.array_equal(t[t], t[:, t])), "table is not associative")
        else:
            logger.warning(f"Skipping associativity check for {n}-element hand-entered table")
        t.setflags(write=False)
        return cls(
            table=t,
            identity=int(identity),
            generators=tuple(generators) if generators is not None else tuple(range(n)),
            labels=tuple(labels) if labels is not None else tuple(str(i) for i in range(n)),
            name=name,
        )

    @classmethod
    def from_semigroup_table(cls, table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None,
                             name: str = "") -> "FiniteMonoid":
        """Adjoin an external identity to a semigroup table.

        The original elements keep their indices; the new identity gets the last index
        and ``semigroup_elements`` records the original ones.
        """
        op = [list(row) for row in table]
        n = len(op)
        for i, row in enumerate(op):
            row.append(i)
        op.append(list(range(n + 1)))
        names = list(labels) if labels is not None else [str(i) for i in range(n)]
        monoid = cls.from_table(op, identity=n, generators=range(n), labels=names + ["1"], name=name)
        return cls(
            table=monoid.table, identity=n, generators=monoid.generators, labels=monoid.labels,
            semigroup_elements=tuple(range(n)), name=name,
        )


def find_identity(table: np.ndarray) -> Optional[int]:
    rn = np.arange(table.shape[0])
    for e in rn:
        if (table[e, :] == rn).all() and (table[:, e] == rn).all():
            return int(e)
    return None


def closure_from_generators(identity: Hashable, generators: Iterable[Hashable],
                            product: Callable[[Any, Any], Hashable],
                            label: Callable[[Any], str] = str,
                            cap: Optional[int] = None, name: str = "") -> FiniteMonoid:
    """Breadth-first closure of ``generators`` under an associative ``product``.

    Elements are indexed in discovery order (identity first). The table is filled
    column by column from the right Cayley graph: if b = b'g then ab = (ab')g.

    Args:
        identity: Concrete identity element
        generators: Concrete generating elements
        product: Associative binary product on the concrete carrier
        label: Rendering of an element for reports
        cap: Maximum number of elements (defaults to the memory-derived cap)
        name: Name used in logs and reports

    Returns:
        The generated FiniteMonoid with ``elements`` set to the concrete carrier
    """
    limit = cap if cap is not None else closure_size_cap()
    gens = list(dict.fromkeys(generators))
    elements: List[Hashable] = [identity]
    index: Dict[Hashable, int] = {identity: 0}
    parent = [-1]
    via = [-1]
    cayley: List[List[int]] = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        row = []
        for gi, g in enumerate(gens):
            p = product(elements[i], g)
            j = index.get(p)
            if j is None:
                j = len(elements)
                ensure_within(f"closure size of {name or 'monoid'}", j + 1, limit)
                index[p] = j
                elements.append(p)
                parent.append(i)
                via.append(gi)
                queue.append(j)
            row.append(j)
        cayley.append(row)

    n = len(elements)
    right = np.array(cayley, dtype=np.int32).reshape(n, len(gens))
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n)
    for b in range(1, n):
        table[:, b] = right[table[:, parent[b]], via[b]]
    table.setflags(write=False)
    generator_indices = tuple(dict.fromkeys(int(right[0, gi]) for gi in range(len(gens))))
    logger.debug(f"Closure {name or '<anonymous>'}: {n} elements from {len(gens)} generators")
    return FiniteMonoid(
        table=table,
        identity=0,
        generators=generator_indices,
        labels=tuple(label(e) for e in elements),
        elements=tuple(elements),
        name=name,
        _index=index,
    )


def direct_product(*monoids: FiniteMonoid, cap: Optional[int] = None) -> FiniteMonoid:
    """Componentwise product; element (i1, ..., ik) has mixed-radix index."""
    require(len(monoids) >= 1, "direct_product needs at least one factor")
    limit = cap if cap is not None else closure_size_cap()
    ensure_within("direct product size", int(np.prod([m.size for m in monoids])), limit)
    result = monoids[0]
    for other in monoids[1:]:
        result = _pair_product(result, other)
    return result


def _pair_product(left: FiniteMonoid, right: FiniteMonoid) -> FiniteMonoid:
    n1, n2 = left.size, right.size
    t = (left.table[:, None, :, None].astype(np.int64) * n2 + right.table[None, :, None, :])
    table = t.reshape(n1 * n2, n1 * n2).astype(np.int32)
    table.setflags(write=False)
    generators = tuple(dict.fromkeys(
        [g * n2 + right.identity for g in left.generators]
        + [left.identity * n2 + h for h in right.generators]
    ))
    labels = tuple(f"({a}, {b})" for a in left.labels for b in right.labels)
    domain = None
    if left.semigroup_elements is not None or right.semigroup_elements is not None:
        domain = tuple(a * n2 + b for a in left.substitution_domain() for b in right.substitution_domain())
    return FiniteMonoid(
        table=table,
        identity=left.identity * n2 + right.identity,
        generators=generators,
        labels=labels,
        semigroup_elements=domain,
        name=f"{left.name or 'M'} x {right.name or 'N'}",
    )


def dual(monoid: FiniteMonoid) -> FiniteMonoid:
    """The monoid with reversed multiplication."""
    table = np.ascontiguousarray(monoid.table.T)
    table.setflags(write=False)
    return FiniteMonoid(
        table=table,
        identity=monoid.identity,
        generators=monoid.generators,
        labels=monoid.labels,
        elements=monoid.elements,
        semigroup_elements=monoid.semigroup_elements,
        name=f"dual({monoid.name})" if monoid.name else "dual",
        _index=monoid._index,
    )


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid.from_table([[0]], identity=0, generators=(), labels=("1",), name="trivial")


def semilattice(n: int = 2) -> FiniteMonoid:
    """The n-element chain semilattice with the top as identity (product = min)."""
    require(n >= 1, "semilattice needs at least one element")
    table = [[min(a, b) for b in range(n)] for a in range(n)]
    return FiniteMonoid.from_table(table, identity=n - 1, labels=[str(i) for i in range(n)],
                                   name=f"semilattice{n}")


def rectangular_band(p: int, q: int, adjoin_identity: bool = True) -> FiniteMonoid:
    """p x q rectangular band, (i, j)(k, l) = (i, l), optionally with 1 adjoined."""
    cells = [(i, j) for i in range(p) for j in range(q)]
    table = [[cells.index((a[0], b[1])) for b in cells] for a in cells]
    labels = [f"({i},{j})" for i, j in cells]
    if adjoin_identity:
        monoid = FiniteMonoid.from_semigroup_table(table, labels=labels, name=f"rect{p}x{q}^1")
        # bands substitute from the whole monoid
        return FiniteMonoid(table=monoid.table, identity=monoid.identity, generators=monoid.generators,
                            labels=monoid.labels, name=monoid.name)
    return FiniteMonoid.from_semigroup_table(table, labels=labels, name=f"rect{p}x{q}")


def two_element_semigroups() -> Mapping[str, FiniteMonoid]:
    """All two-element semigroups up to isomorphism, each with an external identity adjoined."""
    tables = {
        "null": [[0, 0], [0, 0]],
        "left-zero": [[0, 0], [1, 1]],
        "right-zero": [[0, 1], [0, 1]],
        "semilattice": [[0, 0], [0, 1]],
        "group": [[0, 1], [1, 0]],
    }
    return {name: FiniteMonoid.from_semigroup_table(t, labels=["a", "b"], name=name)
            for name, t in tables.items()}


def compose_permutations(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
    """Right action: x(pq) = (xp)q on 0-based points."""
    return tuple(q[x] for x in p)


def symmetric_group(n: int) -> FiniteMonoid:
    """S_n as a monoid, generated by the adjacent transpositions."""
    require(n >= 1, "symmetric_group needs n >= 1")
    identity = tuple(range(n))
    transpositions = []
    for i in range(n - 1):
        image = list(identity)
        image[i], image[i + 1] = image[i + 1], image[i]
        transpositions.append(tuple(image))
    return closure_from_generators(identity, transpositions, compose_permutations,
                                   label=lambda p: "(" + " ".join(str(x + 1) for x in p) + ")", name=f"S{n}")


def evaluate_word(monoid: FiniteMonoid, assignment: Mapping[str, int], word: Sequence[str]) -> int:
    """Left-to-right product of the assigned elements."""
    require(len(word) > 0, "cannot evaluate the empty word")
    result = None
    for symbol in word:
        if symbol not in assignment:
            raise PreconditionError(f"no element assigned to variable {symbol!r}")
        value = int(assignment[symbol])
        result = value if result is None else int(monoid.table[result, value])
    return result
