"""Loop-free digraphs and their Catalan monoids."""

from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from monoids.finite import FiniteMonoid, closure_from_generators
from safety.validation import PreconditionError, require
from transformations.maps import PartialMap, tau
from utils.logger import get_logger

logger = get_logger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """Vertices 1..n, edges as ordered pairs; optional display labels per vertex."""
    n: int
    edges: FrozenSet[Edge]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        require(self.n >= 1, "a digraph needs at least one vertex")
        for u, v in self.edges:
            require(1 <= u <= self.n and 1 <= v <= self.n, f"edge {(u, v)} leaves [1, {self.n}]")
            require(u != v, f"loop at vertex {u}")
        if self.labels is not None:
            require(len(self.labels) == self.n, "one label per vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], labels: Optional[Iterable[str]] = None) -> "Digraph":
        return cls(n, frozenset((int(u), int(v)) for u, v in edges), tuple(labels) if labels is not None else None)

    def label(self, vertex: int) -> str:
        return self.labels[vertex - 1] if self.labels is not None else str(vertex)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def successors(self, vertex: int) -> List[int]:
        return sorted(v for u, v in self.edges if u == vertex)


@dataclass(frozen=True)
class DigraphAnalysis:
    is_acyclic: bool
    longest_path_vertices: Optional[int]  # None for cyclic graphs


def tau_e(edge: Edge, n: int) -> PartialMap:
    """Total map on [n] sending p to q for edge (p, q), fixing everything else."""
    p, q = edge
    return tau(n, p, q)


def catalan_of_digraph(graph: Digraph, cap: Optional[int] = None) -> FiniteMonoid:
    """Submonoid of total maps generated by the tau_e of every edge."""
    generators = [tau_e(edge, graph.n) for edge in graph.sorted_edges()]
    monoid = closure_from_generators(PartialMap.identity(graph.n), generators, PartialMap.compose,
                                     label=PartialMap.literal, cap=cap, name=f"C(digraph on {graph.n})")
    logger.info(f"Catalan monoid of a {graph.n}-vertex digraph: {monoid.size} elements")
    return monoid


def _topological_order(graph: Digraph) -> Optional[List[int]]:
    indegree = [0] * (graph.n + 1)
    for _, v in graph.edges:
        indegree[v] += 1
    queue = deque(v for v in range(1, graph.n + 1) if indegree[v] == 0)
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in graph.successors(u):
            indegree[v] -= 1
            if indegree[v] == 0:
                queue.append(v)
    return order if len(order) == graph.n else None


def longest_path_vertices(graph: Digraph) -> int:
    """Vertex count of a longest directed path; only defined for acyclic graphs."""
    order = _topological_order(graph)
    if order is None:
        raise PreconditionError("longest path is only defined on acyclic digraphs")
    best = [1] * (graph.n + 1)
    for u in order:
        for v in graph.successors(u):
            best[v] = max(best[v], best[u] + 1)
    return max(best[1:])


def digraph_analysis(graph: Digraph) -> DigraphAnalysis:
    if _topological_order(graph) is None:
        return DigraphAnalysis(False, None)
    return DigraphAnalysis(True, longest_path_vertices(graph))


def path_digraph(m: int) -> Digraph:
    """P_m: 1 -> 2 -> ... -> m."""
    require(m >= 1, "path_digraph needs m >= 1")
    return Digraph.from_edges(m, [(i, i + 1) for i in range(1, m)])


def build_gamma_n(n: int) -> Digraph:
    """Spine 0 -> 1 -> ... -> n with a pendant edge i -> i' for i < n.

    Spine vertex i has index i + 1; pendant i' has index n + 2 + i.
    """
    require(n >= 1, "build_gamma_n needs n >= 1")
    spine = [(i + 1, i + 2) for i in range(n)]
    pendants = [(i + 1, n + 2 + i) for i in range(n)]
    labels = [str(i) for i in range(n + 1)] + [f"{i}'" for i in range(n)]
    return Digraph.from_edges(2 * n + 1, spine + pendants, labels)
