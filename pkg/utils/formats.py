"""Text file formats: digraphs, monoid dumps, presentations and Coxeter matrices.

Words, identities and map literals are single-line formats and live next to their
types (``words.core.parse_word``, ``words.core.parse_identity``,
``transformations.maps.parse_map``) and are re-exported here. The multi-line formats
are read by ``fbplab inspect`` and written by ``fbplab build``.
"""

from typing import List, Optional, Tuple

from monoids.finite import FiniteMonoid
from presentations.catalog import Presentation
from presentations.coxeter import CoxeterMatrix
from safety.validation import PreconditionError, require
from transformations.digraphs import Digraph
from transformations.maps import PartialMap, parse_map
from words.core import Identity, Word, format_word, parse_identity, parse_word

EMPTY_WORD = "1"
INFINITY = "inf"


def _content_lines(text: str) -> List[str]:
    """Non-blank lines with ``#`` comments stripped."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise PreconditionError(f"{what} must be an integer, got {token!r}")


def format_identity(identity: Identity) -> str:
    return str(identity)


def format_map(alpha: PartialMap) -> str:
    return alpha.literal()


# Digraphs: line 1 `n`, then one `u v` pair per line (1-based).
def parse_digraph(text: str) -> Digraph:
    lines = _content_lines(text)
    require(len(lines) >= 1, "digraph file needs a vertex count")
    n = _int(lines[0], "vertex count")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        require(len(parts) == 2, f"edge line must hold two vertices: {line!r}")
        edges.append((_int(parts[0], "vertex"), _int(parts[1], "vertex")))
    return Digraph.from_edges(n, edges)


def format_digraph(graph: Digraph) -> str:
    lines = [str(graph.n)] + [f"{u} {v}" for u, v in graph.sorted_edges()]
    return "\n".join(lines) + "\n"


# Monoid dumps: `n`, n table rows, `identity <i>`, `generators i j ...`.
def format_monoid(monoid: FiniteMonoid) -> str:
    lines = [str(monoid.size)]
    lines.extend(" ".join(str(int(x)) for x in row) for row in monoid.table)
    lines.append(f"identity {monoid.identity}")
    lines.append(" ".join(["generators"] + [str(g) for g in monoid.generators]))
    return "\n".join(lines) + "\n"


def parse_monoid(text: str, name: str = "") -> FiniteMonoid:
    lines = _content_lines(text)
    require(len(lines) >= 1, "monoid dump needs a size line")
    n = _int(lines[0], "monoid size")
    require(len(lines) >= n + 2, f"monoid dump of size {n} needs {n} table rows plus identity and generators")
    table = [[_int(token, "table entry") for token in line.split()] for line in lines[1:n + 1]]
    identity_line = lines[n + 1].split()
    require(len(identity_line) == 2 and identity_line[0] == "identity", f"expected 'identity <i>', got {lines[n + 1]!r}")
    generators: Tuple[int, ...] = ()
    if len(lines) > n + 2:
        generator_line = lines[n + 2].split()
        require(generator_line[0] == "generators", f"expected 'generators ...', got {lines[n + 2]!r}")
        generators = tuple(_int(token, "generator") for token in generator_line[1:])
    return FiniteMonoid.from_table(table, identity=_int(identity_line[1], "identity"),
                                   generators=generators, name=name)


# Presentations: `gens: a b c`, optional `semigroup: true`, then `lhs = rhs` per line.
def _parse_side(text: str) -> Word:
    tokens = text.split()
    if tokens == [EMPTY_WORD]:
        return ()
    return parse_word(text)


def _format_side(w: Word) -> str:
    return format_word(w) if w else EMPTY_WORD


def parse_presentation(text: str, name: str = "") -> Presentation:
    lines = _content_lines(text)
    require(len(lines) >= 1 and lines[0].startswith("gens:"), "presentation file must start with 'gens:'")
    generators = parse_word(lines[0][len("gens:"):])
    semigroup = False
    relations = []
    for line in lines[1:]:
        if line.startswith("semigroup:"):
            semigroup = line[len("semigroup:"):].strip().lower() in ("true", "yes", "1")
            continue
        require(line.count("=") == 1, f"relation must contain exactly one '=': {line!r}")
        left, right = line.split("=")
        relations.append((_parse_side(left), _parse_side(right)))
    return Presentation(generators, tuple(relations), semigroup=semigroup, name=name)


def format_presentation(presentation: Presentation) -> str:
    lines = ["gens: " + format_word(presentation.generators)]
    if presentation.semigroup:
        lines.append("semigroup: true")
    lines.extend(f"{_format_side(lhs)} = {_format_side(rhs)}" for lhs, rhs in presentation.relations)
    return "\n".join(lines) + "\n"


# Coxeter matrices: `n`, then the strict upper triangle row by row, `inf` for infinity.
def _parse_entry(token: str) -> Optional[int]:
    if token.lower() in (INFINITY, "∞"):
        return None
    return _int(token, "Coxeter entry")


def parse_coxeter_matrix(text: str, name: str = "") -> CoxeterMatrix:
    lines = _content_lines(text)
    require(len(lines) >= 1, "Coxeter matrix file needs a size line")
    n = _int(lines[0], "matrix size")
    require(n >= 1, "matrix size must be positive")
    tokens = " ".join(lines[1:]).split()
    require(len(tokens) == n * (n - 1) // 2, f"expected {n * (n - 1) // 2} upper-triangle entries, got {len(tokens)}")
    entries: List[List[Optional[int]]] = [[1] * n for _ in range(n)]
    values = iter(tokens)
    for i in range(n):
        for j in range(i + 1, n):
            entries[i][j] = entries[j][i] = _parse_entry(next(values))
    return CoxeterMatrix(tuple(map(tuple, entries)), name)


def format_coxeter_matrix(matrix: CoxeterMatrix) -> str:
    lines = [str(matrix.n)]
    for i in range(1, matrix.n):
        row = [matrix.m(i, j) for j in range(i + 1, matrix.n + 1)]
        lines.append(" ".join(INFINITY if value is None else str(value) for value in row))
    return "\n".join(lines) + "\n"

