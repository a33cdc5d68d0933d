"""Words, identities and substitutions over a set of variables."""

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Set, Tuple

from config import ENUMERATION_CAP
from safety.limits import ensure_within
from safety.validation import PreconditionError, require, require_variables

# A word is an immutable sequence of variable identifiers.
Word = Tuple[str, ...]


class Identity(NamedTuple):
    """A formal equality ``lhs ~ rhs`` between two nonempty words."""
    lhs: Word
    rhs: Word

    def variables(self) -> List[str]:
        """Variables of both sides in order of first occurrence."""
        return list(dict.fromkeys(self.lhs + self.rhs))

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} ~ {format_word(self.rhs)}"


class OccurrenceKind(Enum):
    """Whether a variable occurs once or several times in a word."""
    LINEAR = "linear"
    REPEATED = "repeated"


@dataclass(frozen=True)
class Occurrences:
    kind: OccurrenceKind
    positions: Tuple[int, ...]  # 1-based, sorted


def parse_word(text: str) -> Word:
    """Parse whitespace-separated tokens into a word (empty text gives the empty word)."""
    tokens = tuple(text.split())
    require_variables(tokens)
    return tokens


def format_word(w: Sequence[str]) -> str:
    return " ".join(w)


def make_identity(lhs: Sequence[str], rhs: Sequence[str]) -> Identity:
    require(len(lhs) > 0 and len(rhs) > 0, "both sides of an identity must be nonempty")
    return Identity(tuple(lhs), tuple(rhs))


def parse_identity(text: str) -> Identity:
    """Parse an identity written as ``lhs ~ rhs`` on one line."""
    if text.count("~") != 1:
        raise PreconditionError(f"identity must contain exactly one '~': {text!r}")
    left, right = text.split("~")
    return make_identity(parse_word(left), parse_word(right))


def power_word(variable: str, k: int) -> Word:
    return (variable,) * k


def alphabet(w: Sequence[str]) -> Set[str]:
    """The set of distinct variables of ``w``; empty for the empty word."""
    return set(w)


def apply_substitution(theta: Mapping[str, Sequence[str]], w: Sequence[str]) -> Word:
    """Replace every variable of ``w`` by its image word.

    Args:
        theta: Map from variables to nonempty words
        w: Nonempty word whose alphabet is covered by ``theta``

    Returns:
        The concatenation of the images in order
    """
    require(len(w) > 0, "cannot substitute into the empty word")
    result: List[str] = []
    for symbol in w:
        if symbol not in theta:
            raise PreconditionError(f"substitution undefined on variable {symbol!r}")
        image = tuple(theta[symbol])
        require(len(image) > 0, f"substitution image of {symbol!r} is empty")
        result.extend(image)
    return tuple(result)


def classify_occurrences(w: Sequence[str]) -> Dict[str, Occurrences]:
    """Tag each variable of ``w`` as linear or repeated with its 1-based positions."""
    require(len(w) > 0, "classify_occurrences needs a nonempty word")
    positions: Dict[str, List[int]] = {}
    for index, symbol in enumerate(w, start=1):
        positions.setdefault(symbol, []).append(index)
    return {
        symbol: Occurrences(
            OccurrenceKind.LINEAR if len(found) == 1 else OccurrenceKind.REPEATED,
            tuple(found),
        )
        for symbol, found in positions.items()
    }


def shortlex_key(w: Sequence[str]) -> Tuple[int, Tuple[str, ...]]:
    return (len(w), tuple(w))


def enumerate_words(letters: Sequence[str], max_len: int) -> Iterator[Word]:
    """Yield all words of length 1..max_len over ``letters`` in shortlex order."""
    require(len(letters) > 0, "alphabet must be nonempty")
    require(max_len >= 1, "max_len must be at least 1")
    ordered = list(dict.fromkeys(letters))
    total = sum(len(ordered) ** k for k in range(1, max_len + 1))
    ensure_within("word enumeration", total, ENUMERATION_CAP)
    for length in range(1, max_len + 1):
        for w in product(ordered, repeat=length):
            yield w


def canonical_variable(i: int) -> str:
    return f"x{i + 1}"


def canonical_identity(lhs: Sequence[str], rhs: Sequence[str]) -> Identity:
    """Canonical form up to renaming variables and swapping sides.

    Variables are renamed by first occurrence and the side order giving the
    shortlex-smaller pair is kept.
    """
    best: Optional[Tuple] = None
    for first, second in ((lhs, rhs), (rhs, lhs)):
        renaming: Dict[str, int] = {}
        for symbol in tuple(first) + tuple(second):
            renaming.setdefault(symbol, len(renaming))
        a = tuple(renaming[s] for s in first)
        b = tuple(renaming[s] for s in second)
        key = (len(a), a, len(b), b)
        if best is None or key < best:
            best = key
    _, a, _, b = best
    return Identity(tuple(canonical_variable(i) for i in a), tuple(canonical_variable(i) for i in b))
