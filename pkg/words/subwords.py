"""Scattered subwords, embeddings and the J_m / U_m identity oracles."""

from typing import Dict, FrozenSet, Optional, Sequence, Set, Tuple

from config import EMBEDDING_CAP
from safety.validation import require
from words.core import Identity, Word

# Strictly increasing 1-based positions of a pattern inside a host word.
Embedding = Tuple[int, ...]

GapProfile = Dict[Word, Tuple[FrozenSet[str], ...]]


def count_scattered_embeddings(u: Sequence[str], v: Sequence[str], cap: int = EMBEDDING_CAP) -> int:
    """Number of distinct embeddings of ``u`` into ``v``, saturated at ``cap``."""
    require(len(u) > 0, "pattern word must be nonempty")
    k = len(u)
    # ways[j] = embeddings of u[:j] into the prefix of v read so far
    ways = [1] + [0] * k
    for symbol in v:
        for j in range(k, 0, -1):
            if u[j - 1] == symbol and ways[j - 1]:
                ways[j] = min(cap, ways[j] + ways[j - 1])
    return min(cap, ways[k])


def leftmost_embedding(u: Sequence[str], v: Sequence[str]) -> Optional[Embedding]:
    """Greedy embedding matching each symbol at its earliest legal position."""
    require(len(u) > 0, "pattern word must be nonempty")
    host = tuple(v)
    positions = []
    start = 0
    for symbol in u:
        try:
            found = host.index(symbol, start)
        except ValueError:
            return None
        positions.append(found + 1)
        start = found + 1
    return tuple(positions)


def is_unambiguously_scattered(u: Sequence[str], v: Sequence[str]) -> Tuple[bool, Optional[Embedding]]:
    """Whether ``u`` embeds into ``v`` in exactly one way, with that embedding."""
    if count_scattered_embeddings(u, v, 2) != 1:
        return False, None
    return True, leftmost_embedding(u, v)


def scattered_subwords_upto(v: Sequence[str], k: int) -> Set[Word]:
    """All distinct words of length 1..k occurring as scattered subwords of ``v``."""
    require(k >= 0, "length bound must be nonnegative")
    found: Set[Word] = {()}
    for symbol in v:
        found |= {w + (symbol,) for w in found if len(w) < k}
    found.discard(())
    return found


def gap_alphabets(v: Sequence[str], embedding: Embedding) -> Tuple[FrozenSet[str], ...]:
    """The k+1 alphabets of the segments around an embedding (before-first to after-last)."""
    bounds = (0,) + embedding + (len(v) + 1,)
    return tuple(frozenset(v[bounds[i]:bounds[i + 1] - 1]) for i in range(len(bounds) - 1))


def unambiguous_profile(v: Sequence[str], m: int) -> GapProfile:
    """Map each unambiguously scattered subword of length <= m to its gap alphabets."""
    profile: GapProfile = {}
    for u in scattered_subwords_upto(v, m):
        unique, embedding = is_unambiguously_scattered(u, v)
        if unique:
            profile[u] = gap_alphabets(v, embedding)
    return profile


def jm_key(w: Sequence[str], m: int) -> FrozenSet[Word]:
    """Class key of ``w`` for J_m: its scattered subwords of length <= m."""
    require(m >= 0, "m must be nonnegative")
    return frozenset(scattered_subwords_upto(w, m))


def um_key(w: Sequence[str], m: int):
    """Class key of ``w`` for U_m: alphabet plus the unambiguous gap profile."""
    require(m >= 0, "m must be nonnegative")
    letters = frozenset(w)
    if m == 0:
        return letters, frozenset()
    return letters, frozenset(unambiguous_profile(w, m).items())


def in_Jm(identity: Identity, m: int) -> bool:
    """Whether both sides have the same scattered subwords of length <= m."""
    require(m >= 0, "m must be nonnegative")
    if m == 0:
        return True
    return jm_key(identity.lhs, m) == jm_key(identity.rhs, m)


def in_Um(identity: Identity, m: int) -> bool:
    """Whether the identity satisfies the alphabet, unambiguity and gap conditions up to m."""
    return um_key(identity.lhs, m) == um_key(identity.rhs, m)
