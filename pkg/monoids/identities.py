"""Identity satisfaction, bounded equational theories and isoterm search.

Exhaustive checks evaluate a word on every substitution at once: each variable
gets a vector of element indices (one entry per substitution) and a word is folded
through the table with fancy indexing.
"""

import hashlib
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from config import (
    DEFAULT_SAMPLES, ISOTERM_EXTRA_FRESH, ISOTERM_EXTRA_LENGTH, SAMPLE_BATCH, SUBSTITUTION_BUDGET,
)
from monoids.finite import FiniteMonoid, evaluate_word
from monoids.green import structure_flags
from safety.limits import ensure_within
from safety.validation import PreconditionError, require
from utils.logger import get_logger
from words.core import (
    Identity, Word, alphabet, canonical_identity, canonical_variable, enumerate_words, shortlex_key,
)
from words.constructions import Block

logger = get_logger(__name__)


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of checking an identity; ``counterexample`` maps variables to element indices."""
    holds: bool
    counterexample: Optional[Dict[str, int]] = None
    substitutions: int = 0

    def describe(self, monoid: FiniteMonoid) -> Optional[Dict[str, str]]:
        if self.counterexample is None:
            return None
        return {var: monoid.labels[value] for var, value in self.counterexample.items()}


@dataclass(frozen=True)
class IsotermVerdict:
    """Bounded isoterm verdict; the search bounds always travel with it."""
    is_isoterm: bool
    witness: Optional[Word] = None
    bound: Dict[str, int] = field(default_factory=dict)


def _dtype_for(monoid: FiniteMonoid):
    return np.uint8 if monoid.size <= 256 else (np.uint16 if monoid.size <= 65536 else np.int32)


def _assignment_vectors(monoid: FiniteMonoid, variables: Sequence[str],
                        domain: Sequence[int]) -> Dict[str, np.ndarray]:
    d = len(domain)
    total = d ** len(variables)
    dom = np.asarray(domain, dtype=_dtype_for(monoid))
    index = np.arange(total, dtype=np.int64)
    vectors = {}
    for i, var in enumerate(variables):
        stride = d ** (len(variables) - 1 - i)
        vectors[var] = dom[(index // stride) % d]
    return vectors


def _fold(table: np.ndarray, vectors: Dict[str, np.ndarray], word: Sequence[str]) -> np.ndarray:
    acc = vectors[word[0]]
    for symbol in word[1:]:
        acc = table[acc, vectors[symbol]]
    return acc


def _counterexample(variables: Sequence[str], domain: Sequence[int], flat: int) -> Dict[str, int]:
    d = len(domain)
    result = {}
    for i, var in enumerate(variables):
        stride = d ** (len(variables) - 1 - i)
        result[var] = int(domain[(flat // stride) % d])
    return result


def satisfies_identity(monoid: FiniteMonoid, identity: Identity,
                       domain: Optional[Sequence[int]] = None) -> IdentityCheck:
    """Exhaustively check ``identity`` over all substitutions from ``domain``.

    Args:
        monoid: Monoid to evaluate in
        identity: Identity to check
        domain: Element indices variables range over (defaults to the monoid's
            substitution domain, i.e. the semigroup part when 1 was adjoined)

    Returns:
        IdentityCheck with a counterexample substitution when the identity fails
    """
    dom = tuple(domain) if domain is not None else monoid.substitution_domain()
    variables = identity.variables()
    total = len(dom) ** len(variables)
    ensure_within("substitution budget", total * (len(identity.lhs) + len(identity.rhs)), SUBSTITUTION_BUDGET)
    vectors = _assignment_vectors(monoid, variables, dom)
    table = monoid.table.astype(_dtype_for(monoid), copy=False)
    left = _fold(table, vectors, identity.lhs)
    right = _fold(table, vectors, identity.rhs)
    mismatch = np.flatnonzero(left != right)
    if mismatch.size:
        return IdentityCheck(False, _counterexample(variables, dom, int(mismatch[0])), total)
    return IdentityCheck(True, None, total)


def satisfies_identity_sampled(monoid: FiniteMonoid, identity: Identity, samples: int = DEFAULT_SAMPLES,
                               seed: int = 0, domain: Optional[Sequence[int]] = None) -> IdentityCheck:
    """Check ``identity`` on ``samples`` random substitutions drawn with ``seed``.

    A returned counterexample is re-verified element by element before it is reported.
    """
    require(samples >= 1, "samples must be at least 1")
    dom = np.asarray(tuple(domain) if domain is not None else monoid.substitution_domain(), dtype=np.int64)
    variables = identity.variables()
    table = monoid.table.astype(_dtype_for(monoid), copy=False)
    rng = np.random.default_rng(seed)
    done = 0
    while done < samples:
        batch = min(SAMPLE_BATCH, samples - done)
        draws = dom[rng.integers(0, len(dom), size=(batch, len(variables)))]
        vectors = {var: draws[:, i].astype(table.dtype) for i, var in enumerate(variables)}
        left = _fold(table, vectors, identity.lhs)
        right = _fold(table, vectors, identity.rhs)
        mismatch = np.flatnonzero(left != right)
        if mismatch.size:
            row = draws[int(mismatch[0])]
            witness = {var: int(row[i]) for i, var in enumerate(variables)}
            if evaluate_word(monoid, witness, identity.lhs) != evaluate_word(monoid, witness, identity.rhs):
                return IdentityCheck(False, witness, done + int(mismatch[0]) + 1)
            logger.error("Sampled mismatch did not survive re-evaluation; ignoring it")
        done += batch
    return IdentityCheck(True, None, done)


def _word_values(monoid: FiniteMonoid, vectors: Dict[str, np.ndarray], letters: Sequence[str],
                 max_len: int) -> Iterator[Tuple[Word, np.ndarray]]:
    """Depth-first walk over all words up to ``max_len``, reusing prefix products."""
    table = monoid.table.astype(_dtype_for(monoid), copy=False)
    stack: List[Tuple[Word, np.ndarray]] = [((letter,), vectors[letter]) for letter in reversed(letters)]
    while stack:
        word, values = stack.pop()
        yield word, values
        if len(word) < max_len:
            for letter in reversed(letters):
                stack.append((word + (letter,), table[values, vectors[letter]]))


def _digest(values: np.ndarray) -> bytes:
    return hashlib.blake2b(np.ascontiguousarray(values).tobytes(), digest_size=16).digest()


def identities_from_classes(classes: Dict[Hashable, List[Word]]) -> Set[Identity]:
    """All canonical nontrivial identities between words sharing a class."""
    result: Set[Identity] = set()
    for members in classes.values():
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                result.add(canonical_identity(u, v))
    return result


def universe_letters(var_count: int) -> List[str]:
    return [canonical_variable(i) for i in range(var_count)]


def bounded_identity_theory(monoid: FiniteMonoid, var_count: int, max_len: int,
                            domain: Optional[Sequence[int]] = None) -> Set[Identity]:
    """All identities over ``var_count`` variables with sides of length <= ``max_len`` holding in the monoid."""
    require(var_count >= 1 and max_len >= 1, "universe needs at least one variable and length 1")
    dom = tuple(domain) if domain is not None else monoid.substitution_domain()
    letters = universe_letters(var_count)
    words = sum(var_count ** k for k in range(1, max_len + 1))
    ensure_within("bounded theory budget", words * len(dom) ** var_count, SUBSTITUTION_BUDGET)
    vectors = _assignment_vectors(monoid, letters, dom)
    classes: Dict[bytes, List[Word]] = defaultdict(list)
    for word, values in _word_values(monoid, vectors, letters, max_len):
        classes[_digest(values)].append(word)
    theory = identities_from_classes(classes)
    logger.debug(f"Bounded theory of {monoid.name}: {len(theory)} identities over "
                 f"{var_count} vars, length <= {max_len}")
    return theory


def oracle_theory(var_count: int, max_len: int, key: Callable[[Word], Hashable]) -> Set[Identity]:
    """Identities of the same universe whose sides share ``key`` (an equivalence class key)."""
    letters = universe_letters(var_count)
    classes: Dict[Hashable, List[Word]] = defaultdict(list)
    for word in enumerate_words(letters, max_len):
        classes[key(word)].append(word)
    return identities_from_classes(classes)


def is_isoterm_bounded(monoid: FiniteMonoid, u: Sequence[str], max_len: Optional[int] = None,
                       extra_fresh: Optional[int] = None,
                       domain: Optional[Sequence[int]] = None) -> IsotermVerdict:
    """Search for v != u with u ~ v holding, over alphabet(u) plus fresh variables.

    The verdict is only as strong as the bounds, which are returned with it.
    """
    u = tuple(u)
    require(len(u) > 0, "isoterm search needs a nonempty word")
    max_len = max_len if max_len is not None else len(u) + ISOTERM_EXTRA_LENGTH
    extra_fresh = extra_fresh if extra_fresh is not None else ISOTERM_EXTRA_FRESH
    letters = list(dict.fromkeys(u))
    fresh = []
    while len(fresh) < extra_fresh:
        candidate = f"z{len(fresh) + 1}"
        while candidate in letters or candidate in fresh:
            candidate += "'"
        fresh.append(candidate)
    letters += fresh
    dom = tuple(domain) if domain is not None else monoid.substitution_domain()
    words = sum(len(letters) ** k for k in range(1, max_len + 1))
    ensure_within("isoterm search budget", words * len(dom) ** len(letters), SUBSTITUTION_BUDGET)
    vectors = _assignment_vectors(monoid, letters, dom)
    table = monoid.table.astype(_dtype_for(monoid), copy=False)
    target = _fold(table, vectors, u)
    witness: Optional[Word] = None
    for word, values in _word_values(monoid, vectors, letters, max_len):
        if word != u and np.array_equal(values, target):
            if witness is None or shortlex_key(word) < shortlex_key(witness):
                witness = word
    bound = {"max_len": max_len, "extra_fresh": extra_fresh, "variables": len(letters)}
    return IsotermVerdict(witness is None, witness, bound)


def check_alphabet_chain(u: Sequence[str], blocks: Sequence[Block], v: Sequence[str],
                         dual: bool = False) -> bool:
    """alf(u_1) >= alf(u_2) >= ... >= alf(u_m) >= alf(v) for the blocks partitioning u.

    With ``dual`` the blocks are read right to left (the left-right mirror condition).
    """
    require(len(blocks) > 0, "at least one block is required")
    ordered = sorted(blocks)
    require(ordered[0][0] == 0 and ordered[-1][1] == len(u), "blocks must cover the word")
    for (a, b), (c, d) in zip(ordered, ordered[1:]):
        require(b == c, f"blocks {(a, b)} and {(c, d)} are not adjacent")
    for a, b in ordered:
        require(a < b, f"block {(a, b)} is empty")
    chain = [alphabet(u[a:b]) for a, b in ordered]
    if dual:
        chain.reverse()
    chain.append(alphabet(v))
    return all(later <= earlier for earlier, later in zip(chain, chain[1:]))


def band_identity_check(band: FiniteMonoid, u: Sequence[str], x: str, v: Sequence[str]) -> IdentityCheck:
    """Check u x v ~ u v exhaustively in a band, for x in alf(u) = alf(v)."""
    if not structure_flags(band).is_band:
        raise PreconditionError(f"{band.name or 'monoid'} is not a band")
    return _uxv_check(band, u, x, v)


def uxv_check(monoid: FiniteMonoid, u: Sequence[str], x: str, v: Sequence[str]) -> IdentityCheck:
    """Same identity as :func:`band_identity_check` without the band precondition."""
    return _uxv_check(monoid, u, x, v)


def _uxv_check(monoid: FiniteMonoid, u: Sequence[str], x: str, v: Sequence[str]) -> IdentityCheck:
    require(alphabet(u) == alphabet(v), "alf(u) must equal alf(v)")
    require(x in alphabet(u), f"{x!r} must occur in u")
    identity = Identity(tuple(u) + (x,) + tuple(v), tuple(u) + tuple(v))
    return satisfies_identity(monoid, identity)
