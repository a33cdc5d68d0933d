"""Word constructions: fresh-variable expansion, the u_n(m) and w_n families, Zimin words,
and the (P1)/(P2)/sparseness checkers."""

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from config import WORD_LENGTH_CAP, ZIMIN_CAP
from safety.limits import ensure_within
from safety.validation import PreconditionError, require
from utils.logger import get_logger
from words.core import OccurrenceKind, Word, classify_occurrences

logger = get_logger(__name__)

# Half-open [start, end) slices of a word.
Block = Tuple[int, int]


@dataclass(frozen=True)
class ConstructedWord:
    """A built word together with the block boundaries of its construction."""
    word: Word
    blocks: Tuple[Block, ...]
    tail_blocks: Tuple[Block, ...] = ()
    split: Optional[int] = None  # head/tail boundary for w_n
    params: dict = field(default_factory=dict)

    @property
    def head(self) -> Word:
        return self.word if self.split is None else self.word[:self.split]

    @property
    def tail(self) -> Word:
        return () if self.split is None else self.word[self.split:]


@dataclass(frozen=True)
class SparseResult:
    is_sparse: bool
    violating_pair: Optional[Tuple[int, int]] = None  # 1-based positions


def fresh_name(level: int, slot: int) -> str:
    return f"p{level}_{slot}"


def _expand(w: Sequence[str], level: int, reverse: bool) -> Word:
    require(len(w) > 0, "cannot expand the empty word")
    slots = len(w)
    names = [fresh_name(level, slots - i if reverse else i) for i in range(slots + 1)]
    clash = set(names) & set(w)
    if clash:
        raise PreconditionError(f"fresh variables {sorted(clash)} already occur in the word")
    result: List[str] = [names[0]]
    for i, symbol in enumerate(w, start=1):
        result.append(symbol)
        result.append(names[i])
    return tuple(result)


def f_expand(w: Sequence[str], level: int) -> Word:
    """Insert fresh variables p<level>_0..p<level>_k around and between the letters of ``w``."""
    return _expand(w, level, reverse=False)


def fbar_expand(w: Sequence[str], level: int) -> Word:
    """Same fresh pool as :func:`f_expand` at ``level`` but in reversed slot order."""
    return _expand(w, level, reverse=True)


def f_power(w: Sequence[str], k: int) -> Word:
    """Apply f ``k`` times, using level j for the j-th application."""
    result = tuple(w)
    for level in range(1, k + 1):
        result = _expand(result, level, reverse=False)
    return result


def y_word(n: int) -> Word:
    return tuple(f"y{i}" for i in range(1, n + 1))


def expanded_length(length: int, k: int) -> int:
    """|f^k(w)| for |w| = length."""
    return (2 ** k) * (length + 1) - 1


def predicted_u_length(n: int, m: int) -> int:
    return m + sum(expanded_length(n, j) for j in range(m))


def _u_blocks(y: Word, m: int, variable: str = "x") -> Tuple[Word, Tuple[Block, ...]]:
    word: List[str] = []
    blocks: List[Block] = []
    for j in range(m - 1, -1, -1):
        start = len(word)
        word.append(variable)
        word.extend(f_power(y, j))
        blocks.append((start, len(word)))
    return tuple(word), tuple(blocks)


def build_u_n_m(n: int, m: int) -> ConstructedWord:
    """u_n(m) = x f^{m-1}(y_n) x f^{m-2}(y_n) ... x f(y_n) x y_n with its m blocks."""
    require(n >= 1 and m >= 1, "build_u_n_m needs n >= 1 and m >= 1")
    ensure_within("u_n(m) length", predicted_u_length(n, m), WORD_LENGTH_CAP)
    word, blocks = _u_blocks(y_word(n), m)
    logger.debug(f"Built u_{n}({m}) of length {len(word)}")
    return ConstructedWord(word, blocks, params={"n": n, "m": m})


def interleaved_y(n: int) -> Word:
    """y'_{2n} = y1 y3 ... y_{2n-1} y2 y4 ... y_{2n}."""
    odd = tuple(f"y{i}" for i in range(1, 2 * n, 2))
    even = tuple(f"y{i}" for i in range(2, 2 * n + 1, 2))
    return odd + even


def _mirror_slots(tail_word: Sequence[str], head_word: Sequence[str]) -> List[int]:
    """Fresh-name slots for expanding ``tail_word`` without repeating a factor of the head.

    The head expands ``head_word`` with slot k between its k-th and (k+1)-th letters, so
    letter s_k sits between p_{k-1} and p_k and the block is framed by x p_0 ... p_L x.
    Slot i of the tail takes L - i (plain reversal) unless that recreates one of those
    factors; the next free slot in descending order is used instead.
    """
    length = len(tail_word)
    position = {symbol: k for k, symbol in enumerate(head_word, start=1)}
    require(len(head_word) == length and set(position) == set(tail_word),
            "head and tail levels must be rearrangements of each other")
    forbidden: List[set] = []
    for i in range(length + 1):
        banned = set()
        if i == 0:
            banned.add(0)
        if i == length:
            banned.add(length)
        if i >= 1:
            banned.add(position[tail_word[i - 1]])
        if i < length:
            banned.add(position[tail_word[i]] - 1)
        forbidden.append(banned)

    def preference(i: int) -> List[int]:
        return [length - i] + [s for s in range(length, -1, -1) if s != length - i]

    chosen: List[int] = []
    used: set = set()
    stack = [iter(preference(0))]
    while len(chosen) <= length:
        if not stack:
            raise PreconditionError(f"no factor-free slot assignment for a level of length {length}")
        i = len(chosen)
        for slot in stack[-1]:
            if slot not in used and slot not in forbidden[i]:
                chosen.append(slot)
                used.add(slot)
                stack.append(iter(preference(i + 1)))
                break
        else:
            stack.pop()
            if chosen:
                used.discard(chosen.pop())
    return chosen


def mirror_tail_levels(n: int, m: int) -> List[Word]:
    """The tail levels y', fbar(y'), ..., fbar^{m-1}(y') of w_n.

    Level j reuses the fresh pool p<j>_* of the head's level j. For n = 2 every slot
    keeps the plain reversal at the first level; for larger n some slots move so w_n keeps
    each two-letter factor unique.
    """
    head_level = y_word(2 * n)
    tail_level = interleaved_y(n)
    levels = [tail_level]
    for level in range(1, m):
        slots = _mirror_slots(tail_level, head_level)
        expanded: List[str] = [fresh_name(level, slots[0])]
        for symbol, slot in zip(tail_level, slots[1:]):
            expanded.append(symbol)
            expanded.append(fresh_name(level, slot))
        reversed_slots = list(range(len(tail_level), -1, -1))
        if slots != reversed_slots:
            logger.debug(f"w_{n} level {level}: {sum(a != b for a, b in zip(slots, reversed_slots))} slots moved")
        tail_level = tuple(expanded)
        head_level = f_expand(head_level, level)
        levels.append(tail_level)
    return levels


def build_w_n(n: int, m: int) -> ConstructedWord:
    """w_n = u_{2n}(m) followed by the mirror tail y' x fbar(y') x ... x fbar^{m-1}(y') x."""
    require(n >= 2 and m >= 1, "build_w_n needs n >= 2 and m >= 1")
    ensure_within("w_n length", 2 * predicted_u_length(2 * n, m), WORD_LENGTH_CAP)
    head, head_blocks = _u_blocks(y_word(2 * n), m)
    tail: List[str] = []
    tail_blocks: List[Block] = []
    offset = len(head)
    for level in mirror_tail_levels(n, m):
        start = offset + len(tail)
        tail.extend(level)
        tail.append("x")
        tail_blocks.append((start, offset + len(tail)))
    word = head + tuple(tail)
    logger.debug(f"Built w_{n} (m={m}) of length {len(word)}")
    return ConstructedWord(word, head_blocks, tuple(tail_blocks), split=len(head), params={"n": n, "m": m})


def build_v_literal(n: int, m: int) -> Word:
    """The tail with the literal bracketing: the mirror levels joined by m-1 occurrences of x."""
    require(n >= 2 and m >= 1, "build_v_literal needs n >= 2 and m >= 1")
    ensure_within("w_n length", 2 * predicted_u_length(2 * n, m), WORD_LENGTH_CAP)
    tail: List[str] = []
    for j, level in enumerate(mirror_tail_levels(n, m)):
        if j:
            tail.append("x")
        tail.extend(level)
    return tuple(tail)


def zimin(n: int) -> Word:
    """Z_1 = x1, Z_{k+1} = Z_k x_{k+1} Z_k."""
    require(n >= 1, "zimin needs n >= 1")
    ensure_within("zimin index", n, ZIMIN_CAP)
    word: Word = ("x1",)
    for k in range(2, n + 1):
        word = word + (f"x{k}",) + word
    return word


def check_P1(w: Sequence[str]) -> bool:
    """Every two-letter word occurs as a factor of ``w`` at most once."""
    require(len(w) > 0, "check_P1 needs a nonempty word")
    factors = Counter(zip(w, w[1:]))
    return all(count <= 1 for count in factors.values())


def check_P2(w: Sequence[str], n: int) -> bool:
    """At least ``n`` distinct variables lie between any two occurrences of a variable."""
    require(len(w) > 0, "check_P2 needs a nonempty word")
    last_seen = {}
    for index, symbol in enumerate(w):
        if symbol in last_seen and len(set(w[last_seen[symbol] + 1:index])) < n:
            return False
        last_seen[symbol] = index
    return True


def is_sparse(w: Sequence[str]) -> SparseResult:
    """Whether a linear variable separates every two consecutive occurrences of a repeated one."""
    occurrences = classify_occurrences(w)
    linear_positions = sorted(
        info.positions[0] for info in occurrences.values() if info.kind is OccurrenceKind.LINEAR
    )
    violations = []
    for info in occurrences.values():
        if info.kind is not OccurrenceKind.REPEATED:
            continue
        for left, right in zip(info.positions, info.positions[1:]):
            if not any(left < p < right for p in linear_positions):
                violations.append((left, right))
    if violations:
        return SparseResult(False, min(violations))
    return SparseResult(True)


def sparse_preimage(target: Sequence[str], n: int, rng: random.Random,
                    attempts: int = 50) -> Optional[Word]:
    """Draw a word u with fewer than ``n`` variables and a substitution sending u onto ``target``.

    Cuts ``target`` around every occurrence of a randomly chosen set of repeated
    variables plus a few random positions, then names equal factors by the same
    variable. Returns None when no draw stays under ``n`` variables.
    """
    occurrences = classify_occurrences(target)
    repeated = sorted(s for s, info in occurrences.items() if info.kind is OccurrenceKind.REPEATED)
    for _ in range(attempts):
        chosen = {s for s in repeated if rng.random() < 0.5} or set(repeated[:1])
        cuts = {0, len(target)}
        for index, symbol in enumerate(target):
            if symbol in chosen:
                cuts.update((index, index + 1))
        for _ in range(rng.randint(0, 2)):
            cuts.add(rng.randint(1, len(target) - 1))
        bounds = sorted(cuts)
        factors = [tuple(target[a:b]) for a, b in zip(bounds, bounds[1:]) if b > a]
        names = {}
        preimage = tuple(names.setdefault(factor, f"z{len(names) + 1}") for factor in factors)
        if len(names) < n:
            return preimage
    return None
