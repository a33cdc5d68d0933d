"""Shortlex string rewriting: naive critical-pair completion and normal-form enumeration.

Generators are encoded as single characters in generator order so that Python
string comparison is the shortlex tie-break and ``str.replace`` does the rewriting.
"""

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Set, Tuple

from config import RULE_CAP, RULE_LENGTH_CAP, T_SEQUENCE_MAX_DIGITS
from monoids.finite import FiniteMonoid, closure_from_generators
from presentations.catalog import Presentation
from safety.limits import ensure_within
from safety.validation import require
from utils.logger import get_logger
from words.core import Word

logger = get_logger(__name__)

_CODE_BASE = 0x100

Rule = Tuple[str, str]


class CompletionStatus(Enum):
    COMPLETE = "complete"
    CAPPED = "capped"


@dataclass
class RewriteSystem:
    """Shortlex-decreasing rules over an encoded generator alphabet."""
    generators: Tuple[str, ...]
    rules: List[Rule]
    status: CompletionStatus
    semigroup: bool = False
    name: str = ""

    def encode(self, word: Sequence[str]) -> str:
        index = {g: i for i, g in enumerate(self.generators)}
        return "".join(chr(_CODE_BASE + index[g]) for g in word)

    def decode(self, text: str) -> Word:
        return tuple(self.generators[ord(c) - _CODE_BASE] for c in text)

    def reduce_encoded(self, text: str) -> str:
        return _reduced(text, self.rules)

    def reduce(self, word: Sequence[str]) -> Word:
        return self.decode(self.reduce_encoded(self.encode(word)))

    def decoded_rules(self) -> List[Tuple[Word, Word]]:
        return [(self.decode(left), self.decode(right)) for left, right in self.rules]


@dataclass(frozen=True)
class PresentedMonoid:
    """Normal-form monoid of a rewrite system; ``exact`` is False when completion capped out."""
    monoid: FiniteMonoid
    normal_forms: Tuple[Word, ...]
    exact: bool
    semigroup: bool = False

    @property
    def reported_size(self) -> int:
        """Element count, excluding the adjoined identity for semigroup presentations."""
        return self.monoid.size - 1 if self.semigroup else self.monoid.size


def _shortlex_ordered(a: str, b: str) -> Rule:
    if (len(a), a) > (len(b), b):
        return a, b
    return b, a


def _reduced(word: str, rules: Sequence[Rule]) -> str:
    while True:
        before = word
        for left, right in rules:
            word = word.replace(left, right)
        if word == before:
            return word


def _interreduce(rules: Set[Rule]) -> Set[Rule]:
    """Drop rules whose left side contains another left side; normalise right sides."""
    changed = True
    current = set(rules)
    while changed:
        changed = False
        for rule in sorted(current, key=lambda r: (len(r[0]), r[0])):
            others = [r for r in current if r != rule]
            left, right = rule
            if any(other[0] in left for other in others):
                current.discard(rule)
                a, b = _reduced(left, others), _reduced(right, others)
                if a != b:
                    current.add(_shortlex_ordered(a, b))
                changed = True
                break
            new_right = _reduced(right, others)
            if new_right != right:
                current.discard(rule)
                current.add((left, new_right))
                changed = True
                break
    return current


def _critical_pairs(rules: List[Rule]) -> Set[Rule]:
    """Unresolved overlaps l2 = x.w, l1 = w.y of two left sides."""
    prefixes: Dict[str, List[Rule]] = defaultdict(list)
    suffixes: Dict[str, List[Rule]] = defaultdict(list)
    for rule in rules:
        left = rule[0]
        for i in range(1, len(left)):
            prefixes[left[:i]].append(rule)
            suffixes[left[i:]].append(rule)
    pairs: Set[Rule] = set()
    for overlap in prefixes.keys() & suffixes.keys():
        for left1, right1 in prefixes[overlap]:
            tail = left1[len(overlap):]
            for left2, right2 in suffixes[overlap]:
                head = left2[:-len(overlap)]
                a = _reduced(right2 + tail, rules)
                b = _reduced(head + right1, rules)
                if a != b:
                    pairs.add(_shortlex_ordered(a, b))
    return pairs


def complete(presentation: Presentation, rule_cap: int = RULE_CAP,
             length_cap: int = RULE_LENGTH_CAP) -> RewriteSystem:
    """Shortlex completion of ``presentation``.

    Args:
        presentation: Monoid or semigroup presentation
        rule_cap: Stop with status CAPPED once more rules than this exist
        length_cap: Critical pairs with a longer left side are not added (status CAPPED)

    Returns:
        RewriteSystem whose rules always terminate; COMPLETE iff every critical pair resolved
    """
    require(rule_cap > 0 and length_cap > 0, "completion caps must be positive")
    system = RewriteSystem(presentation.generators, [], CompletionStatus.COMPLETE,
                           presentation.semigroup, presentation.name)
    rules: Set[Rule] = set()
    for lhs, rhs in presentation.relations:
        a, b = system.encode(lhs), system.encode(rhs)
        if a != b:
            rules.add(_shortlex_ordered(a, b))
    status = CompletionStatus.COMPLETE
    rounds = 0
    while True:
        rules = _interreduce(rules)
        ordered = sorted(rules, key=lambda r: (len(r[0]), r[0]))
        pairs = _critical_pairs(ordered)
        rounds += 1
        if not pairs:
            break
        kept = {pair for pair in pairs if len(pair[0]) <= length_cap}
        if len(kept) < len(pairs):
            status = CompletionStatus.CAPPED
        if not kept or len(rules) + len(kept) > rule_cap:
            status = CompletionStatus.CAPPED
            rules |= set(list(sorted(kept))[:max(0, rule_cap - len(rules))])
            rules = _interreduce(rules)
            break
        rules |= kept
    system.rules = sorted(rules, key=lambda r: (len(r[0]), r[0]))
    system.status = status
    if status is CompletionStatus.CAPPED:
        logger.warning(f"Completion of {presentation.name} capped with {len(system.rules)} rules")
    else:
        logger.info(f"Completion of {presentation.name}: {len(system.rules)} rules after {rounds} rounds")
    return system


def enumerate_presented(system: RewriteSystem, size_cap: Optional[int] = None) -> PresentedMonoid:
    """Breadth-first enumeration of normal forms by right multiplication with generators."""
    exact = system.status is CompletionStatus.COMPLETE
    if not exact:
        logger.warning(f"{system.name}: completion capped, enumeration is a lower bound only")
    generator_forms = [system.reduce_encoded(system.encode((g,))) for g in system.generators]
    monoid = closure_from_generators(
        "", generator_forms, lambda a, b: system.reduce_encoded(a + b),
        label=lambda text: " ".join(system.decode(text)) or "1", cap=size_cap, name=system.name,
    )
    normal_forms = tuple(system.decode(text) for text in monoid.elements)
    if system.semigroup:
        monoid = FiniteMonoid(
            table=monoid.table, identity=monoid.identity, generators=monoid.generators,
            labels=monoid.labels, elements=monoid.elements,
            semigroup_elements=tuple(i for i in range(monoid.size) if i != monoid.identity),
            name=monoid.name, _index=monoid._index,
        )
    return PresentedMonoid(monoid, normal_forms, exact, system.semigroup)


def generator_index(presented: PresentedMonoid, system: RewriteSystem) -> Dict[str, int]:
    """Element index of each generator's normal form."""
    return {g: presented.monoid.index_of(system.reduce_encoded(system.encode((g,))))
            for g in system.generators}


def t_sequence(n: int) -> int:
    """t(0) = 1, t(n) = t(n-1)(t(n-1) + 1)."""
    require(n >= 0, "t_sequence needs n >= 0")
    value = 1
    for _ in range(n):
        value = value * (value + 1)
        # decimal digits of value, from its bit length
        ensure_within("t(n) digits", int(value.bit_length() * 0.30103) + 1, T_SEQUENCE_MAX_DIGITS)
    return value
