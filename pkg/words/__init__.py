"""Combinatorics on words: embeddings, identity oracles and word constructions."""

from .core import (
    Identity, Word, alphabet, apply_substitution, canonical_identity, classify_occurrences,
    enumerate_words, format_word, make_identity, parse_identity, parse_word, power_word,
)
from .subwords import (
    count_scattered_embeddings, in_Jm, in_Um, is_unambiguously_scattered, jm_key,
    leftmost_embedding, scattered_subwords_upto, um_key, unambiguous_profile,
)
from .constructions import (
    ConstructedWord, build_u_n_m, build_v_literal, build_w_n, check_P1, check_P2,
    f_expand, fbar_expand, is_sparse, mirror_tail_levels, zimin,
)

__all__ = [
    'Identity', 'Word', 'alphabet', 'apply_substitution', 'canonical_identity',
    'classify_occurrences', 'enumerate_words', 'format_word', 'make_identity', 'parse_identity',
    'parse_word', 'power_word', 'count_scattered_embeddings', 'in_Jm', 'in_Um',
    'is_unambiguously_scattered', 'jm_key', 'leftmost_embedding', 'scattered_subwords_upto',
    'um_key', 'unambiguous_profile', 'ConstructedWord', 'build_u_n_m', 'build_v_literal',
    'build_w_n', 'check_P1', 'check_P2', 'f_expand', 'fbar_expand', 'is_sparse', 'mirror_tail_levels', 'zimin',
]
