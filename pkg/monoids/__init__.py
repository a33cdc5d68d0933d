"""Finite monoid engine: tables, closure, identities, Green's relations and power monoids."""

from .finite import (
    FiniteMonoid, closure_from_generators, direct_product, dual, evaluate_word, rectangular_band,
    semilattice, symmetric_group, trivial_monoid, two_element_semigroups,
)
from .green import (
    RTrivialEmbedding, StructureFlags, TrivialityFlags, embed_rtrivial_in_Em, green_classes,
    structure_flags, triviality,
)
from .identities import (
    IdentityCheck, IsotermVerdict, band_identity_check, bounded_identity_theory,
    check_alphabet_chain, is_isoterm_bounded, oracle_theory, satisfies_identity,
    satisfies_identity_sampled,
)
from .power import submonoid_generated, subset_product, unitary_power_monoid, unitary_submonoid
from .homomorphisms import HomomorphismResult, extend_homomorphism, generator_correspondence, is_isomorphism

__all__ = [
    'FiniteMonoid', 'closure_from_generators', 'direct_product', 'dual', 'evaluate_word',
    'rectangular_band', 'semilattice', 'symmetric_group', 'trivial_monoid', 'two_element_semigroups',
    'RTrivialEmbedding', 'StructureFlags', 'TrivialityFlags', 'embed_rtrivial_in_Em',
    'green_classes', 'structure_flags', 'triviality', 'IdentityCheck', 'IsotermVerdict',
    'band_identity_check', 'bounded_identity_theory', 'check_alphabet_chain',
    'is_isoterm_bounded', 'oracle_theory', 'satisfies_identity', 'satisfies_identity_sampled',
    'submonoid_generated', 'subset_product', 'unitary_power_monoid', 'unitary_submonoid',
    'HomomorphismResult', 'extend_homomorphism', 'generator_correspondence', 'is_isomorphism',
]
