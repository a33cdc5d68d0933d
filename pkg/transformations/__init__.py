"""Partial transformations of a chain, their named families, digraph Catalan monoids and the bar/hat bijection."""

from .maps import MapProperties, PartialMap, parse_map, tau
from .families import (
    FamilyKind, catalan_generators, catalan_number, enumerate_family, extensive_generators,
    family_monoid, parse_family,
)
from .digraphs import (
    Digraph, DigraphAnalysis, build_gamma_n, catalan_of_digraph, digraph_analysis,
    longest_path_vertices, path_digraph, tau_e,
)
from .bijection import Pairing, appendix_pairing, bar_map, hat_map, non_homomorphism_witness

__all__ = [
    'MapProperties', 'PartialMap', 'parse_map', 'tau', 'FamilyKind', 'catalan_generators',
    'catalan_number', 'enumerate_family', 'extensive_generators', 'family_monoid', 'parse_family',
    'Digraph', 'DigraphAnalysis', 'build_gamma_n', 'catalan_of_digraph', 'digraph_analysis',
    'longest_path_vertices', 'path_digraph', 'tau_e', 'Pairing', 'appendix_pairing', 'bar_map',
    'hat_map', 'non_homomorphism_witness',
]
