"""Presented monoids: the named catalogue, shortlex rewriting and Coxeter/0-Hecke models."""

from .coxeter import (
    CoxeterMatrix, CoxeterModel, coxeter_group_model, coxeter_matrix, hecke0_via_unitary, simple_paths,
)
from .catalog import PRESENTATION_KINDS, Presentation, named_presentation
from .rewriting import (
    CompletionStatus, PresentedMonoid, RewriteSystem, complete, enumerate_presented, t_sequence,
)

__all__ = [
    'CoxeterMatrix', 'CoxeterModel', 'coxeter_group_model', 'coxeter_matrix', 'hecke0_via_unitary',
    'simple_paths', 'PRESENTATION_KINDS', 'Presentation', 'named_presentation', 'CompletionStatus',
    'PresentedMonoid', 'RewriteSystem', 'complete', 'enumerate_presented', 't_sequence',
]
