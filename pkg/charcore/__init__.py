"""
Numerical-character calculus for zero-dimensional plane schemes.
"""

from .character import (
    NumericalCharacter,
    HilbertTable,
    SplitResult,
    validate,
    degree,
    h1,
    delta,
    hilbert_table,
    is_connected,
    is_strictly_decreasing_type,
    gaps,
    split_at,
    decompose,
    recompose,
    lift,
    lift_chain,
    character_from_delta,
)
from .enumeration import enumerate_characters

__all__ = [
    'NumericalCharacter',
    'HilbertTable',
    'SplitResult',
    'validate',
    'degree',
    'h1',
    'delta',
    'hilbert_table',
    'is_connected',
    'is_strictly_decreasing_type',
    'gaps',
    'split_at',
    'decompose',
    'recompose',
    'lift',
    'lift_chain',
    'character_from_delta',
    'enumerate_characters',
]
