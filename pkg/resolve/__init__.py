from .graded_ideal import (
    GradedIdeal,
    ResolutionReport,
    character_of,
    hilbert_of_quotient,
    ideal_dimension,
    minimal_generators,
    stabilization_degree,
    syzygy_betti,
    syzygy_space,
    trim,
)

__all__ = [
    'GradedIdeal',
    'ResolutionReport',
    'character_of',
    'hilbert_of_quotient',
    'ideal_dimension',
    'minimal_generators',
    'stabilization_degree',
    'syzygy_betti',
    'syzygy_space',
    'trim',
]
