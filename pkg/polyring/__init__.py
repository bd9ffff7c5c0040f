from .field import (
    Field,
    PrimeField,
    RationalField,
    ScalarMatrix,
    default_field,
    field_from_spec,
    rref_mod,
)
from .polynomial import (
    HomogPoly,
    det,
    infer_pattern,
    monomial_index,
    monomials,
    mul,
    parse_polynomial,
)

__all__ = [
    'Field',
    'HomogPoly',
    'PrimeField',
    'RationalField',
    'ScalarMatrix',
    'default_field',
    'det',
    'field_from_spec',
    'infer_pattern',
    'monomial_index',
    'monomials',
    'mul',
    'parse_polynomial',
    'rref_mod',
]
