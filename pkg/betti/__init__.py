from .classification import (
    RemarkReport,
    Verdict,
    classify,
    corollary_check,
    remark_checks,
    sauer_condition,
    witness_property,
)
from .sequence import (
    BettiSequence,
    CountFunction,
    WitnessedCheck,
    betti_to_character,
    betti_to_hilbert,
    counts,
    h0_increment,
    is_realizable,
    minimal_betti,
    require_realizable,
    scheme_degree,
    split_betti,
)

__all__ = [
    'BettiSequence',
    'CountFunction',
    'RemarkReport',
    'Verdict',
    'WitnessedCheck',
    'betti_to_character',
    'betti_to_hilbert',
    'classify',
    'corollary_check',
    'counts',
    'h0_increment',
    'is_realizable',
    'minimal_betti',
    'remark_checks',
    'require_realizable',
    'sauer_condition',
    'scheme_degree',
    'split_betti',
    'witness_property',
]
