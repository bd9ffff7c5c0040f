from .hilbert_burch import (
    GeneratorSet,
    GradedMatrix,
    ProbeReport,
    build_exi_matrix,
    check_syzygy_identity,
    construct,
    maximal_minors,
    rank_drop_probe,
)

__all__ = [
    'GeneratorSet',
    'GradedMatrix',
    'ProbeReport',
    'build_exi_matrix',
    'check_syzygy_identity',
    'construct',
    'maximal_minors',
    'rank_drop_probe',
]
