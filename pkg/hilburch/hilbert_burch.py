"""
Explicit Hilbert-Burch matrices for realizable Betti data.

The matrix is tridiagonal with monomial entries x2, x1, x0 powers on the
sub-, main and super-diagonal. Its signed maximal minors generate the
ideal of a scheme supported at the single point (1:0:0).
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from betti import BettiSequence, require_realizable, scheme_degree
from core.constants import ProbeConstants
from core.exceptions import DegreeMismatchError, RankClaimViolatedError
from polyring import Field, HomogPoly, ScalarMatrix, default_field, det
from resolve import GradedIdeal

logger = logging.getLogger(__name__)

SUPPORT_POINT = (1, 0, 0)

Entry = Optional[HomogPoly]


@dataclass(frozen=True)
class GradedMatrix:
    """
    (k+1) x k matrix of forms; entry (i, j) has degree b_j - a_i.

    Entries with b_j <= a_i must be structural zeros (None).
    """
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    entries: Tuple[Tuple[Entry, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(row) for row in self.entries)
        if len(entries) != len(self.a) or any(len(row) != len(self.b) for row in entries):
            raise DegreeMismatchError(
                f"Matrix shape does not match {len(self.a)} row and {len(self.b)} column degrees"
            )
        for i, row in enumerate(entries):
            for j, entry in enumerate(row):
                if entry is None or entry.is_zero:
                    continue
                expected = self.b[j] - self.a[i]
                if expected <= 0 or entry.degree != expected:
                    raise DegreeMismatchError(
                        f"Entry ({i}, {j}) has degree {entry.degree}, pattern allows {expected}",
                        row=i, col=j, expected=expected, actual=entry.degree,
                    )
        object.__setattr__(self, 'entries', entries)

    @property
    def k(self) -> int:
        return len(self.b)

    def entry(self, i: int, j: int) -> Entry:
        return self.entries[i][j]

    def evaluate(self, point: Sequence, field: Field) -> ScalarMatrix:
        """Scalar matrix of entry values at a point."""
        values = [
            [0 if e is None else e.evaluate(point, field) for e in row]
            for row in self.entries
        ]
        return field.matrix(values)

    def to_text(self) -> List[List[str]]:
        return [['0' if e is None else e.to_text() for e in row] for row in self.entries]


@dataclass(frozen=True)
class GeneratorSet:
    """Signed maximal minors, deg(generators[i]) = a_i."""
    generators: Tuple[HomogPoly, ...]
    matrix: GradedMatrix

    def to_text(self) -> List[str]:
        return [g.to_text() for g in self.generators]


@dataclass(frozen=True)
class ProbeReport:
    trials: int
    seed: Optional[int]
    deterministic: bool
    expected_rank: int
    rank_at_support: int
    points_checked: int


def build_exi_matrix(betti: BettiSequence) -> GradedMatrix:
    """
    Tridiagonal monomial matrix realizing the Betti sequence.

    phi_{j+1,j} = x2^(b_j - a_{j+1}), phi_{j,j} = x1^(b_j - a_j) and
    phi_{j-1,j} = x0^(b_j - a_{j-1}); everything else is zero.

    Raises:
        NotRealizableError: if the sequence fails the existence conditions
    """
    require_realizable(betti)
    a, b, k = betti.a, betti.b, betti.k
    entries: List[List[Entry]] = [[None] * k for _ in range(k + 1)]
    for j in range(k):
        entries[j + 1][j] = HomogPoly.variable(2, b[j] - a[j + 1])
        entries[j][j] = HomogPoly.variable(1, b[j] - a[j])
        if j >= 1:
            entries[j - 1][j] = HomogPoly.variable(0, b[j] - a[j - 1])
    return GradedMatrix(a, b, tuple(tuple(row) for row in entries))


def maximal_minors(matrix: GradedMatrix) -> GeneratorSet:
    """Delta_i = (-1)^(i+1) det(matrix without row i), 1-based i."""
    generators = []
    rows = list(range(matrix.k + 1))
    for i in rows:
        kept = [r for r in rows if r != i]
        minor = det(
            [list(matrix.entries[r]) for r in kept],
            row_degrees=[matrix.a[r] for r in kept],
            col_degrees=list(matrix.b),
        )
        generators.append(-minor if i % 2 else minor)
    return GeneratorSet(tuple(generators), matrix)


def check_syzygy_identity(matrix: GradedMatrix, generator_set: GeneratorSet) -> bool:
    """sum_i phi_ij * Delta_i = 0 for every column j."""
    for j in range(matrix.k):
        total = HomogPoly.zero(matrix.b[j])
        for i, g in enumerate(generator_set.generators):
            entry = matrix.entry(i, j)
            if entry is not None and not g.is_zero:
                total = total + entry * g
        if not total.is_zero:
            logger.warning(f"Column {j} does not annihilate the minors: {total.to_text()}")
            return False
    return True


def _is_support_multiple(point, field: Field) -> bool:
    return field.is_zero(point[1]) and field.is_zero(point[2])


def rank_drop_probe(matrix: GradedMatrix,
                    trials: int = ProbeConstants.DEFAULT_TRIALS,
                    seed: int = ProbeConstants.DEFAULT_SEED,
                    field: Optional[Field] = None,
                    deterministic: bool = False) -> ProbeReport:
    """
    Check that the matrix has rank k off (1:0:0) and drops rank there.

    The random mode samples `trials` points with a seeded generator. The
    deterministic mode instead shows x1^d and x2^d lie in the ideal of
    minors, d the length of the scheme, which pins the support to (1:0:0).

    Raises:
        RankClaimViolatedError: with the witnessing point
    """
    field = field or default_field()
    k = matrix.k

    rank_at_support = matrix.evaluate(SUPPORT_POINT, field).rank()
    if rank_at_support >= k:
        raise RankClaimViolatedError(
            f"Rank at (1:0:0) is {rank_at_support}, expected a drop below {k}",
            point=list(SUPPORT_POINT), rank=rank_at_support, expected=k - 1,
        )

    if deterministic:
        ideal = GradedIdeal(maximal_minors(matrix).generators, field)
        d = scheme_degree(BettiSequence(matrix.a, matrix.b))
        for variable in (1, 2):
            power = HomogPoly.variable(variable, d)
            if not ideal.contains(power):
                raise RankClaimViolatedError(
                    f"x{variable}^{d} is not in the ideal of minors, support is not (1:0:0)",
                    point=None, rank=None, expected=k,
                )
        return ProbeReport(
            trials=0, seed=None, deterministic=True, expected_rank=k,
            rank_at_support=rank_at_support, points_checked=0,
        )

    rng = np.random.default_rng(seed)
    checked = 0
    while checked < trials:
        point = field.random_point(rng)
        if _is_support_multiple(point, field):
            continue
        rank = matrix.evaluate(point, field).rank()
        if rank != k:
            raise RankClaimViolatedError(
                f"Rank {rank} at {point} off the support, expected {k}",
                point=[str(x) for x in point], rank=rank, expected=k,
            )
        checked += 1

    logger.debug(f"Rank probe passed on {checked} points")
    return ProbeReport(
        trials=trials, seed=seed, deterministic=False, expected_rank=k,
        rank_at_support=rank_at_support, points_checked=checked,
    )


def construct(betti: BettiSequence) -> Tuple[GradedMatrix, GeneratorSet]:
    """Build the matrix and its generators in one step."""
    matrix = build_exi_matrix(betti)
    return matrix, maximal_minors(matrix)
