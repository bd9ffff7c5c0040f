"""
Coefficient fields and exact rank/kernel computations.

Two fields are supported: a prime field F_p with numpy int64 elimination,
and the rationals through sympy's DomainMatrix over QQ. Polynomial
coefficients are always stored exactly (int or QQ) and reduced into the
field only when a matrix is built or a point is evaluated.
"""

import logging
from abc import ABC, abstractmethod
from typing import Dict, List, Sequence, Tuple

import numpy as np
from sympy import QQ, isprime
from sympy.polys.matrices import DomainMatrix

from core.constants import FieldConstants, ProbeConstants
from core.exceptions import AlgebraError, ConfigurationError

logger = logging.getLogger(__name__)

SparseRow = Dict[int, object]


class ScalarMatrix(ABC):
    """Rectangular matrix over a field."""

    def __init__(self, nrows: int, ncols: int):
        self.nrows = nrows
        self.ncols = ncols

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    @abstractmethod
    def rank(self) -> int:
        pass

    @abstractmethod
    def kernel_basis(self) -> List[List]:
        """Basis of the right kernel, cols - rank vectors of length cols."""
        pass


class Field(ABC):
    """Coefficient field."""

    spec: str = ''

    @abstractmethod
    def reduce(self, value):
        """Map an exact int or rational into the field."""
        pass

    @abstractmethod
    def matrix_from_sparse(self, rows: Sequence[SparseRow], ncols: int) -> ScalarMatrix:
        pass

    @abstractmethod
    def random_point(self, rng: np.random.Generator) -> Tuple:
        """Random point of the affine 3-space over the field."""
        pass

    @abstractmethod
    def is_zero(self, value) -> bool:
        pass

    def matrix(self, dense: Sequence[Sequence]) -> ScalarMatrix:
        """Build a matrix from a list of rows."""
        rows = [{j: v for j, v in enumerate(row) if v != 0} for row in dense]
        ncols = len(dense[0]) if dense else 0
        return self.matrix_from_sparse(rows, ncols)

    def __str__(self):
        return self.spec

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)


class PrimeMatrix(ScalarMatrix):
    """Dense int64 matrix over F_p."""

    def __init__(self, data: np.ndarray, p: int):
        super().__init__(*data.shape)
        self.data = data
        self.p = p
        self._rref = None

    def _reduced(self) -> Tuple[np.ndarray, List[int]]:
        if self._rref is None:
            self._rref = rref_mod(self.data, self.p)
        return self._rref

    def rank(self) -> int:
        if self.nrows == 0 or self.ncols == 0:
            return 0
        return len(self._reduced()[1])

    def kernel_basis(self) -> List[List[int]]:
        n = self.ncols
        if self.nrows == 0:
            return [[1 if j == f else 0 for j in range(n)] for f in range(n)]
        R, pivots = self._reduced()
        p = self.p
        pivot_set = set(pivots)
        basis = []
        for free in (j for j in range(n) if j not in pivot_set):
            vector = [0] * n
            vector[free] = 1
            for row, col in enumerate(pivots):
                vector[col] = int(-R[row, free]) % p
            basis.append(vector)
        return basis


def rref_mod(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over F_p. Returns (R, pivot_cols)."""
    A = np.array(matrix, dtype=np.int64) % p
    m, n = A.shape
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nonzero = np.nonzero(A[r:, c])[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        factors = A[:, c].copy()
        factors[r] = 0
        others = np.nonzero(factors)[0]
        if others.size:
            A[others] = (A[others] - np.outer(factors[others], A[r]) % p) % p
        pivots.append(c)
        r += 1
    return A, pivots


class PrimeField(Field):
    """F_p for an odd prime p < 2^31."""

    def __init__(self, p: int = FieldConstants.DEFAULT_PRIME):
        if not isinstance(p, int) or p <= 2 or p > FieldConstants.MAX_PRIME or not isprime(p):
            raise ConfigurationError(f"Field characteristic {p} is not an odd prime below 2^31",
                                     config_key='field')
        self.p = p
        self.spec = f'prime:{p}'

    def reduce(self, value) -> int:
        if isinstance(value, int):
            return value % self.p
        numerator, denominator = int(value.numerator), int(value.denominator)
        if denominator % self.p == 0:
            raise AlgebraError(f"Denominator of {value} vanishes modulo {self.p}")
        return numerator * pow(denominator, self.p - 2, self.p) % self.p

    def is_zero(self, value) -> bool:
        return int(value) % self.p == 0

    def matrix_from_sparse(self, rows: Sequence[SparseRow], ncols: int) -> PrimeMatrix:
        data = np.zeros((len(rows), ncols), dtype=np.int64)
        for i, row in enumerate(rows):
            for j, value in row.items():
                data[i, j] = self.reduce(value)
        return PrimeMatrix(data, self.p)

    def random_point(self, rng: np.random.Generator) -> Tuple[int, int, int]:
        return tuple(int(x) for x in rng.integers(0, self.p, size=3))


class RationalMatrix(ScalarMatrix):
    """Sparse DomainMatrix over QQ."""

    def __init__(self, matrix: DomainMatrix):
        super().__init__(*matrix.shape)
        self.matrix = matrix

    def rank(self) -> int:
        if self.nrows == 0 or self.ncols == 0:
            return 0
        return self.matrix.rank()

    def kernel_basis(self) -> List[List]:
        n = self.ncols
        if self.nrows == 0:
            return [[QQ(1) if j == f else QQ(0) for j in range(n)] for f in range(n)]
        if n == 0:
            return []
        # rows of the returned matrix span the kernel
        return self.matrix.to_field().nullspace().to_list()


class RationalField(Field):
    """Q, exact arithmetic through sympy."""

    spec = FieldConstants.RATIONAL_SPEC

    def reduce(self, value):
        if isinstance(value, int):
            return QQ(value)
        return QQ(int(value.numerator), int(value.denominator))

    def is_zero(self, value) -> bool:
        return value == 0

    def matrix_from_sparse(self, rows: Sequence[SparseRow], ncols: int) -> RationalMatrix:
        data = {}
        for i, row in enumerate(rows):
            reduced = {j: self.reduce(v) for j, v in row.items() if v != 0}
            if reduced:
                data[i] = reduced
        return RationalMatrix(DomainMatrix(data, (len(rows), ncols), QQ))

    def random_point(self, rng: np.random.Generator) -> Tuple:
        bound = ProbeConstants.RATIONAL_COORDINATE_BOUND
        return tuple(QQ(int(x)) for x in rng.integers(-bound, bound + 1, size=3))


def field_from_spec(spec: str) -> Field:
    """
    Parse 'prime:<p>' or 'rational'.

    Raises:
        ConfigurationError: on anything else
    """
    text = (spec or '').strip().lower()
    if text == FieldConstants.RATIONAL_SPEC:
        return RationalField()
    if text.startswith('prime:'):
        try:
            p = int(text.split(':', 1)[1])
        except ValueError:
            raise ConfigurationError(f"Invalid field specification '{spec}'", config_key='field')
        return PrimeField(p)
    raise ConfigurationError(
        f"Invalid field specification '{spec}', expected 'prime:<p>' or 'rational'",
        config_key='field',
    )


def default_field() -> PrimeField:
    return PrimeField(FieldConstants.DEFAULT_PRIME)
