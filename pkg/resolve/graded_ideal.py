"""
Graded ideals of the polynomial ring in three variables.

Every quantity here comes from exact linear algebra on monomial
multiples of the generators; nothing is derived from a character.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from betti import BettiSequence
from charcore import HilbertTable, NumericalCharacter, character_from_delta
from charcore.character import forms_of_degree
from core.constants import SweepConstants
from core.exceptions import DegreeMismatchError, NotStabilizedError, UnexpectedDepthError
from polyring import Field, HomogPoly, default_field, monomial_index, monomials

logger = logging.getLogger(__name__)

SparseRow = Dict[int, object]

_SHIFTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _shift(exps, by):
    return (exps[0] + by[0], exps[1] + by[1], exps[2] + by[2])


def multiple_row(g: HomogPoly, m, n: int, field: Field) -> SparseRow:
    """Coefficients of m * g over monomials(n), reduced into the field."""
    index = monomial_index(n)
    row = {}
    for exps, c in g.terms():
        value = field.reduce(c)
        if not field.is_zero(value):
            row[index[_shift(exps, m)]] = value
    return row


class GradedIdeal:
    """
    Homogeneous ideal given by generators, with a per-degree dimension cache.

    Zero generators are dropped on construction.
    """

    def __init__(self, generators: Sequence[HomogPoly], field: Optional[Field] = None):
        self.field = field or default_field()
        self.generators: Tuple[HomogPoly, ...] = tuple(g for g in generators if not g.is_zero)
        self._dimensions: Dict[int, int] = {}

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"GradedIdeal({', '.join(g.to_text() for g in self.generators)}; {self.field})"

    def _span_rows(self, n: int, generators: Optional[Sequence[HomogPoly]] = None) -> List[SparseRow]:
        rows = []
        for g in (self.generators if generators is None else generators):
            if g.degree > n:
                continue
            for m in monomials(n - g.degree):
                row = multiple_row(g, m, n, self.field)
                if row:
                    rows.append(row)
        return rows

    def _rank(self, rows: List[SparseRow], n: int) -> int:
        if not rows:
            return 0
        return self.field.matrix_from_sparse(rows, len(monomials(n))).rank()

    def ideal_dimension(self, n: int) -> int:
        """dim I_n, the rank of all monomial multiples of degree n."""
        if n < 0:
            raise DegreeMismatchError(f"Degree must be nonnegative, got {n}", actual=n)
        if n not in self._dimensions:
            self._dimensions[n] = self._rank(self._span_rows(n), n)
        return self._dimensions[n]

    def contains(self, f: HomogPoly) -> bool:
        """Membership of a form in I."""
        if f.is_zero:
            return True
        rows = self._span_rows(f.degree)
        extra = f.coefficient_row(self.field)
        return self._rank(rows + [extra], f.degree) == self.ideal_dimension(f.degree)

    def hilbert_of_quotient(self, window: int) -> HilbertTable:
        """
        H(n) = binom(n+2, 2) - dim I_n over [0, window].

        Raises:
            NotStabilizedError: if H still moves at the window end
        """
        values = [forms_of_degree(n) - self.ideal_dimension(n) for n in range(window + 1)]
        top = max(self.degrees, default=0)
        if window < max(top, 1) or values[window] != values[window - 1]:
            raise NotStabilizedError(
                f"Hilbert function of {self!r} has not stabilized by degree {window}",
                window=window,
            )
        return HilbertTable.from_hilbert_values(values, values[window])

    def stabilization_degree(self, cap: int = SweepConstants.MAX_SWEEP_DEGREE) -> int:
        """
        First n >= max generator degree with Delta(n) = 0.

        Raises:
            NotStabilizedError: if none is found up to cap
        """
        start = max(max(self.degrees, default=0), 1)
        previous = forms_of_degree(start - 1) - self.ideal_dimension(start - 1)
        for n in range(start, cap + 1):
            current = forms_of_degree(n) - self.ideal_dimension(n)
            if current == previous:
                return n
            previous = current
        raise NotStabilizedError(
            f"Hilbert function of {self!r} still grows at degree {cap}", window=cap
        )

    def minimal_generators(self) -> Tuple[Dict[int, int], Tuple[HomogPoly, ...]]:
        """
        Greedy minimal generating subset, by degree.

        A generator is kept iff it raises the rank over the multiples of
        what was kept before it, so alpha_d = dim I_d - dim R_1 I_{d-1}.

        Returns:
            (alpha per degree, kept generators)
        """
        kept: List[HomogPoly] = []
        alpha: Dict[int, int] = {}
        for g in sorted(self.generators, key=lambda g: g.degree):
            n = g.degree
            rows = self._span_rows(n, kept)
            base = self._rank(rows, n)
            if self._rank(rows + [g.coefficient_row(self.field)], n) > base:
                kept.append(g)
                alpha[n] = alpha.get(n, 0) + 1
            else:
                logger.debug(f"Dropping redundant generator {g.to_text()}")
        return dict(sorted(alpha.items())), tuple(kept)

    def trim(self) -> 'GradedIdeal':
        _, kept = self.minimal_generators()
        trimmed = GradedIdeal(kept, self.field)
        trimmed._dimensions = dict(self._dimensions)
        return trimmed

    def character_of(self, cap: int = SweepConstants.MAX_SWEEP_DEGREE) -> NumericalCharacter:
        """Character read off the quotient Hilbert function."""
        window = self.stabilization_degree(cap) + SweepConstants.TABLE_MARGIN
        return character_from_delta(self.hilbert_of_quotient(window).delta)


@dataclass(frozen=True)
class ResolutionReport:
    """Minimal generator and syzygy degrees of a codimension-2 ideal."""
    alpha: Dict[int, int]
    beta: Dict[int, int]
    betti: BettiSequence
    table: HilbertTable
    generators: Tuple[HomogPoly, ...] = field(default=())

    @property
    def consistent(self) -> bool:
        """Per-degree counts match the Betti sequence and rank(F) = rank(G) + 1."""
        return (
            self.betti.alpha() == self.alpha
            and self.betti.beta() == self.beta
            and sum(self.alpha.values()) == sum(self.beta.values()) + 1
        )


class _PairBasis:
    """Index of the pairs (i, m) with deg m = d - a_i."""

    def __init__(self, degrees: Sequence[int], d: int):
        self.offsets = []
        total = 0
        for a in degrees:
            self.offsets.append(total)
            total += forms_of_degree(d - a)
        self.size = total
        self.degrees = degrees
        self.d = d

    def position(self, i: int, m) -> int:
        return self.offsets[i] + monomial_index(self.d - self.degrees[i])[m]

    def pairs(self):
        for i, a in enumerate(self.degrees):
            if self.d >= a:
                for m in monomials(self.d - a):
                    yield i, m


def syzygy_space(ideal: GradedIdeal, d: int) -> Tuple[_PairBasis, List[List]]:
    """
    Basis of K_d, the relations sum_i v_i g_i = 0 in degree d.

    Vectors are indexed by the pairs (i, m) of _PairBasis.
    """
    generators = ideal.generators
    basis = _PairBasis([g.degree for g in generators], d)
    if basis.size == 0:
        return basis, []

    index = monomial_index(d)
    columns: Dict[int, SparseRow] = {}
    for i, m in basis.pairs():
        col = basis.position(i, m)
        for exps, c in generators[i].terms():
            value = ideal.field.reduce(c)
            if not ideal.field.is_zero(value):
                columns.setdefault(index[_shift(exps, m)], {})[col] = value

    rows = [columns.get(r, {}) for r in range(len(index))]
    matrix = ideal.field.matrix_from_sparse(rows, basis.size)
    return basis, matrix.kernel_basis()


def _multiply_up(previous: _PairBasis, vectors: List[List], current: _PairBasis) -> List[SparseRow]:
    """Rows x_v * k for k in K_{d-1} and v = 0, 1, 2, in degree-d pair coordinates."""
    rows = []
    pairs = list(previous.pairs())
    for vector in vectors:
        for shift in _SHIFTS:
            row = {}
            for pos, (i, m) in enumerate(pairs):
                value = vector[pos]
                if value != 0:
                    row[current.position(i, _shift(m, shift))] = value
            if row:
                rows.append(row)
    return rows


def syzygy_betti(ideal: GradedIdeal, cap: int = SweepConstants.MAX_SWEEP_DEGREE) -> ResolutionReport:
    """
    Minimal resolution data of a zero-dimensional ideal.

    Trims the generators, then for each degree d compares dim K_d with
    the span of R_1 K_{d-1}; the difference is the number of minimal
    syzygies of degree d.

    Raises:
        NotStabilizedError: if the ideal is not zero-dimensional within the cap
        UnexpectedDepthError: if the syzygies are not free of rank r - 1
    """
    alpha, kept = ideal.minimal_generators()
    trimmed = GradedIdeal(kept, ideal.field)
    r = len(kept)
    if r < 2:
        raise UnexpectedDepthError(
            f"{r} minimal generator(s) cannot cut out a zero-dimensional scheme"
        )

    stable = trimmed.stabilization_degree(cap)
    top = stable + SweepConstants.SYZYGY_MARGIN
    degrees = [g.degree for g in kept]

    beta: Dict[int, int] = {}
    syzygy_degrees: List[int] = []
    previous_basis, previous_kernel = None, []
    for d in range(min(degrees), top + 1):
        basis, kernel = syzygy_space(trimmed, d)
        if previous_kernel:
            shifted = _multiply_up(previous_basis, previous_kernel, basis)
            spanned = trimmed.field.matrix_from_sparse(shifted, basis.size).rank()
        else:
            spanned = 0

        expected = sum(forms_of_degree(d - b) for b in syzygy_degrees if b < d)
        if spanned != expected:
            raise UnexpectedDepthError(
                f"Syzygies of {trimmed!r} are not free in degree {d}: "
                f"span {spanned}, expected {expected}",
                degree=d,
            )

        new = len(kernel) - spanned
        if new:
            beta[d] = new
            syzygy_degrees.extend([d] * new)
        previous_basis, previous_kernel = basis, kernel

    if beta.get(top):
        raise UnexpectedDepthError(f"Minimal syzygies still appear at degree {top}", degree=top)
    if len(syzygy_degrees) != r - 1:
        raise UnexpectedDepthError(
            f"Found {len(syzygy_degrees)} minimal syzygies for {r} generators, expected {r - 1}"
        )

    report = ResolutionReport(
        alpha=alpha,
        beta=beta,
        betti=BettiSequence(tuple(sorted(degrees)), tuple(syzygy_degrees)),
        table=trimmed.hilbert_of_quotient(top),
        generators=kept,
    )
    logger.info(f"Resolved {trimmed!r}: {report.betti}")
    return report


def ideal_dimension(ideal: GradedIdeal, n: int) -> int:
    return ideal.ideal_dimension(n)


def hilbert_of_quotient(ideal: GradedIdeal, window: int) -> HilbertTable:
    return ideal.hilbert_of_quotient(window)


def minimal_generators(ideal: GradedIdeal) -> Dict[int, int]:
    return ideal.minimal_generators()[0]


def trim(ideal: GradedIdeal) -> GradedIdeal:
    return ideal.trim()


def stabilization_degree(ideal: GradedIdeal, cap: int = SweepConstants.MAX_SWEEP_DEGREE) -> int:
    return ideal.stabilization_degree(cap)


def character_of(ideal: GradedIdeal) -> NumericalCharacter:
    return ideal.character_of()
