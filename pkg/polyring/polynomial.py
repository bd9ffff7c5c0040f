"""
Homogeneous polynomials in x0, x1, x2 and determinants of polynomial matrices.

Coefficients are exact: Python ints, or sympy QQ elements when a parsed
polynomial carries fractions. A HomogPoly of degree d stores one
coefficient per monomial of degree d in lexicographic order.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from tokenize import TokenError
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import QQ, Poly, symbols
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import PolynomialError

from core.exceptions import DegreeMismatchError, PolynomialParseError

from .field import Field

logger = logging.getLogger(__name__)

Exponents = Tuple[int, int, int]

X0, X1, X2 = symbols('x0 x1 x2')
_PARSE_TRANSFORMATIONS = standard_transformations + (convert_xor,)


@lru_cache(maxsize=None)
def monomials(d: int) -> Tuple[Exponents, ...]:
    """All exponent triples of total degree d, lexicographically descending in x0."""
    if d < 0:
        raise DegreeMismatchError(f"Degree must be nonnegative, got {d}", actual=d)
    return tuple(
        (e0, e1, d - e0 - e1)
        for e0 in range(d, -1, -1)
        for e1 in range(d - e0, -1, -1)
    )


@lru_cache(maxsize=None)
def monomial_index(d: int) -> Dict[Exponents, int]:
    return {m: i for i, m in enumerate(monomials(d))}


def _normalize(c):
    """Keep integral coefficients as int."""
    if isinstance(c, int):
        return c
    if int(c.denominator) == 1:
        return int(c.numerator)
    return c


@dataclass(frozen=True)
class HomogPoly:
    """Homogeneous form with a dense coefficient vector over monomials(degree)."""
    degree: int
    coeffs: Tuple

    def __post_init__(self):
        if self.degree < 0:
            raise DegreeMismatchError(f"Negative degree {self.degree}", actual=self.degree)
        if len(self.coeffs) != comb(self.degree + 2, 2):
            raise DegreeMismatchError(
                f"Degree {self.degree} needs {comb(self.degree + 2, 2)} coefficients, got {len(self.coeffs)}",
                expected=comb(self.degree + 2, 2), actual=len(self.coeffs),
            )
        object.__setattr__(self, 'coeffs', tuple(_normalize(c) for c in self.coeffs))

    @classmethod
    def zero(cls, degree: int) -> 'HomogPoly':
        return cls(degree, (0,) * comb(degree + 2, 2))

    @classmethod
    def from_terms(cls, degree: int, terms: Dict[Exponents, object]) -> 'HomogPoly':
        index = monomial_index(degree)
        coeffs = [0] * len(index)
        for exps, c in terms.items():
            if sum(exps) != degree:
                raise DegreeMismatchError(
                    f"Monomial {exps} is not of degree {degree}", expected=degree, actual=sum(exps)
                )
            coeffs[index[tuple(exps)]] += c
        return cls(degree, tuple(coeffs))

    @classmethod
    def monomial(cls, exps: Exponents, coeff=1) -> 'HomogPoly':
        return cls.from_terms(sum(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, i: int, power: int = 1) -> 'HomogPoly':
        exps = [0, 0, 0]
        exps[i] = power
        return cls.monomial(tuple(exps))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def terms(self) -> Iterator[Tuple[Exponents, object]]:
        """Nonzero (exponents, coefficient) pairs in lex order."""
        for exps, c in zip(monomials(self.degree), self.coeffs):
            if c != 0:
                yield exps, c

    def coefficient(self, exps: Exponents):
        return self.coeffs[monomial_index(self.degree)[tuple(exps)]]

    def _check_same_degree(self, other: 'HomogPoly'):
        if other.degree != self.degree:
            raise DegreeMismatchError(
                f"Cannot add forms of degrees {self.degree} and {other.degree}",
                expected=self.degree, actual=other.degree,
            )

    def __add__(self, other: 'HomogPoly') -> 'HomogPoly':
        self._check_same_degree(other)
        return HomogPoly(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'HomogPoly') -> 'HomogPoly':
        self._check_same_degree(other)
        return HomogPoly(self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> 'HomogPoly':
        return HomogPoly(self.degree, tuple(-c for c in self.coeffs))

    def scale(self, factor) -> 'HomogPoly':
        return HomogPoly(self.degree, tuple(factor * c for c in self.coeffs))

    def __mul__(self, other: 'HomogPoly') -> 'HomogPoly':
        return mul(self, other)

    def __pow__(self, n: int) -> 'HomogPoly':
        result = HomogPoly.monomial((0, 0, 0))
        for _ in range(n):
            result = mul(result, self)
        return result

    def evaluate(self, point: Sequence, field: Field):
        """Value at a point of the affine cone, in the field."""
        x0, x1, x2 = point
        total = 0
        for (e0, e1, e2), c in self.terms():
            total += field.reduce(c) * x0 ** e0 * x1 ** e1 * x2 ** e2
        return field.reduce(total)

    def coefficient_row(self, field: Field) -> Dict[int, object]:
        """Sparse coefficient vector over monomials(degree), reduced into the field."""
        row = {}
        for i, c in enumerate(self.coeffs):
            if c != 0:
                value = field.reduce(c)
                if not field.is_zero(value):
                    row[i] = value
        return row

    def to_text(self) -> str:
        """Sum of terms in graded reverse lexicographic order, e.g. x1^4 - x0^3*x2."""
        ordered = sorted(self.terms(), key=lambda t: (t[0][2], t[0][1], t[0][0]))
        if not ordered:
            return '0'
        pieces = []
        for exps, c in ordered:
            negative = c < 0
            magnitude = -c if negative else c
            factors = [
                f'x{i}' if e == 1 else f'x{i}^{e}'
                for i, e in enumerate(exps) if e > 0
            ]
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            term = '*'.join(factors)
            if not pieces:
                pieces.append(f'-{term}' if negative else term)
            else:
                pieces.append(f"{'-' if negative else '+'} {term}")
        return ' '.join(pieces)

    def __str__(self):
        return self.to_text()


def mul(f: HomogPoly, g: HomogPoly) -> HomogPoly:
    """Product of two forms; degrees add."""
    terms: Dict[Exponents, object] = {}
    for (a0, a1, a2), c in f.terms():
        for (b0, b1, b2), e in g.terms():
            key = (a0 + b0, a1 + b1, a2 + b2)
            terms[key] = terms.get(key, 0) + c * e
    return HomogPoly.from_terms(f.degree + g.degree, terms)


def parse_polynomial(text: str) -> HomogPoly:
    """
    Read a form in x0, x1, x2 from text; '^' and '**' both mean power.

    Raises:
        PolynomialParseError: on syntax errors, foreign symbols, a zero or
            non-homogeneous result, or non-rational coefficients
    """
    try:
        expr = parse_expr(
            text,
            local_dict={'x0': X0, 'x1': X1, 'x2': X2},
            transformations=_PARSE_TRANSFORMATIONS,
        )
    except (SympifyError, SyntaxError, TokenError, TypeError, ValueError) as e:
        raise PolynomialParseError(f"Cannot parse polynomial '{text}': {e}", text=text) from e

    foreign = expr.free_symbols - {X0, X1, X2}
    if foreign:
        raise PolynomialParseError(
            f"Unknown symbols {sorted(str(s) for s in foreign)} in '{text}'", text=text
        )
    try:
        poly = Poly(expr, X0, X1, X2)
    except PolynomialError as e:
        raise PolynomialParseError(f"'{text}' is not a polynomial: {e}", text=text) from e

    if poly.is_zero:
        raise PolynomialParseError(f"'{text}' is the zero polynomial", text=text)
    if not poly.is_homogeneous:
        raise PolynomialParseError(f"'{text}' is not homogeneous", text=text)

    terms = {}
    for exps, c in poly.terms():
        if not c.is_Rational:
            raise PolynomialParseError(f"Coefficient {c} in '{text}' is not rational", text=text)
        terms[tuple(exps)] = int(c) if c.is_Integer else QQ(int(c.p), int(c.q))
    return HomogPoly.from_terms(poly.total_degree(), terms)


# Determinants

def infer_pattern(entries: Sequence[Sequence[Optional[HomogPoly]]]) -> Tuple[List[int], List[int]]:
    """
    Row and column degrees with deg(entry_ij) = col_j - row_i.

    Unconstrained rows and columns default to 0.

    Raises:
        DegreeMismatchError: if the nonzero entries admit no such pattern
    """
    n_rows = len(entries)
    n_cols = len(entries[0]) if entries else 0
    rows: List[Optional[int]] = [None] * n_rows
    cols: List[Optional[int]] = [None] * n_cols

    for start in range(n_rows):
        if rows[start] is not None:
            continue
        rows[start] = 0
        stack = [('row', start)]
        while stack:
            kind, index = stack.pop()
            if kind == 'row':
                for j in range(n_cols):
                    entry = entries[index][j]
                    if entry is None or entry.is_zero:
                        continue
                    target = rows[index] + entry.degree
                    if cols[j] is None:
                        cols[j] = target
                        stack.append(('col', j))
                    elif cols[j] != target:
                        raise DegreeMismatchError(
                            f"Entry ({index}, {j}) breaks the degree pattern",
                            row=index, col=j, expected=cols[j] - rows[index], actual=entry.degree,
                        )
            else:
                for i in range(n_rows):
                    entry = entries[i][index]
                    if entry is None or entry.is_zero:
                        continue
                    target = cols[index] - entry.degree
                    if rows[i] is None:
                        rows[i] = target
                        stack.append(('row', i))
                    elif rows[i] != target:
                        raise DegreeMismatchError(
                            f"Entry ({i}, {index}) breaks the degree pattern",
                            row=i, col=index, expected=cols[index] - rows[i], actual=entry.degree,
                        )
    return rows, [c if c is not None else 0 for c in cols]


def det(entries: Sequence[Sequence[Optional[HomogPoly]]],
        row_degrees: Optional[Sequence[int]] = None,
        col_degrees: Optional[Sequence[int]] = None) -> HomogPoly:
    """
    Determinant of a square matrix of forms by cofactor expansion.

    Entry (i, j) is None (structural zero) or a form of degree
    col_degrees[j] - row_degrees[i]. Expansion runs along the sparsest
    remaining row or column.

    Raises:
        DegreeMismatchError: non-square input or an entry off the pattern
    """
    k = len(entries)
    if any(len(row) != k for row in entries):
        raise DegreeMismatchError(f"Determinant needs a square matrix, got {k} rows")
    if k == 0:
        return HomogPoly.monomial((0, 0, 0))

    if row_degrees is None or col_degrees is None:
        row_degrees, col_degrees = infer_pattern(entries)

    for i in range(k):
        for j in range(k):
            entry = entries[i][j]
            if entry is None or entry.is_zero:
                continue
            expected = col_degrees[j] - row_degrees[i]
            if entry.degree != expected:
                raise DegreeMismatchError(
                    f"Entry ({i}, {j}) has degree {entry.degree}, pattern needs {expected}",
                    row=i, col=j, expected=expected, actual=entry.degree,
                )

    total_degree = sum(col_degrees) - sum(row_degrees)
    if total_degree < 0:
        raise DegreeMismatchError(f"Determinant degree {total_degree} is negative", expected=0, actual=total_degree)

    result = _expand(entries, list(range(k)), list(range(k)))
    return result if result is not None else HomogPoly.zero(total_degree)


def _expand(entries, rows: List[int], cols: List[int]) -> Optional[HomogPoly]:
    """Cofactor expansion on the submatrix rows x cols; None stands for zero."""
    def nonzero(i, j):
        entry = entries[i][j]
        return entry is not None and not entry.is_zero

    if len(rows) == 1:
        return entries[rows[0]][cols[0]] if nonzero(rows[0], cols[0]) else None

    row_counts = [sum(nonzero(i, j) for j in cols) for i in rows]
    col_counts = [sum(nonzero(i, j) for i in rows) for j in cols]
    if min(row_counts) == 0 or min(col_counts) == 0:
        return None

    along_row = min(row_counts) <= min(col_counts)
    if along_row:
        pos = row_counts.index(min(row_counts))
        line = [(pos, q) for q in range(len(cols))]
    else:
        pos = col_counts.index(min(col_counts))
        line = [(q, pos) for q in range(len(rows))]

    result = None
    for r, c in line:
        i, j = rows[r], cols[c]
        if not nonzero(i, j):
            continue
        minor = _expand(entries, rows[:r] + rows[r + 1:], cols[:c] + cols[c + 1:])
        if minor is None:
            continue
        term = mul(entries[i][j], minor)
        if (r + c) % 2:
            term = -term
        result = term if result is None else result + term
    return result
