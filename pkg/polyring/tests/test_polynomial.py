"""
Tests for homogeneous polynomials, parsing and determinants.
"""

import random

from django.test import SimpleTestCase
from sympy import QQ

from core.exceptions import DegreeMismatchError, PolynomialParseError

from ..field import PrimeField, RationalField
from ..polynomial import HomogPoly, det, infer_pattern, monomials, mul, parse_polynomial

x0 = HomogPoly.variable(0)
x1 = HomogPoly.variable(1)
x2 = HomogPoly.variable(2)


def random_form(rng, degree):
    return HomogPoly(degree, tuple(rng.randint(-3, 3) for _ in monomials(degree)))


class MonomialTest(SimpleTestCase):

    def test_monomial_bases(self):
        self.assertEqual(monomials(0), ((0, 0, 0),))
        self.assertEqual(monomials(1), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        self.assertEqual(len(monomials(2)), 6)
        self.assertEqual(len(monomials(7)), 36)

    def test_negative_degree(self):
        with self.assertRaises(DegreeMismatchError):
            monomials(-1)


class HomogPolyTest(SimpleTestCase):

    def test_coefficient_length_checked(self):
        with self.assertRaises(DegreeMismatchError):
            HomogPoly(1, (1, 0))

    def test_zero_per_degree(self):
        self.assertTrue(HomogPoly.zero(3).is_zero)
        self.assertNotEqual(HomogPoly.zero(2), HomogPoly.zero(3))

    def test_products(self):
        self.assertEqual(mul(x1, x2), HomogPoly.monomial((0, 1, 1)))
        square = (x1 + x2) ** 2
        self.assertEqual(square.coefficient((0, 2, 0)), 1)
        self.assertEqual(square.coefficient((0, 1, 1)), 2)
        self.assertEqual(square.coefficient((0, 0, 2)), 1)
        product = mul(x0 ** 2, HomogPoly.zero(3))
        self.assertTrue(product.is_zero)
        self.assertEqual(product.degree, 5)

    def test_addition_needs_same_degree(self):
        with self.assertRaises(DegreeMismatchError):
            x0 + x0 ** 2

    def test_mul_properties(self):
        rng = random.Random(7)
        for _ in range(20):
            f, g, h = (random_form(rng, rng.randint(0, 3)) for _ in range(3))
            self.assertEqual(mul(f, g), mul(g, f))
            self.assertEqual(mul(mul(f, g), h), mul(f, mul(g, h)))
            self.assertEqual(mul(f, g).degree, f.degree + g.degree)

    def test_evaluate(self):
        f = x1 ** 4 - (x0 ** 3) * x2
        self.assertEqual(f.evaluate((1, 1, 1), PrimeField(7)), 0)
        self.assertEqual(f.evaluate((1, 2, 3), PrimeField(7)), 6)
        self.assertEqual(f.evaluate((QQ(1), QQ(2), QQ(3)), RationalField()), QQ(13))

    def test_to_text(self):
        self.assertEqual((x1 ** 4 - (x0 ** 3) * x2).to_text(), 'x1^4 - x0^3*x2')
        self.assertEqual(((x1 + x2) ** 2).to_text(), 'x1^2 + 2*x1*x2 + x2^2')
        self.assertEqual((-(x1 * x2)).to_text(), '-x1*x2')
        self.assertEqual(HomogPoly.zero(2).to_text(), '0')
        self.assertEqual(HomogPoly.monomial((0, 0, 0), 5).to_text(), '5')


class ParseTest(SimpleTestCase):

    def test_parse_with_caret(self):
        self.assertEqual(parse_polynomial('x1^4 - x0^3*x2'), x1 ** 4 - (x0 ** 3) * x2)
        self.assertEqual(parse_polynomial('x2**2'), x2 ** 2)

    def test_parse_rational_coefficient(self):
        f = parse_polynomial('x0/2 + x1')
        self.assertEqual(f.coefficient((1, 0, 0)), QQ(1, 2))
        self.assertEqual(f.coefficient((0, 1, 0)), 1)

    def test_rejections(self):
        for text in ('x0 + x1^2', '0', 'x0 + y', 'x0 +', 'sqrt(2)*x0', '1/x0'):
            with self.assertRaises(PolynomialParseError, msg=text):
                parse_polynomial(text)


class DeterminantTest(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(det([[x2, x1 ** 3], [None, x2]]), x2 ** 2)
        self.assertEqual(det([[x1, x0 ** 3], [x2, x1 ** 3]]), x1 ** 4 - (x0 ** 3) * x2)
        self.assertEqual(det([[x0]]), x0)

    def test_pattern_mismatch(self):
        with self.assertRaises(DegreeMismatchError):
            det([[x1, x0], [x2, x1 ** 2]])
        with self.assertRaises(DegreeMismatchError):
            det([[x0, x1]])

    def test_infer_pattern(self):
        rows, cols = infer_pattern([[x1, x0 ** 3], [x2, x1 ** 3]])
        self.assertEqual([c - r for r in rows for c in cols], [1, 3, 1, 3])

    def test_alternating_and_linear(self):
        rng = random.Random(3)
        rows = [0, 1, 1]
        cols = [2, 3, 3]
        entries = [[random_form(rng, c - r) for c in cols] for r in rows]
        base = det(entries, rows, cols)

        swapped = [entries[1], entries[0], entries[2]]
        self.assertEqual(det(swapped, [rows[1], rows[0], rows[2]], cols), -base)

        scaled = [row[:] for row in entries]
        scaled[2] = [e.scale(3) for e in entries[2]]
        self.assertEqual(det(scaled, rows, cols), base.scale(3))
