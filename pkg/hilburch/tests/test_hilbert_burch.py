"""
Tests for the explicit Hilbert-Burch construction.
"""

from django.test import SimpleTestCase

from betti import BettiSequence, minimal_betti
from charcore import NumericalCharacter, enumerate_characters
from core.exceptions import DegreeMismatchError, NotRealizableError, RankClaimViolatedError
from polyring import HomogPoly, PrimeField, RationalField

from ..hilbert_burch import (
    GeneratorSet,
    GradedMatrix,
    build_exi_matrix,
    check_syzygy_identity,
    construct,
    maximal_minors,
    rank_drop_probe,
)

x0 = HomogPoly.variable(0)
x1 = HomogPoly.variable(1)
x2 = HomogPoly.variable(2)

EXI = BettiSequence((2, 2, 4), (3, 5))


class BuildMatrixTest(SimpleTestCase):

    def test_worked_example(self):
        matrix = build_exi_matrix(EXI)
        self.assertEqual(matrix.to_text(), [['x1', 'x0^3'], ['x2', 'x1^3'], ['0', 'x2']])
        self.assertEqual(matrix.k, 2)

    def test_single_point(self):
        matrix = build_exi_matrix(BettiSequence((1, 1), (2,)))
        self.assertEqual(matrix.to_text(), [['x1'], ['x2']])

    def test_not_realizable(self):
        with self.assertRaises(NotRealizableError):
            build_exi_matrix(BettiSequence((1, 1), (3,)))

    def test_entry_degrees_positive(self):
        for character in enumerate_characters(4, 18):
            matrix = build_exi_matrix(minimal_betti(character))
            for i, row in enumerate(matrix.entries):
                for j, entry in enumerate(row):
                    if entry is not None:
                        self.assertGreater(entry.degree, 0)
                        self.assertEqual(entry.degree, matrix.b[j] - matrix.a[i])

    def test_graded_matrix_rejects_bad_degree(self):
        with self.assertRaises(DegreeMismatchError):
            GradedMatrix((1, 1), (2,), ((x0 ** 2,), (x1,)))
        with self.assertRaises(DegreeMismatchError):
            GradedMatrix((1, 2), (2,), ((x0,), (x1,)))


class MinorsTest(SimpleTestCase):

    def test_worked_example(self):
        generators = maximal_minors(build_exi_matrix(EXI))
        self.assertEqual(generators.to_text(), ['x2^2', '-x1*x2', 'x1^4 - x0^3*x2'])

    def test_small_cases(self):
        _, generators = construct(BettiSequence((1, 1), (2,)))
        self.assertEqual(generators.to_text(), ['x2', '-x1'])
        _, generators = construct(BettiSequence((2, 2), (4,)))
        self.assertEqual(generators.to_text(), ['x2^2', '-x1^2'])

    def test_degrees_and_syzygy_identity(self):
        for character in enumerate_characters(4, 16):
            betti = minimal_betti(character)
            matrix, generators = construct(betti)
            self.assertEqual(tuple(g.degree for g in generators.generators), betti.a)
            self.assertTrue(check_syzygy_identity(matrix, generators))

    def test_syzygy_identity_detects_wrong_generator(self):
        matrix, generators = construct(EXI)
        tampered = GeneratorSet((x2 ** 2 + x1 ** 2,) + generators.generators[1:], matrix)
        with self.assertLogs('hilburch.hilbert_burch', level='WARNING'):
            self.assertFalse(check_syzygy_identity(matrix, tampered))


class RankProbeTest(SimpleTestCase):

    def test_scalar_ranks(self):
        matrix = build_exi_matrix(EXI)
        field = PrimeField(32003)
        self.assertEqual(matrix.evaluate((1, 0, 0), field).rank(), 1)
        self.assertEqual(matrix.evaluate((1, 1, 1), field).rank(), 2)
        self.assertEqual(build_exi_matrix(BettiSequence((1, 1), (2,))).evaluate((0, 1, 0), field).rank(), 1)

    def test_random_probe(self):
        report = rank_drop_probe(build_exi_matrix(EXI), trials=25, seed=0)
        self.assertEqual(report.points_checked, 25)
        self.assertEqual(report.expected_rank, 2)
        self.assertEqual(report.rank_at_support, 1)
        self.assertFalse(report.deterministic)

    def test_probe_is_seeded(self):
        matrix = build_exi_matrix(minimal_betti(NumericalCharacter((6, 3, 3))))
        self.assertEqual(rank_drop_probe(matrix, seed=4), rank_drop_probe(matrix, seed=4))

    def test_rational_probe(self):
        report = rank_drop_probe(build_exi_matrix(EXI), trials=5, seed=1, field=RationalField())
        self.assertEqual(report.points_checked, 5)

    def test_deterministic_probe(self):
        for character in enumerate_characters(3, 10):
            report = rank_drop_probe(build_exi_matrix(minimal_betti(character)), deterministic=True)
            self.assertTrue(report.deterministic)
            self.assertEqual(report.points_checked, 0)

    def test_no_rank_drop_at_support(self):
        matrix = GradedMatrix((1, 1), (2,), ((x0,), (x1,)))
        with self.assertRaises(RankClaimViolatedError):
            rank_drop_probe(matrix)
