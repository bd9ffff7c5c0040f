"""
Tests for Betti sequences and the character/Betti conversions.
"""

from django.test import SimpleTestCase

from charcore import NumericalCharacter, degree, enumerate_characters, hilbert_table, split_at
from core.exceptions import BettiSequenceError, NegativeDimensionError, NotRealizableError

from ..sequence import (
    BettiSequence,
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


def chi(*entries):
    return NumericalCharacter(tuple(entries))


def betti(a, b):
    return BettiSequence(tuple(a), tuple(b))


class BettiSequenceTest(SimpleTestCase):
    """Construction rules of BettiSequence."""

    def test_sorted_on_construction(self):
        sequence = betti([4, 2, 2], [5, 3])
        self.assertEqual(sequence.a, (2, 2, 4))
        self.assertEqual(sequence.b, (3, 5))
        self.assertEqual(sequence.k, 2)

    def test_length_mismatch(self):
        with self.assertRaises(BettiSequenceError):
            betti([1, 1], [2, 3])
        with self.assertRaises(BettiSequenceError):
            betti([1], [])

    def test_degree_bounds(self):
        with self.assertRaises(BettiSequenceError):
            betti([0, 1], [1])
        with self.assertRaises(BettiSequenceError):
            betti([1, 1], [1])

    def test_alpha_beta_and_ghosts(self):
        sequence = betti([2, 2, 4], [3, 5])
        self.assertEqual(sequence.alpha(), {2: 2, 4: 1})
        self.assertEqual(sequence.beta(), {3: 1, 5: 1})
        ghosted = sequence.with_ghosts(4, 2)
        self.assertEqual(ghosted.a, (2, 2, 4, 4, 4))
        self.assertEqual(ghosted.b, (3, 4, 4, 5))


class MinimalBettiTest(SimpleTestCase):
    """Character to Betti numbers."""

    def test_counts(self):
        c = counts(chi(4, 2))
        self.assertEqual((c(2), c(3), c(4)), (1, 0, 1))
        self.assertEqual(counts(chi(3, 3))(3), 2)
        self.assertEqual(c.total, 2)

    def test_named_values(self):
        self.assertEqual(minimal_betti(chi(1)), betti([1, 1], [2]))
        self.assertEqual(minimal_betti(chi(3, 2)), betti([2, 2], [4]))
        self.assertEqual(minimal_betti(chi(3, 3)), betti([2, 3, 3], [4, 4]))
        self.assertEqual(minimal_betti(chi(4, 2)), betti([2, 2, 4], [3, 5]))
        self.assertEqual(minimal_betti(chi(6, 3, 3)), betti([3, 3, 3, 6], [4, 4, 7]))

    def test_ghost_injection(self):
        self.assertEqual(minimal_betti(chi(3, 2), ghosts=(3, 1)), betti([2, 2, 3], [3, 4]))

    def test_always_realizable_and_round_trips(self):
        for character in enumerate_characters(4, 20):
            sequence = minimal_betti(character)
            self.assertTrue(is_realizable(sequence), msg=str(character))
            self.assertEqual(scheme_degree(sequence), degree(character))
            self.assertEqual(betti_to_character(sequence), character)


class RealizabilityTest(SimpleTestCase):

    def test_realizable(self):
        self.assertTrue(is_realizable(betti([2, 2, 4], [3, 5])))

    def test_sum_clause(self):
        check = is_realizable(betti([1, 1], [3]))
        self.assertFalse(check)
        self.assertEqual(check.clause, NotRealizableError.SUM)

    def test_order_clause_with_equality(self):
        check = is_realizable(betti([2, 4, 4], [4, 6]))
        self.assertFalse(check)
        self.assertEqual(check.clause, NotRealizableError.ORDER)
        self.assertEqual(check.index, 1)
        self.assertTrue(check.equality)

    def test_require_realizable(self):
        with self.assertRaises(NotRealizableError) as ctx:
            require_realizable(betti([1, 1], [3]))
        self.assertEqual(ctx.exception.error_code, 'NOT_REALIZABLE_SUM')


class BettiToHilbertTest(SimpleTestCase):

    def test_h0_values(self):
        table = betti_to_hilbert(betti([2, 2], [4]), window=4)
        self.assertEqual(table.h0[2], 2)
        self.assertEqual(table.h0[4], 11)
        self.assertEqual(table.H, (1, 3, 4, 4, 4))

    def test_single_point(self):
        self.assertEqual(set(betti_to_hilbert(betti([1, 1], [2]), window=6).H), {1})

    def test_matches_hilbert_table(self):
        for character in enumerate_characters(4, 18):
            window = character.n0 + 2
            self.assertEqual(
                betti_to_hilbert(minimal_betti(character), window=window).H,
                hilbert_table(character).H,
            )

    def test_negative_dimension(self):
        # sums agree but H drops from 1 to 0 at degree 2
        with self.assertRaises(NegativeDimensionError):
            betti_to_hilbert(betti([1, 1, 4], [3, 3]))

    def test_ghost_pairs_are_invisible(self):
        base = minimal_betti(chi(6, 3, 3))
        for t in range(2, 10):
            window = max(base.b[-1], t) + 2
            self.assertEqual(
                betti_to_hilbert(base, window).H,
                betti_to_hilbert(base.with_ghosts(t), window).H,
            )

    def test_character_round_trip(self):
        self.assertEqual(betti_to_character(betti([2, 2], [4])), chi(3, 2))
        self.assertEqual(betti_to_character(betti([1, 1], [2])), chi(1))
        self.assertEqual(betti_to_character(betti([2, 2, 4], [3, 5])), chi(4, 2))


class IncrementAndSplitTest(SimpleTestCase):

    def test_h0_increment_matches_table(self):
        for character in enumerate_characters(4, 16):
            table = hilbert_table(character)
            for n in range(table.window):
                self.assertEqual(h0_increment(character, n), table.h0[n + 1] - table.h0[n])

    def test_split_betti_examples(self):
        self.assertEqual(split_betti(minimal_betti(chi(4, 2)), 1), (1, betti([1, 1], [2])))
        self.assertEqual(split_betti(minimal_betti(chi(6, 3, 3)), 2), (1, betti([2, 2, 2], [3, 3])))
        self.assertEqual(split_betti(minimal_betti(chi(7, 6, 3)), 1), (2, betti([1, 1], [2])))

    def test_split_betti_residual_is_split_character(self):
        character = chi(9, 6, 3)
        t, residual = split_betti(minimal_betti(character), 1)
        self.assertEqual(t, 2)
        self.assertEqual(betti_to_character(residual), split_at(character, t).residual)

    def test_split_betti_without_block(self):
        with self.assertRaises(NotRealizableError):
            split_betti(minimal_betti(chi(3, 3)), 1)
        with self.assertRaises(NotRealizableError):
            split_betti(minimal_betti(chi(4, 2)), 2)
