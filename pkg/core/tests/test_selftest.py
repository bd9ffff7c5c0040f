"""
Tests for the self-test sweeps.
"""

from unittest.mock import patch

from django.test import SimpleTestCase

from core.config import RunConfig
from core.services.selftest import (
    FIELD_DISCREPANCY,
    NAMED_INSTANCES,
    ORACLE_CHECKS,
    CheckSummary,
    SelfTestSuite,
    character_checks,
    ghost_case,
    round_trip_checks,
)


class CheckSummaryTest(SimpleTestCase):

    def test_keeps_smallest_counterexample(self):
        summary = CheckSummary('betti_round_trip')
        summary.record(True, [3, 2], (4, 2, (3, 2)))
        summary.record(False, [4, 2], (5, 2, (4, 2)))
        summary.record(False, [5], (5, 1, (5,)))
        summary.record(None, [1], (1, 1, (1,)))
        self.assertEqual(summary.to_dict(), {
            'name': 'betti_round_trip',
            'checked': 3,
            'failed': 2,
            'counterexample': [5],
        })


class PropertyCheckTest(SimpleTestCase):

    def test_character_checks(self):
        for entries in ((1,), (4, 2), (6, 3, 3), (7, 6, 3)):
            outcome = character_checks(entries)
            self.assertNotIn(False, outcome.values(), msg=str(entries))
        self.assertIsNone(character_checks((3, 3))['split_betti_residual'])

    def test_round_trip(self):
        outcome, outputs = round_trip_checks((4, 2), 'prime:32003', 5, 0, False)
        self.assertEqual(set(outcome), set(ORACLE_CHECKS) | {FIELD_DISCREPANCY})
        self.assertTrue(all(outcome.values()))
        self.assertEqual(outputs['a'], [2, 2, 4])
        self.assertEqual(outputs['b'], [3, 5])
        self.assertEqual(outputs['H'], [1, 3, 4, 5, 5, 5, 5])

    def test_round_trip_agrees_across_fields(self):
        _, prime = round_trip_checks((5, 3, 3), 'prime:32003', 5, 0, True)
        _, rational = round_trip_checks((5, 3, 3), 'rational', 5, 0, True)
        self.assertEqual(prime, rational)

    def test_ghost_case(self):
        self.assertTrue(ghost_case(((6, 3, 3), 5)))
        self.assertTrue(ghost_case(((1,), 2)))


class SelfTestSuiteTest(SimpleTestCase):

    def test_small_window(self):
        config = RunConfig('selftest', ghost_cases=5, rational_subsample=3, probe_trials=5)
        summary = SelfTestSuite(config).run(2, 6)
        checks = {check['name']: check for check in summary['checks']}

        self.assertTrue(summary['passed'])
        self.assertEqual(summary['characters'], 12)
        self.assertEqual(checks['ghost_invariance']['checked'], 5)
        self.assertEqual(checks['rational_agreement']['checked'], 3)
        self.assertEqual(checks['named_instances']['checked'], len(NAMED_INSTANCES))
        self.assertEqual(checks['oracle_betti']['checked'], 12)
        self.assertEqual(checks['split_betti_residual']['checked'], 2)
        self.assertEqual(checks[FIELD_DISCREPANCY], {
            'name': FIELD_DISCREPANCY, 'checked': 12, 'failed': 0, 'counterexample': None,
        })

    def test_rational_run_skips_subsample(self):
        config = RunConfig('selftest', field_spec='rational', ghost_cases=0, probe_trials=3)
        summary = SelfTestSuite(config).run(1, 3)
        checks = {check['name']: check for check in summary['checks']}
        self.assertTrue(summary['passed'])
        self.assertEqual(checks['rational_agreement']['checked'], 0)
        self.assertEqual(checks['ghost_invariance']['checked'], 0)


def _fails_over_primes(chi, field_spec, trials, seed, deterministic):
    """Round trip stub: every check passes over the rationals, oracle_betti fails over F_p."""
    outcome = {name: True for name in ORACLE_CHECKS}
    outputs = {'a': list(chi.entries), 'field': field_spec}
    if field_spec != 'rational':
        outcome['oracle_betti'] = False
    return outcome, outputs


@patch('core.services.selftest._round_trip', side_effect=_fails_over_primes)
class FieldDiscrepancyTest(SimpleTestCase):
    """A prime failure that the rationals do not reproduce still fails the run."""

    def test_round_trip_reports_discrepancy(self, mock_round_trip):
        outcome, outputs = round_trip_checks((3, 2), 'prime:32003', 5, 0, False)
        self.assertIs(outcome[FIELD_DISCREPANCY], False)
        self.assertTrue(outcome['oracle_betti'])
        self.assertEqual(outputs['field'], 'prime:32003')
        self.assertEqual(mock_round_trip.call_count, 2)

    def test_rational_run_has_nothing_to_compare(self, mock_round_trip):
        outcome, _ = round_trip_checks((3, 2), 'rational', 5, 0, False)
        self.assertIsNone(outcome[FIELD_DISCREPANCY])
        self.assertTrue(outcome['oracle_betti'])
        self.assertEqual(mock_round_trip.call_count, 1)

    def test_summary_fails(self, mock_round_trip):
        config = RunConfig('selftest', ghost_cases=0, rational_subsample=3, probe_trials=3)
        summary = SelfTestSuite(config).run(1, 3)
        checks = {check['name']: check for check in summary['checks']}

        self.assertFalse(summary['passed'])
        self.assertEqual(checks[FIELD_DISCREPANCY], {
            'name': FIELD_DISCREPANCY, 'checked': 3, 'failed': 3, 'counterexample': [1],
        })
        self.assertEqual(checks['oracle_betti']['failed'], 0)
        self.assertEqual(checks['rational_agreement']['failed'], 3)
