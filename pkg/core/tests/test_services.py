"""
Tests for run configuration, input parsing, rendering and the orchestrator.
"""

import json
import operator

from django.test import SimpleTestCase, override_settings

from charcore import NumericalCharacter
from core.config import RunConfig
from core.exceptions import (
    BettiSequenceError,
    CharacterValidationError,
    ConfigurationError,
    InconsistentHypothesisError,
    NotRealizableError,
)
from core.services import (
    BatchRunner,
    InputError,
    PlaneCharOrchestrator,
    parse_betti,
    parse_character,
    parse_generators,
    render,
)
from core.services.orchestrator import enumeration_row
from polyring import PrimeField, RationalField


class RunConfigTest(SimpleTestCase):
    """Validation and option merging of RunConfig."""

    def test_defaults(self):
        config = RunConfig('analyze')
        self.assertEqual(config.field, PrimeField(32003))
        self.assertEqual(config.output_format, 'json')
        self.assertEqual(config.jobs, 1)

    def test_rejects_bad_values(self):
        for kwargs in ({'jobs': 0}, {'seed': -1}, {'output_format': 'xml'},
                       {'field_spec': 'complex'}, {'probe_trials': 'many'}, {'s_max': 0}):
            with self.assertRaises(ConfigurationError, msg=str(kwargs)):
                RunConfig('analyze', **kwargs)

    @override_settings(PLANECHAR_SETTINGS={'DEFAULT_SEED': 9, 'DEFAULT_JOBS': 3})
    def test_settings_fill_missing_options(self):
        config = RunConfig.from_options('construct', {'field': 'rational', 'seed': None, 'jobs': None})
        self.assertEqual(config.seed, 9)
        self.assertEqual(config.jobs, 3)
        self.assertEqual(config.field, RationalField())

    @override_settings(PLANECHAR_SETTINGS={'DEFAULT_SEED': 9})
    def test_options_override_settings(self):
        config = RunConfig.from_options('construct', {'seed': 4, 'trials': 7, 'deterministic': True})
        self.assertEqual(config.seed, 4)
        self.assertEqual(config.probe_trials, 7)
        self.assertTrue(config.deterministic_probe)


class ParseInputTest(SimpleTestCase):

    def test_character_forms(self):
        self.assertEqual(parse_character('[4,2]'), NumericalCharacter((4, 2)))
        self.assertEqual(parse_character({'character': [3, 3]}), NumericalCharacter((3, 3)))

    def test_character_rejections(self):
        with self.assertRaises(CharacterValidationError) as ctx:
            parse_character('[4, "a"]')
        self.assertEqual(ctx.exception.error_code, 'CHARACTER_NOT_INTEGER')
        with self.assertRaises(CharacterValidationError) as ctx:
            parse_character('[]')
        self.assertEqual(ctx.exception.error_code, 'CHARACTER_EMPTY')
        with self.assertRaises(CharacterValidationError):
            parse_character('[2, 3]')
        for raw in ('not json', '5'):
            with self.assertRaises(InputError, msg=raw):
                parse_character(raw)

    def test_betti(self):
        betti = parse_betti('{"a": [1, 1], "b": [2]}')
        self.assertEqual((betti.a, betti.b), ((1, 1), (2,)))
        with self.assertRaises(BettiSequenceError):
            parse_betti('{"a": [1], "b": [2]}')
        with self.assertRaises(InputError):
            parse_betti('[1, 1]')

    def test_generators(self):
        self.assertEqual(parse_generators('x1, x2'), ['x1', 'x2'])
        self.assertEqual(parse_generators('["x2^2", "x1^2"]'), ['x2^2', 'x1^2'])
        self.assertEqual(parse_generators('{"generators": ["x1", "x2"]}'), ['x1', 'x2'])
        with self.assertRaises(InputError):
            parse_generators('{"generators": []}')


class BatchRunnerTest(SimpleTestCase):

    def test_inline_and_pool_agree(self):
        items = list(range(12))
        self.assertEqual(BatchRunner(1).map(operator.pow, items, 2), [n * n for n in items])
        self.assertEqual(BatchRunner(2).map(operator.pow, items, 2), [n * n for n in items])

    def test_pool_keeps_input_order(self):
        characters = [(5,), (3, 2), (4, 2), (3, 3), (1,)]
        self.assertEqual(
            BatchRunner(2).map(enumeration_row, characters),
            BatchRunner(1).map(enumeration_row, characters),
        )

    def test_jobs_floor(self):
        self.assertEqual(BatchRunner(0).jobs, 1)


class OrchestratorTest(SimpleTestCase):

    def setUp(self):
        self.orchestrator = PlaneCharOrchestrator()

    def test_analyze_connected(self):
        report = self.orchestrator.analyze(NumericalCharacter((3, 2)))
        self.assertEqual(report['degree'], 4)
        self.assertTrue(report['connected'])
        self.assertEqual(report['betti']['a'], [2, 2])
        self.assertEqual(report['betti']['b'], [4])
        self.assertTrue(report['verdict']['smoothable'])
        self.assertIsNone(report['corollary'])

    def test_analyze_gap(self):
        report = self.orchestrator.analyze(NumericalCharacter((4, 2)))
        self.assertEqual(report['gaps'], [1])
        self.assertFalse(report['strictly_decreasing_type'])
        self.assertEqual(report['verdict']['witness'], 1)
        self.assertEqual(report['verdict']['sauer_witness'], 1)
        self.assertEqual(report['table']['H'], [1, 3, 4, 5, 5, 5, 5])
        self.assertEqual(
            [(p['shift'], p['character']) for p in report['decomposition']],
            [(0, [4]), (1, [1])],
        )

    def test_analyze_integral_curve(self):
        report = self.orchestrator.analyze(NumericalCharacter((3, 2)), on_integral_curve=True)
        self.assertEqual(report['corollary'], 'smoothable')
        with self.assertRaises(InconsistentHypothesisError):
            self.orchestrator.analyze(NumericalCharacter((4, 2)), on_integral_curve=True)

    def test_enumerate_filters(self):
        self.assertEqual(len(self.orchestrator.enumerate(2, 5)), 9)
        rows = self.orchestrator.enumerate(2, 5, 'nonconnected')
        self.assertEqual([row['character'] for row in rows], [[4, 2]])
        self.assertEqual(len(self.orchestrator.enumerate(2, 5, 'connected')), 8)
        with self.assertRaises(ConfigurationError):
            self.orchestrator.enumerate(2, 5, 'smooth')

    def test_construct(self):
        report = self.orchestrator.construct_from_character(NumericalCharacter((4, 2)))
        self.assertEqual(report['generators'], ['x2^2', '-x1*x2', 'x1^4 - x0^3*x2'])
        self.assertEqual(report['generator_degrees'], [2, 2, 4])
        self.assertEqual(report['matrix']['entries'], [['x1', 'x0^3'], ['x2', 'x1^3'], ['0', 'x2']])
        self.assertTrue(report['syzygy_identity'])
        self.assertEqual(report['probe']['rank_at_support'], 1)
        self.assertEqual(report['field'], 'prime:32003')

    def test_construct_not_realizable(self):
        with self.assertRaises(NotRealizableError):
            self.orchestrator.construct(parse_betti('{"a": [1, 1], "b": [3]}'))

    def test_resolve(self):
        report = self.orchestrator.resolve(['x2^2', 'x1^2'])
        self.assertEqual(report['betti']['a'], [2, 2])
        self.assertEqual(report['betti']['b'], [4])
        self.assertEqual(report['character'], [3, 2])

    def test_resolve_over_rationals(self):
        orchestrator = PlaneCharOrchestrator(RunConfig('resolve', field_spec='rational'))
        report = orchestrator.resolve(['x2^2', 'x1*x2', 'x1^4 - x0^3*x2'])
        self.assertEqual(report['field'], 'rational')
        self.assertEqual(report['character'], [4, 2])


class RenderTest(SimpleTestCase):

    def setUp(self):
        self.orchestrator = PlaneCharOrchestrator()

    def test_json(self):
        content = render({'character': [4, 2]}, 'json', 'analysis')
        self.assertEqual(json.loads(content), {'character': [4, 2]})

    def test_enumeration_tsv(self):
        content = render(self.orchestrator.enumerate(2, 5), 'tsv', 'enumeration')
        lines = content.splitlines()
        self.assertEqual(len(lines), 10)
        self.assertTrue(lines[0].startswith('character\ts\tdegree\tconnected'))
        self.assertIn('4,2\t2\t5\tFalse', content)

    def test_analysis_text(self):
        content = render(self.orchestrator.analyze(NumericalCharacter((4, 2))), 'text', 'analysis')
        self.assertIn('chi = (4, 2)', content)
        self.assertIn('gaps at t = 1', content)
        self.assertIn('0 -> O(-3) + O(-5) -> 2O(-2) + O(-4) -> I -> 0', content)
        self.assertIn('verdict: not smoothable', content)

    def test_construction_text(self):
        report = self.orchestrator.construct_from_character(NumericalCharacter((4, 2)))
        content = render(report, 'text', 'construction')
        self.assertIn('D3 = x1^4 - x0^3*x2', content)
        self.assertIn('syzygy identity: holds', content)

    def test_batch_text(self):
        reports = [self.orchestrator.analyze(NumericalCharacter(e)) for e in ((3, 2), (3, 3))]
        content = render(reports, 'text', 'analysis')
        self.assertIn('chi = (3, 2)', content)
        self.assertIn('chi = (3, 3)', content)


class ReportKeysTest(SimpleTestCase):
    """JSON keys of the published formats."""

    def setUp(self):
        self.orchestrator = PlaneCharOrchestrator()

    def test_hilbert_table_keys(self):
        table = self.orchestrator.analyze(NumericalCharacter((4, 2)))['table']
        self.assertEqual(set(table), {'deg', 'H', 'delta', 'h0', 'h1'})
        self.assertEqual(table['deg'], 5)

    def test_verdict_keys(self):
        verdict = self.orchestrator.analyze(NumericalCharacter((4, 2)))['verdict']
        self.assertLessEqual({'connected', 'sauer', 'smoothable', 'witness'}, set(verdict))
        self.assertNotIn('sauer_ok', verdict)
        self.assertEqual(
            (verdict['connected'], verdict['sauer'], verdict['smoothable'], verdict['witness']),
            (False, False, False, 1),
        )

    def test_enumeration_row_keys(self):
        row = self.orchestrator.enumerate(2, 5, 'nonconnected')[0]
        self.assertFalse(row['sauer'])
        self.assertNotIn('sauer_ok', row)
        header = render([row], 'tsv', 'enumeration').splitlines()[0].split('\t')
        self.assertEqual(header[:6], ['character', 's', 'degree', 'connected', 'sauer', 'smoothable'])

    def test_resolution_table_keys(self):
        table = self.orchestrator.resolve(['x2^2', 'x1^2'])['table']
        self.assertEqual(table['deg'], 4)
