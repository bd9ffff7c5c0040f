"""
Management command to run the property sweeps end to end.

Usage:
    python manage.py selftest 3 15
    python manage.py selftest 4 30 --jobs 8 --format text
"""

from core.exceptions import PropertyViolationError
from core.management.base import PlaneCharCommand
from core.services import render, run_selftest


class Command(PlaneCharCommand):
    help = 'Check every property over the characters with s <= s_max and degree <= d_max'
    report_kind = 'selftest'

    def add_arguments(self, parser):
        parser.add_argument('s_max', type=int, help='Largest character length')
        parser.add_argument('d_max', type=int, help='Largest degree')
        parser.add_argument('--trials', type=int, help='Random points for each rank probe')
        parser.add_argument('--deterministic', action='store_true',
                            help='Use the membership proof instead of random rank probes')
        parser.add_argument('--resolve-limit', type=int,
                            help='Largest degree for the construct/resolve round trip')
        super().add_arguments(parser)

    def run(self, config, **options):
        summary = run_selftest(config, config.s_max, config.d_max)
        if not summary['passed']:
            # the report is still written so the counterexamples are visible
            self.emit(render(summary, config.output_format, self.report_kind), config.out)
            failures = {c['name']: c['counterexample'] for c in summary['checks'] if c['failed']}
            raise PropertyViolationError(
                f"{len(failures)} propert{'y' if len(failures) == 1 else 'ies'} failed", failures=failures
            )
        return summary
