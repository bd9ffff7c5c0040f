"""
Management command to compute the minimal resolution of an explicit ideal.

Usage:
    python manage.py resolve 'x2^2, x1*x2, x1^4 - x0^3*x2'
    python manage.py resolve '["x1", "x2"]' --field rational
    cat ideals.jsonl | python manage.py resolve -
"""

from core.management.base import PlaneCharCommand
from core.services import get_orchestrator, parse_generators


class Command(PlaneCharCommand):
    help = 'Generator and syzygy degrees and Hilbert table of a homogeneous ideal in x0, x1, x2'
    report_kind = 'resolution'

    def add_arguments(self, parser):
        parser.add_argument('generators', nargs='?', type=str,
                            help="JSON array or comma separated polynomials; '-' or nothing reads stdin")
        super().add_arguments(parser)

    def run(self, config, **options):
        orchestrator = get_orchestrator(config)

        batch = self.read_inputs(options.get('generators'), options, parse_generators)
        if batch is None:
            return orchestrator.resolve(parse_generators(options['generators']))
        return [orchestrator.resolve(generators) for generators in batch]
