"""
Management command to analyze a numerical character.

Usage:
    python manage.py analyze '[4,2]'
    python manage.py analyze '[3,2]' --format text
    echo '[3,3]' | python manage.py analyze -
"""

from core.management.base import PlaneCharCommand
from core.services import get_orchestrator, parse_character


class Command(PlaneCharCommand):
    help = 'Degree, Hilbert table, connectedness, decomposition, Betti numbers and verdict of a character'
    report_kind = 'analysis'

    def add_arguments(self, parser):
        parser.add_argument('character', nargs='?', type=str,
                            help="JSON list such as '[4,2]'; '-' or nothing reads one per stdin line")
        parser.add_argument('--on-integral-curve', action='store_true',
                            help='Assume the scheme lies on an integral curve of degree s')
        super().add_arguments(parser)

    def run(self, config, **options):
        orchestrator = get_orchestrator(config)
        flag = options.get('on_integral_curve', False)

        batch = self.read_inputs(options.get('character'), options, parse_character)
        if batch is None:
            return orchestrator.analyze(parse_character(options['character']), on_integral_curve=flag)
        return [orchestrator.analyze(chi, on_integral_curve=flag) for chi in batch]
