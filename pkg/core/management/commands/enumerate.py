"""
Management command to tabulate every character in a window.

Usage:
    python manage.py enumerate 2 5
    python manage.py enumerate 4 30 nonconnected --format tsv --jobs 4
"""

from core.constants import EnumerationFilters
from core.management.base import PlaneCharCommand
from core.services import get_orchestrator


class Command(PlaneCharCommand):
    help = 'List all characters with s <= s_max and degree <= d_max with their verdicts'
    report_kind = 'enumeration'

    def add_arguments(self, parser):
        parser.add_argument('s_max', type=int, help='Largest character length')
        parser.add_argument('d_max', type=int, help='Largest degree')
        parser.add_argument('filter', nargs='?', choices=EnumerationFilters.CHOICES,
                            default=EnumerationFilters.ALL, help='Which characters to list')
        super().add_arguments(parser)

    def run(self, config, **options):
        return get_orchestrator(config).enumerate(config.s_max, config.d_max, options['filter'])
