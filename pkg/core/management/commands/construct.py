"""
Management command to build the matrix and generators of a scheme.

Usage:
    python manage.py construct --character '[4,2]'
    python manage.py construct --betti '{"a": [1, 1], "b": [2]}'
    python manage.py construct --character '[3,3]' --deterministic
    cat inputs.jsonl | python manage.py construct
"""

import json

from core.management.base import PlaneCharCommand
from core.services import get_orchestrator, parse_betti, parse_character
from core.services.orchestrator import InputError


def _parse_line(line: str):
    """A JSON list or {"character": ...} is a character, {"a", "b"} is Betti data."""
    try:
        data = json.loads(line)
    except json.JSONDecodeError as e:
        raise InputError(f"Input is not valid JSON: {e.msg}", details={'input': line})
    if isinstance(data, dict) and 'a' in data:
        return 'betti', parse_betti(data)
    return 'character', parse_character(data)


class Command(PlaneCharCommand):
    help = 'Construct the Hilbert-Burch matrix and its maximal minors for a character or Betti data'
    report_kind = 'construction'

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group()
        source.add_argument('--character', type=str, help="JSON list such as '[4,2]'")
        source.add_argument('--betti', type=str, help='JSON object {"a": [...], "b": [...]}')
        parser.add_argument('--trials', type=int, help='Random points for the rank probe')
        parser.add_argument('--deterministic', action='store_true',
                            help='Prove the support by ideal membership instead of random points')
        super().add_arguments(parser)

    def run(self, config, **options):
        orchestrator = get_orchestrator(config)

        if options.get('character'):
            return orchestrator.construct_from_character(parse_character(options['character']))
        if options.get('betti'):
            return orchestrator.construct(parse_betti(options['betti']))

        reports = []
        for kind, value in self.read_inputs(None, options, _parse_line):
            if kind == 'character':
                reports.append(orchestrator.construct_from_character(value))
            else:
                reports.append(orchestrator.construct(value))
        return reports
