"""
Shared base for the PlaneChar management commands.

Adds the common flags, builds the RunConfig, routes output to stdout or
--out and turns PlaneChar errors into exit codes.
"""

import json
import logging
import sys
from typing import Any, Callable, Iterator, List, Optional

from django.core.management.base import BaseCommand, CommandError

from core.config import RunConfig
from core.constants import ExitCodes, OutputFormats
from core.exceptions import PlaneCharBaseException, PropertyViolationError, RankClaimViolatedError
from core.serializers import ErrorSerializer
from core.services import render

logger = logging.getLogger(__name__)

# a failed property claim, as opposed to bad input
PROPERTY_ERRORS = (PropertyViolationError, RankClaimViolatedError)


class PlaneCharCommand(BaseCommand):
    """Base command; subclasses implement run(config, **options)."""

    report_kind = ''
    # call_command(..., stdin=io.StringIO(...)) feeds batch input in tests
    stealth_options = ('stdin',)

    def add_arguments(self, parser):
        parser.add_argument('--field', type=str, help="Coefficient field: 'prime:<p>' or 'rational'")
        parser.add_argument('--format', type=str, choices=OutputFormats.CHOICES, default=OutputFormats.JSON,
                            help='Output format')
        parser.add_argument('--seed', type=int, help='Seed for probabilistic probes')
        parser.add_argument('--jobs', type=int, help='Worker processes for sweeps')
        parser.add_argument('--out', type=str, help='Write output to this path instead of stdout')

    def handle(self, *args, **options):
        try:
            config = RunConfig.from_options(self.subcommand_name(), options)
            data = self.run(config, **options)
            self.emit(render(data, config.output_format, self.report_kind), config.out)
        except PlaneCharBaseException as e:
            self.fail(e)
        return None

    def subcommand_name(self) -> str:
        return self.__module__.rsplit('.', 1)[-1]

    def run(self, config: RunConfig, **options) -> Any:
        raise NotImplementedError('subclasses of PlaneCharCommand must provide a run() method')

    # ==================== Input ====================

    def batch_lines(self, options) -> Iterator[str]:
        """Non-empty lines of stdin, one JSON object per line."""
        stream = options.get('stdin') or sys.stdin
        for line in stream:
            if line.strip():
                yield line.strip()

    def read_inputs(self, value: Optional[str], options, parse: Callable[[str], Any]) -> Optional[List[Any]]:
        """
        Parse the positional input, or every stdin line when it is '-' or absent.

        Returns None for a single inline input so the caller renders one report.
        """
        if value is not None and value != '-':
            return None
        items = []
        for number, line in enumerate(self.batch_lines(options), start=1):
            try:
                items.append(parse(line))
            except PlaneCharBaseException as e:
                e.details['line'] = number
                raise
        logger.info(f"Read {len(items)} batch inputs from stdin")
        return items

    # ==================== Output ====================

    def emit(self, content: str, out: Optional[str]) -> None:
        if out:
            with open(out, 'w', encoding='utf-8') as handle:
                handle.write(content)
            logger.info(f"Wrote {self.report_kind} output to {out}")
        else:
            self.stdout.write(content, ending='')

    def fail(self, error: PlaneCharBaseException) -> None:
        returncode = ExitCodes.PROPERTY_VIOLATION if isinstance(error, PROPERTY_ERRORS) else ExitCodes.INVALID_INPUT
        self.stderr.write(json.dumps(ErrorSerializer(error.to_dict()).data, indent=2, default=str))
        logger.log(logging.ERROR if returncode == ExitCodes.PROPERTY_VIOLATION else logging.INFO, str(error))
        raise CommandError(str(error), returncode=returncode)
