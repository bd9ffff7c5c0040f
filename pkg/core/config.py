"""
Run configuration for the management commands.

Defaults come from settings.PLANECHAR_SETTINGS, which python-decouple
fills from the environment; command-line options override them.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from django.conf import settings

from polyring import Field, field_from_spec

from .constants import FieldConstants, OutputFormats, ProbeConstants, SweepConstants
from .exceptions import ConfigurationError

logger = logging.getLogger(__name__)


def planechar_setting(key: str, default: Any) -> Any:
    return getattr(settings, 'PLANECHAR_SETTINGS', {}).get(key, default)


def _positive(value: Any, key: str, allow_zero: bool = False) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigurationError(f"{key} must be an integer, got {value!r}", config_key=key)
    if value < 0 or (value == 0 and not allow_zero):
        raise ConfigurationError(f"{key} must be positive, got {value}", config_key=key)
    return value


@dataclass(frozen=True)
class RunConfig:
    """Validated options of one command invocation."""
    subcommand: str
    field_spec: str = FieldConstants.DEFAULT_FIELD_SPEC
    output_format: str = OutputFormats.JSON
    seed: int = ProbeConstants.DEFAULT_SEED
    jobs: int = 1
    out: Optional[str] = None
    s_max: Optional[int] = None
    d_max: Optional[int] = None
    probe_trials: int = ProbeConstants.DEFAULT_TRIALS
    deterministic_probe: bool = False
    ghost_cases: int = SweepConstants.GHOST_CASES
    resolve_degree_limit: int = SweepConstants.RESOLVE_DEGREE_LIMIT
    rational_subsample: int = SweepConstants.RATIONAL_SUBSAMPLE
    max_sweep_degree: int = SweepConstants.MAX_SWEEP_DEGREE

    def __post_init__(self):
        if self.output_format not in OutputFormats.CHOICES:
            raise ConfigurationError(
                f"Unknown output format '{self.output_format}', choose from {OutputFormats.CHOICES}",
                config_key='format',
            )
        _positive(self.jobs, 'jobs')
        _positive(self.seed, 'seed', allow_zero=True)
        _positive(self.probe_trials, 'probe_trials')
        _positive(self.ghost_cases, 'ghost_cases', allow_zero=True)
        _positive(self.resolve_degree_limit, 'resolve_degree_limit', allow_zero=True)
        _positive(self.rational_subsample, 'rational_subsample', allow_zero=True)
        _positive(self.max_sweep_degree, 'max_sweep_degree')
        if self.s_max is not None:
            _positive(self.s_max, 's_max')
        if self.d_max is not None:
            _positive(self.d_max, 'd_max')
        # parse eagerly so a bad spec fails before any work starts
        self.field

    @property
    def field(self) -> Field:
        return field_from_spec(self.field_spec)

    @classmethod
    def from_options(cls, subcommand: str, options: Dict[str, Any]) -> 'RunConfig':
        """Build from Django command options, falling back to settings."""
        def pick(key, setting, default):
            value = options.get(key)
            return value if value is not None else planechar_setting(setting, default)

        config = cls(
            subcommand=subcommand,
            field_spec=pick('field', 'DEFAULT_FIELD', FieldConstants.DEFAULT_FIELD_SPEC),
            output_format=options.get('format') or OutputFormats.JSON,
            seed=pick('seed', 'DEFAULT_SEED', ProbeConstants.DEFAULT_SEED),
            jobs=pick('jobs', 'DEFAULT_JOBS', 1),
            out=options.get('out'),
            s_max=options.get('s_max'),
            d_max=options.get('d_max'),
            probe_trials=pick('trials', 'PROBE_TRIALS', ProbeConstants.DEFAULT_TRIALS),
            deterministic_probe=bool(options.get('deterministic', False)),
            ghost_cases=planechar_setting('GHOST_CASES', SweepConstants.GHOST_CASES),
            resolve_degree_limit=pick('resolve_limit', 'RESOLVE_DEGREE_LIMIT',
                                      SweepConstants.RESOLVE_DEGREE_LIMIT),
            rational_subsample=planechar_setting('RATIONAL_SUBSAMPLE', SweepConstants.RATIONAL_SUBSAMPLE),
            max_sweep_degree=planechar_setting('MAX_SWEEP_DEGREE', SweepConstants.MAX_SWEEP_DEGREE),
        )
        logger.debug(f"Run configuration: {config}")
        return config
