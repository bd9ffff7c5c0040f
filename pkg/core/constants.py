"""
Constants for PlaneChar.

This module centralizes all magic numbers and configuration defaults
used throughout the application. Django settings override the run-time
ones through PLANECHAR_SETTINGS.
"""


class FieldConstants:
    """Coefficient field defaults."""

    DEFAULT_PRIME = 32003
    DEFAULT_FIELD_SPEC = 'prime:32003'
    RATIONAL_SPEC = 'rational'

    # p*p must fit a signed 64-bit integer for numpy elimination
    MAX_PRIME = 2 ** 31 - 1


class ProbeConstants:
    """Rank probe parameters."""

    DEFAULT_TRIALS = 25
    DEFAULT_SEED = 0

    # coordinate range for random points in rational mode
    RATIONAL_COORDINATE_BOUND = 50


class SweepConstants:
    """Enumeration and resolution sweep bounds."""

    # acceptance windows
    THEOREM_S_MAX = 4
    THEOREM_D_MAX = 30
    RESOLVE_DEGREE_LIMIT = 20
    RATIONAL_SUBSAMPLE = 25
    GHOST_CASES = 50

    # hilbert_table default window is n0 + TABLE_MARGIN
    TABLE_MARGIN = 2

    # resolution sweep runs to the stabilization degree + SYZYGY_MARGIN
    SYZYGY_MARGIN = 2
    MAX_SWEEP_DEGREE = 64


class ExitCodes:
    """Process exit codes for management commands."""

    SUCCESS = 0
    PROPERTY_VIOLATION = 1
    INVALID_INPUT = 2


class OutputFormats:
    """Supported command output formats."""

    JSON = 'json'
    TSV = 'tsv'
    TEXT = 'text'

    CHOICES = [JSON, TSV, TEXT]


class EnumerationFilters:
    """Row filters for the enumerate command."""

    ALL = 'all'
    CONNECTED = 'connected'
    NONCONNECTED = 'nonconnected'

    CHOICES = [ALL, CONNECTED, NONCONNECTED]


class VerdictLabels:
    """Text labels for the surface statements of the smoothability theorem."""

    SMOOTHABLE = 'smoothable'
    NOT_SMOOTHABLE = 'not smoothable'
    INCONCLUSIVE = 'inconclusive'

    SMOOTH_SURFACE = 'general curve of the component lies on a smooth surface of degree s'
    INTEGRAL_SURFACE = 'general curve of the component lies on an integral surface of degree s'
    NO_INTEGRAL_SURFACE = 'general curve of the component lies on no integral surface of degree s'
    COMPONENT_GENERAL_SMOOTH = 'general curve of the component is smooth'
    COMPONENT_GENERAL_REDUCED = 'general curve of the component is reduced'


class ErrorMessages:
    """Standardized error messages."""

    EMPTY_CHARACTER = "A numerical character needs at least one entry"
    NOT_NONINCREASING = "Entries must be nonincreasing: n_{index} < n_{next}"
    TAIL_BELOW_LENGTH = "Last entry n_{index}={value} is smaller than the length s={length}"
    NOT_INTEGER = "Entry {value!r} is not an integer"
    NOT_CONNECTED = "Character {entries} is not connected"
