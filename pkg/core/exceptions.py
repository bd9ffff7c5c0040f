"""
Custom exceptions for PlaneChar computations.

This module defines a hierarchy of exceptions specific to the character
calculus, the Betti-number calculus, exact linear algebra and the
resolution oracle. Every structured rejection named by an operation
maps to one class here.
"""

from typing import Any, Dict, Optional


class PlaneCharBaseException(Exception):
    """
    Base exception for all PlaneChar-specific errors.

    All custom exceptions should inherit from this class to ensure
    consistent error handling and logging.
    """

    def __init__(self, message: str, error_code: str = None,
                 severity: str = 'medium', details: Dict[str, Any] = None):
        """
        Initialize PlaneChar exception.

        Args:
            message: Human-readable error message
            error_code: Machine-readable error code
            severity: Error severity level ('low', 'medium', 'high', 'critical')
            details: Additional error context and details
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self.__class__.__name__.upper()
        self.severity = severity
        self.details = details or {}

    def __str__(self):
        return f"[{self.error_code}] {self.message}"

    def to_dict(self):
        """Convert exception to dictionary for command output."""
        return {
            'error_type': self.__class__.__name__,
            'error_code': self.error_code,
            'message': self.message,
            'severity': self.severity,
            'details': self.details
        }


# Character Exceptions
class CharacterValidationError(PlaneCharBaseException):
    """Raised when an integer sequence is not a numerical character."""

    EMPTY = 'EMPTY'
    NOT_INTEGER = 'NOT_INTEGER'
    NOT_NONINCREASING = 'NOT_NONINCREASING'
    TAIL_BELOW_LENGTH = 'TAIL_BELOW_LENGTH'
    NOT_CONNECTED = 'NOT_CONNECTED'

    def __init__(self, message: str, reason: str, entries: Any = None,
                 index: Optional[int] = None, **kwargs):
        super().__init__(
            message,
            error_code=f'CHARACTER_{reason}',
            severity='low',
            details={'reason': reason, 'entries': entries, 'index': index},
            **kwargs
        )
        self.reason = reason
        self.index = index


class WindowTooSmallError(PlaneCharBaseException):
    """Raised when a Hilbert table window does not reach n0."""

    def __init__(self, window: int, required: int, **kwargs):
        super().__init__(
            f"Degree window {window} is smaller than n0={required}",
            error_code='WINDOW_TOO_SMALL',
            severity='low',
            details={'window': window, 'required': required},
            **kwargs
        )


class NoGapError(PlaneCharBaseException):
    """Raised when a split is requested where the character has no gap."""

    def __init__(self, entries: Any, t: int, **kwargs):
        super().__init__(
            f"No gap n_(t-1) > n_t + 1 at t={t} for {list(entries)}",
            error_code='NO_GAP_AT_T',
            severity='low',
            details={'entries': list(entries), 't': t},
            **kwargs
        )


class InvalidLiftStepError(PlaneCharBaseException):
    """Raised when a lift step other than 1 or 2 is requested."""

    def __init__(self, step: Any, **kwargs):
        super().__init__(
            f"Lift step must be 1 or 2, got {step}",
            error_code='INVALID_LIFT_STEP',
            severity='low',
            details={'step': step},
            **kwargs
        )


class NotACharacterError(PlaneCharBaseException):
    """Raised when a Hilbert function does not invert to a character."""

    def __init__(self, message: str, delta: Any = None, **kwargs):
        super().__init__(
            message,
            error_code='NOT_A_CHARACTER',
            severity='medium',
            details={'delta': delta},
            **kwargs
        )


# Betti Exceptions
class BettiSequenceError(PlaneCharBaseException):
    """Raised when Betti data is malformed (lengths, signs)."""

    def __init__(self, message: str, a: Any = None, b: Any = None, **kwargs):
        super().__init__(
            message,
            error_code='BETTI_SEQUENCE_INVALID',
            severity='low',
            details={'a': a, 'b': b},
            **kwargs
        )


class NotRealizableError(PlaneCharBaseException):
    """Raised when Betti data fails the existence conditions."""

    SUM = 'SUM'
    ORDER = 'ORDER'

    def __init__(self, message: str, clause: str, index: Optional[int] = None,
                 a: Any = None, b: Any = None, **kwargs):
        super().__init__(
            message,
            error_code=f'NOT_REALIZABLE_{clause}',
            severity='low',
            details={'clause': clause, 'index': index, 'a': a, 'b': b},
            **kwargs
        )
        self.clause = clause
        self.index = index


class NegativeDimensionError(PlaneCharBaseException):
    """Raised when Betti data predicts a negative dimension."""

    def __init__(self, message: str, degree: int = None, **kwargs):
        super().__init__(
            message,
            error_code='NEGATIVE_DIMENSION',
            severity='medium',
            details={'degree': degree},
            **kwargs
        )


class InconsistentHypothesisError(PlaneCharBaseException):
    """Raised when a geometric hypothesis flag contradicts the character."""

    def __init__(self, message: str, entries: Any = None, **kwargs):
        super().__init__(
            message,
            error_code='INCONSISTENT_HYPOTHESIS',
            severity='low',
            details={'entries': entries},
            **kwargs
        )


# Algebra Exceptions
class AlgebraError(PlaneCharBaseException):
    """Base exception for exact-arithmetic errors."""

    def __init__(self, message: str, error_code: str = 'ALGEBRA_ERROR', **kwargs):
        super().__init__(message, error_code=error_code, **kwargs)


class DegreeMismatchError(AlgebraError):
    """Raised when a form or matrix entry has a degree outside its pattern."""

    def __init__(self, message: str, row: int = None, col: int = None,
                 expected: int = None, actual: int = None, **kwargs):
        super().__init__(
            message,
            error_code='DEGREE_MISMATCH',
            severity='medium',
            details={'row': row, 'col': col, 'expected': expected, 'actual': actual},
            **kwargs
        )


class PolynomialParseError(AlgebraError):
    """Raised when polynomial text cannot be read as a form in x0, x1, x2."""

    def __init__(self, message: str, text: str = None, **kwargs):
        super().__init__(
            message,
            error_code='POLYNOMIAL_PARSE_ERROR',
            severity='low',
            details={'text': text},
            **kwargs
        )


class RankClaimViolatedError(AlgebraError):
    """Raised when the constructed matrix drops rank away from (1:0:0)."""

    def __init__(self, message: str, point: Any = None, rank: int = None,
                 expected: int = None, **kwargs):
        super().__init__(
            message,
            error_code='RANK_CLAIM_VIOLATED',
            severity='high',
            details={'point': point, 'rank': rank, 'expected': expected},
            **kwargs
        )


# Resolution Exceptions
class ResolutionError(PlaneCharBaseException):
    """Base exception for the resolution oracle."""

    def __init__(self, message: str, error_code: str = 'RESOLUTION_ERROR', **kwargs):
        super().__init__(message, error_code=error_code, **kwargs)


class NotStabilizedError(ResolutionError):
    """Raised when the quotient Hilbert function is still moving at the window end."""

    def __init__(self, message: str, window: int = None, **kwargs):
        super().__init__(
            message,
            error_code='NOT_STABILIZED',
            severity='medium',
            details={'window': window},
            **kwargs
        )


class UnexpectedDepthError(ResolutionError):
    """Raised when the syzygy module is not free of rank r-1."""

    def __init__(self, message: str, degree: int = None, **kwargs):
        super().__init__(
            message,
            error_code='UNEXPECTED_DEPTH',
            severity='high',
            details={'degree': degree},
            **kwargs
        )


# Configuration and Run Exceptions
class ConfigurationError(PlaneCharBaseException):
    """Raised when run configuration is invalid."""

    def __init__(self, message: str, config_key: str = None, **kwargs):
        super().__init__(
            message,
            error_code='CONFIGURATION_ERROR',
            severity='critical',
            details={'config_key': config_key},
            **kwargs
        )


class PropertyViolationError(PlaneCharBaseException):
    """Raised when a self-test property fails on some input."""

    def __init__(self, message: str, failures: Any = None, **kwargs):
        super().__init__(
            message,
            error_code='PROPERTY_VIOLATION',
            severity='high',
            details={'failures': failures},
            **kwargs
        )

