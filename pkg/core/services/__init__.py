"""
Core services package initialization.
"""

from .batch import BatchRunner
from .orchestrator import (
    InputError,
    PlaneCharOrchestrator,
    get_orchestrator,
    parse_betti,
    parse_character,
    parse_generators,
)
from .reporting import render
from .selftest import SelfTestSuite, run_selftest

__all__ = [
    'BatchRunner',
    'InputError',
    'PlaneCharOrchestrator',
    'SelfTestSuite',
    'get_orchestrator',
    'parse_betti',
    'parse_character',
    'parse_generators',
    'render',
    'run_selftest',
]
