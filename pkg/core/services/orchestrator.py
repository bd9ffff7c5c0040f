"""
Core orchestrator that coordinates the calculus, constructor and oracle.

This is the entry point the management commands use. It parses raw
input, runs the computations and hands back serialized reports.
"""

import json
import logging
from typing import Any, Dict, List, Optional, Sequence

from betti import (
    BettiSequence,
    classify,
    corollary_check,
    minimal_betti,
    remark_checks,
)
from charcore import (
    NumericalCharacter,
    decompose,
    degree,
    enumerate_characters,
    gaps,
    hilbert_table,
    is_connected,
    is_strictly_decreasing_type,
    validate,
)
from hilburch import build_exi_matrix, check_syzygy_identity, maximal_minors, rank_drop_probe
from polyring import Field, parse_polynomial
from resolve import GradedIdeal, syzygy_betti

from ..config import RunConfig
from ..constants import EnumerationFilters
from ..exceptions import BettiSequenceError, CharacterValidationError, ConfigurationError, PlaneCharBaseException
from ..serializers import (
    AnalysisSerializer,
    BettiInputSerializer,
    CharacterInputSerializer,
    ConstructionSerializer,
    EnumerationRowSerializer,
    GeneratorInputSerializer,
    ResolutionReportSerializer,
)
from .batch import BatchRunner

logger = logging.getLogger(__name__)


class InputError(PlaneCharBaseException):
    """Raised when command input is not well-formed JSON of the expected shape."""

    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message, error_code='INVALID_INPUT', severity='low', details=details)


def _load(raw: Any) -> Any:
    if isinstance(raw, str):
        try:
            return json.loads(raw)
        except json.JSONDecodeError as e:
            raise InputError(f"Input is not valid JSON: {e.msg}", details={'input': raw})
    return raw


def _validated(serializer_class, data: Dict[str, Any]) -> Dict[str, Any]:
    serializer = serializer_class(data=data)
    if not serializer.is_valid():
        raise InputError(f"Invalid input: {dict(serializer.errors)}", details={'errors': serializer.errors})
    return serializer.validated_data


def parse_character(raw: Any) -> NumericalCharacter:
    """Accept a JSON list, or an object with a 'character' key."""
    data = _load(raw)
    if isinstance(data, list):
        data = {'character': data}
    if not isinstance(data, dict):
        raise InputError("A character is a JSON list of integers", details={'input': data})
    for value in data.get('character') or []:
        if isinstance(value, bool) or not isinstance(value, int):
            raise CharacterValidationError(
                f"Entry {value!r} is not an integer",
                reason=CharacterValidationError.NOT_INTEGER,
                entries=data.get('character'),
            )
    return validate(_validated(CharacterInputSerializer, data)['character'])


def parse_betti(raw: Any) -> BettiSequence:
    """Accept {"a": [...], "b": [...]}."""
    data = _load(raw)
    if not isinstance(data, dict):
        raise InputError('Betti data is a JSON object {"a": [...], "b": [...]}', details={'input': data})
    try:
        validated = _validated(BettiInputSerializer, data)
    except InputError as e:
        raise BettiSequenceError(e.message, a=data.get('a'), b=data.get('b')) from e
    return BettiSequence(tuple(validated['a']), tuple(validated['b']))


def parse_generators(raw: Any) -> List[str]:
    """Accept a JSON array of strings, {"generators": [...]}, or comma separated text."""
    data = raw
    if isinstance(raw, str):
        stripped = raw.strip()
        data = _load(stripped) if stripped[:1] in ('[', '{') else [p for p in stripped.split(',') if p.strip()]
    if isinstance(data, list):
        data = {'generators': data}
    if not isinstance(data, dict):
        raise InputError('Generators are a list of polynomial strings', details={'input': data})
    return list(_validated(GeneratorInputSerializer, data)['generators'])


# Worker functions live at module level so the process pool can pickle them.

def enumeration_row(entries: Sequence[int]) -> Dict[str, Any]:
    chi = NumericalCharacter(tuple(entries))
    verdict = classify(chi)
    betti = minimal_betti(chi)
    return EnumerationRowSerializer({
        'character': chi.to_list(),
        's': chi.s,
        'degree': degree(chi),
        'connected': verdict.connected,
        'sauer_ok': verdict.sauer_ok,
        'smoothable': verdict.smoothable,
        'witness': verdict.witness,
        'sauer_witness': verdict.sauer_witness,
        'a': list(betti.a),
        'b': list(betti.b),
    }).data


class PlaneCharOrchestrator:
    """
    Unified interface for every command.

    Holds the run configuration; all results are plain serialized data.
    """

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or RunConfig(subcommand='library')
        self.field: Field = self.config.field
        self.batch = BatchRunner(self.config.jobs)
        logger.debug(f"PlaneCharOrchestrator initialized over {self.field}")

    # ==================== Character Operations ====================

    def analyze(self, chi: NumericalCharacter, on_integral_curve: bool = False) -> Dict[str, Any]:
        """Degree, Hilbert table, connectedness, decomposition, Betti data and verdict."""
        table = hilbert_table(chi)
        betti = minimal_betti(chi)
        verdict = classify(chi, on_integral_curve=on_integral_curve)
        corollary = corollary_check(degree(chi), chi.s, True) if on_integral_curve else None

        return AnalysisSerializer({
            'character': chi.to_list(),
            's': chi.s,
            'degree': degree(chi),
            'connected': verdict.connected,
            'strictly_decreasing_type': is_strictly_decreasing_type(table.delta),
            'gaps': gaps(chi),
            'decomposition': decompose(chi),
            'table': table,
            'betti': betti,
            'verdict': verdict,
            'remarks': remark_checks(chi, betti),
            'corollary': corollary,
        }).data

    def enumerate(self, s_max: int, d_max: int, row_filter: str = EnumerationFilters.ALL) -> List[Dict[str, Any]]:
        """One row per character with s <= s_max and degree <= d_max, lexicographic order."""
        if row_filter not in EnumerationFilters.CHOICES:
            raise ConfigurationError(f"Unknown filter '{row_filter}'", config_key='filter')
        characters = [
            chi.entries for chi in enumerate_characters(s_max, d_max)
            if row_filter == EnumerationFilters.ALL
            or (row_filter == EnumerationFilters.CONNECTED) == is_connected(chi)
        ]
        logger.info(f"Enumerating {len(characters)} characters (s <= {s_max}, deg <= {d_max}, {row_filter})")
        return self.batch.map(enumeration_row, characters)

    # ==================== Construction ====================

    def construct(self, betti: BettiSequence, character: Optional[NumericalCharacter] = None) -> Dict[str, Any]:
        """Matrix, generators, syzygy identity and rank probe for realizable Betti data."""
        matrix = build_exi_matrix(betti)
        generator_set = maximal_minors(matrix)
        probe = rank_drop_probe(
            matrix,
            trials=self.config.probe_trials,
            seed=self.config.seed,
            field=self.field,
            deterministic=self.config.deterministic_probe,
        )
        return ConstructionSerializer({
            'character': character.to_list() if character is not None else None,
            'betti': betti,
            'field': self.field.spec,
            'matrix': matrix,
            'generators': generator_set.to_text(),
            'generator_degrees': [g.degree for g in generator_set.generators],
            'syzygy_identity': check_syzygy_identity(matrix, generator_set),
            'probe': probe,
        }).data

    def construct_from_character(self, chi: NumericalCharacter) -> Dict[str, Any]:
        return self.construct(minimal_betti(chi), character=chi)

    # ==================== Resolution ====================

    def resolve(self, generator_texts: Sequence[str]) -> Dict[str, Any]:
        """Resolution report of the ideal generated by the given forms."""
        generators = [parse_polynomial(text) for text in generator_texts]
        ideal = GradedIdeal(generators, self.field)
        report = syzygy_betti(ideal, cap=self.config.max_sweep_degree)

        try:
            character = GradedIdeal(report.generators, self.field).character_of(
                cap=self.config.max_sweep_degree
            ).to_list()
        except PlaneCharBaseException as e:
            logger.warning(f"Quotient Hilbert function has no character: {e}")
            character = None

        return ResolutionReportSerializer({
            'field': self.field.spec,
            'generators': [g.to_text() for g in report.generators],
            'alpha': report.alpha,
            'beta': report.beta,
            'betti': report.betti,
            'table': report.table,
            'character': character,
        }).data


def get_orchestrator(config: Optional[RunConfig] = None) -> PlaneCharOrchestrator:
    return PlaneCharOrchestrator(config)


__all__ = [
    'InputError',
    'PlaneCharOrchestrator',
    'enumeration_row',
    'get_orchestrator',
    'parse_betti',
    'parse_character',
    'parse_generators',
]
