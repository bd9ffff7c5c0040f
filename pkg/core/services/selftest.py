"""
Self-test suite: exhaustive property sweeps over a window of characters.

Every check is evaluated per input and reduced to a count of failures and
the smallest failing input, ordered by (degree, s, entries).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from betti import (
    BettiSequence,
    betti_to_character,
    betti_to_hilbert,
    classify,
    counts,
    h0_increment,
    is_realizable,
    minimal_betti,
    remark_checks,
    sauer_condition,
    scheme_degree,
    split_betti,
    witness_property,
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
    lift,
    lift_chain,
    recompose,
    split_at,
)
from hilburch import check_syzygy_identity, construct, rank_drop_probe
from polyring import field_from_spec
from resolve import GradedIdeal, syzygy_betti

from ..config import RunConfig
from ..constants import FieldConstants, SweepConstants
from ..exceptions import PlaneCharBaseException
from ..serializers import SelfTestSerializer
from .batch import BatchRunner

logger = logging.getLogger(__name__)

# check -> True (pass), False (fail) or None (not applicable)
Outcome = Dict[str, Optional[bool]]

NAMED_INSTANCES = {
    (1,): ((1, 1), (2,), None),
    (3, 2): ((2, 2), (4,), None),
    (3, 3): ((2, 3, 3), (4, 4), None),
    (4, 2): ((2, 2, 4), (3, 5), 1),
}


def _sort_key(entries: Sequence[int]) -> Tuple[int, int, Tuple[int, ...]]:
    return degree(NumericalCharacter(tuple(entries))), len(entries), tuple(entries)


@dataclass
class CheckSummary:
    """Running tally of one named check."""
    name: str
    checked: int = 0
    failed: int = 0
    counterexample: Any = None
    _key: Any = field(default=None, repr=False)

    def record(self, ok: Optional[bool], example: Any, key: Any) -> None:
        if ok is None:
            return
        self.checked += 1
        if ok:
            return
        self.failed += 1
        if self._key is None or key < self._key:
            self._key = key
            self.counterexample = example

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'checked': self.checked,
            'failed': self.failed,
            'counterexample': self.counterexample,
        }


# ==================== Calculus Checks ====================

def _guard(check: Callable[[], Optional[bool]]) -> Optional[bool]:
    try:
        return check()
    except PlaneCharBaseException as e:
        logger.warning(f"Check raised {e}")
        return False


def _split_betti_agrees(chi: NumericalCharacter) -> Optional[bool]:
    betti = minimal_betti(chi)
    sauer = sauer_condition(betti)
    if sauer.ok:
        return None
    t, residual = split_betti(betti, sauer.index)
    return t in gaps(chi) and betti_to_character(residual) == split_at(chi, t).residual


def _splits_add_degrees(chi: NumericalCharacter) -> Optional[bool]:
    chi_gaps = gaps(chi)
    if not chi_gaps:
        return None
    for t in chi_gaps:
        result = split_at(chi, t)
        if degree(chi) != degree(result.top) + degree(result.residual):
            return False
    return True


def _decomposition_round_trips(chi: NumericalCharacter) -> bool:
    pieces = decompose(chi)
    return all(is_connected(piece) for _, piece in pieces) and recompose(pieces) == chi


def _h0_increments_agree(chi: NumericalCharacter) -> bool:
    table = hilbert_table(chi)
    return all(
        h0_increment(chi, n) == table.h0[n + 1] - table.h0[n]
        for n in range(table.window)
    )


def _lift_chain_round_trips(chi: NumericalCharacter) -> Optional[bool]:
    if not is_connected(chi):
        return None
    current, steps = lift_chain(chi)
    for step in steps:
        current = lift(current, step)
    return current == chi


def _betti_round_trips(chi: NumericalCharacter) -> bool:
    betti = minimal_betti(chi)
    return (
        bool(is_realizable(betti))
        and scheme_degree(betti) == degree(chi)
        and betti_to_character(betti) == chi
    )


def _betti_hilbert_agrees(chi: NumericalCharacter) -> bool:
    window = chi.n0 + SweepConstants.TABLE_MARGIN
    return betti_to_hilbert(minimal_betti(chi), window=window).H == hilbert_table(chi).H


def character_checks(entries: Sequence[int]) -> Outcome:
    """All character-side checks for one character."""
    chi = NumericalCharacter(tuple(entries))
    connected = is_connected(chi)

    def theorem():
        verdict = classify(chi)
        return verdict.consistent and connected == bool(sauer_condition(minimal_betti(chi)))

    return {
        'connected_iff_sauer': _guard(theorem),
        'strictly_decreasing_type': _guard(
            lambda: is_strictly_decreasing_type(hilbert_table(chi).delta) == connected
        ),
        'split_degree_additivity': _guard(lambda: _splits_add_degrees(chi)),
        'decompose_round_trip': _guard(lambda: _decomposition_round_trips(chi)),
        'split_betti_residual': _guard(lambda: _split_betti_agrees(chi)),
        'witness_property': _guard(lambda: witness_property(chi) is not False),
        'betti_round_trip': _guard(lambda: _betti_round_trips(chi)),
        'betti_hilbert': _guard(lambda: _betti_hilbert_agrees(chi)),
        'h0_increment': _guard(lambda: _h0_increments_agree(chi)),
        'lift_chain_round_trip': _guard(lambda: _lift_chain_round_trips(chi)),
        'remark_clauses': _guard(lambda: remark_checks(chi).passed),
    }


# ==================== Construction and Oracle Checks ====================

ORACLE_CHECKS = (
    'generator_degrees',
    'syzygy_identity',
    'rank_probe',
    'oracle_hilbert',
    'oracle_betti',
    'oracle_counts',
    'oracle_remarks',
)

FIELD_DISCREPANCY = 'field_discrepancy'


def _counts_identities(chi: NumericalCharacter, alpha: Dict[int, int], beta: Dict[int, int]) -> bool:
    c = counts(chi)
    s = chi.s
    if alpha.get(s, 0) != c(s) + 1:
        return False
    top = max([chi.n0 + 1] + list(alpha) + list(beta))
    return all(
        beta.get(n, 0) == alpha.get(n, 0) - c(n) + c(n - 1)
        for n in range(s + 1, top + 1)
    )


def _round_trip(chi: NumericalCharacter, field_spec: str, trials: int, seed: int,
                deterministic: bool) -> Tuple[Outcome, Optional[Dict[str, Any]]]:
    """Construct from minimal_betti(chi), resolve the minors, compare."""
    base_field = field_from_spec(field_spec)
    outcome: Outcome = {name: False for name in ORACLE_CHECKS}
    betti = minimal_betti(chi)

    try:
        matrix, generator_set = construct(betti)
        outcome['generator_degrees'] = tuple(g.degree for g in generator_set.generators) == betti.a
        outcome['syzygy_identity'] = check_syzygy_identity(matrix, generator_set)
        rank_drop_probe(matrix, trials=trials, seed=seed, field=base_field, deterministic=deterministic)
        outcome['rank_probe'] = True
    except PlaneCharBaseException as e:
        logger.warning(f"Construction check failed for {chi} over {base_field}: {e}")
        return outcome, None

    try:
        ideal = GradedIdeal(generator_set.generators, base_field)
        table = ideal.hilbert_of_quotient(chi.n0 + SweepConstants.TABLE_MARGIN)
        outcome['oracle_hilbert'] = table.H == hilbert_table(chi).H
        report = syzygy_betti(ideal)
        outcome['oracle_betti'] = report.consistent and report.betti == betti
        outcome['oracle_counts'] = _counts_identities(chi, report.alpha, report.beta)
        resolved = GradedIdeal(report.generators, base_field).character_of()
        outcome['oracle_remarks'] = resolved == chi and remark_checks(resolved, report.betti).passed
    except PlaneCharBaseException as e:
        logger.warning(f"Oracle check failed for {chi} over {base_field}: {e}")
        return outcome, None

    outputs = {
        'generator_degrees': [g.degree for g in report.generators],
        'H': list(table.H),
        'a': list(report.betti.a),
        'b': list(report.betti.b),
        'alpha': report.alpha,
        'beta': report.beta,
    }
    return outcome, outputs


def _passes(outcome: Outcome) -> bool:
    return all(ok is not False for ok in outcome.values())


def round_trip_checks(entries: Sequence[int], field_spec: str, trials: int, seed: int,
                      deterministic: bool) -> Tuple[Outcome, Optional[Dict[str, Any]]]:
    """
    Round trip over the configured field.

    A failure over a prime field is recomputed over the rationals. When
    the rationals pass, the property checks take the rational outcome and
    the disagreement itself fails the field_discrepancy check. The
    returned outputs are always those of the configured field.
    """
    chi = NumericalCharacter(tuple(entries))
    outcome, outputs = _round_trip(chi, field_spec, trials, seed, deterministic)
    if field_spec == FieldConstants.RATIONAL_SPEC or _passes(outcome):
        outcome[FIELD_DISCREPANCY] = None if field_spec == FieldConstants.RATIONAL_SPEC else True
        return outcome, outputs

    logger.warning(f"Round trip of {chi} failed over {field_spec}, recomputing over the rationals")
    rational, _ = _round_trip(chi, FieldConstants.RATIONAL_SPEC, trials, seed, deterministic)
    if not _passes(rational):
        rational[FIELD_DISCREPANCY] = None
        return rational, outputs

    failed = [name for name, ok in outcome.items() if ok is False]
    logger.error(f"Round trip of {chi} fails over {field_spec} on {failed} but passes over the rationals")
    rational[FIELD_DISCREPANCY] = False
    return rational, outputs


def ghost_case(case: Tuple[Tuple[int, ...], int]) -> bool:
    """betti_to_hilbert ignores an equal pair (t, t) added to both sides."""
    entries, t = case
    betti = minimal_betti(NumericalCharacter(entries))
    window = max(betti.b[-1], t) + SweepConstants.TABLE_MARGIN
    try:
        return betti_to_hilbert(betti, window).H == betti_to_hilbert(betti.with_ghosts(t), window).H
    except PlaneCharBaseException as e:
        logger.warning(f"Ghost case {entries} with t={t} raised {e}")
        return False


# ==================== Suite ====================

class SelfTestSuite:
    """
    Runs every property over the characters with s <= s_max and
    degree <= d_max and collects one CheckSummary per property.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.batch = BatchRunner(config.jobs)
        self.summaries: Dict[str, CheckSummary] = {}

    def _summary(self, name: str) -> CheckSummary:
        if name not in self.summaries:
            self.summaries[name] = CheckSummary(name)
        return self.summaries[name]

    def _record_outcomes(self, characters: List[Tuple[int, ...]], outcomes: List[Outcome],
                         prefix: str = '') -> None:
        for entries, outcome in zip(characters, outcomes):
            for name, ok in outcome.items():
                self._summary(prefix + name).record(ok, list(entries), _sort_key(entries))

    def run(self, s_max: int, d_max: int) -> Dict[str, Any]:
        characters = [chi.entries for chi in enumerate_characters(s_max, d_max)]
        logger.info(f"Self-test over {len(characters)} characters (s <= {s_max}, deg <= {d_max})")

        self._record_outcomes(characters, self.batch.map(character_checks, characters))

        prime_outputs = self._run_round_trips(characters)
        self._run_ghost_cases(characters)
        self._run_rational_subsample(prime_outputs)
        self._run_named_instances()

        checks = [summary.to_dict() for summary in self.summaries.values()]
        passed = all(summary.failed == 0 for summary in self.summaries.values())
        if not passed:
            failing = [summary.name for summary in self.summaries.values() if summary.failed]
            logger.error(f"Self-test failed checks: {failing}")

        return SelfTestSerializer({
            's_max': s_max,
            'd_max': d_max,
            'field': self.config.field_spec,
            'characters': len(characters),
            'passed': passed,
            'checks': checks,
        }).data

    def _round_trip_args(self, field_spec: str):
        return (field_spec, self.config.probe_trials, self.config.seed, self.config.deterministic_probe)

    def _run_round_trips(self, characters) -> Dict[Tuple[int, ...], Dict[str, Any]]:
        limit = self.config.resolve_degree_limit
        selected = [e for e in characters if degree(NumericalCharacter(e)) <= limit]
        logger.info(f"Construct/resolve round trip on {len(selected)} characters")
        results = self.batch.map(round_trip_checks, selected, *self._round_trip_args(self.config.field_spec))
        self._record_outcomes(selected, [outcome for outcome, _ in results])
        return {entries: outputs for entries, (_, outputs) in zip(selected, results) if outputs is not None}

    def _run_ghost_cases(self, characters) -> None:
        summary = self._summary('ghost_invariance')
        if not characters or not self.config.ghost_cases:
            return
        rng = np.random.default_rng(self.config.seed)
        cases = []
        for _ in range(self.config.ghost_cases):
            entries = characters[int(rng.integers(len(characters)))]
            b_top = minimal_betti(NumericalCharacter(entries)).b[-1]
            cases.append((entries, int(rng.integers(2, b_top + 3))))
        for case, ok in zip(cases, self.batch.map(ghost_case, cases)):
            entries, t = case
            summary.record(ok, {'character': list(entries), 'ghost_degree': t}, (_sort_key(entries), t))

    def _run_rational_subsample(self, prime_outputs) -> None:
        """Rerun an evenly spaced subsample over the rationals and compare outputs."""
        summary = self._summary('rational_agreement')
        if self.config.field_spec == FieldConstants.RATIONAL_SPEC or not prime_outputs:
            return
        resolved = sorted(prime_outputs, key=_sort_key)
        size = min(self.config.rational_subsample, len(resolved))
        if size == 0:
            return
        picks = sorted({int(i) for i in np.linspace(0, len(resolved) - 1, size)})
        sample = [resolved[i] for i in picks]
        results = self.batch.map(round_trip_checks, sample, *self._round_trip_args(FieldConstants.RATIONAL_SPEC))
        for entries, (outcome, outputs) in zip(sample, results):
            ok = _passes(outcome) and outputs == prime_outputs[entries]
            if not ok:
                logger.warning(f"Prime and rational results differ for {list(entries)}")
            summary.record(ok, list(entries), _sort_key(entries))

    def _run_named_instances(self) -> None:
        summary = self._summary('named_instances')
        for entries, (a, b, witness) in NAMED_INSTANCES.items():
            chi = NumericalCharacter(entries)
            betti = minimal_betti(chi)
            ok = betti == BettiSequence(a, b) and sauer_condition(betti).index == witness
            outcome, outputs = round_trip_checks(entries, *self._round_trip_args(self.config.field_spec))
            ok = ok and _passes(outcome) and outputs is not None
            ok = ok and outputs['a'] == list(a) and outputs['b'] == list(b)
            summary.record(ok, list(entries), _sort_key(entries))


def run_selftest(config: RunConfig, s_max: int, d_max: int) -> Dict[str, Any]:
    return SelfTestSuite(config).run(s_max, d_max)
