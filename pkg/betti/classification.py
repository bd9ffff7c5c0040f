"""
Smoothability classification of characters.

The connectedness criterion and the Betti-number criterion are two
independent computations of the same verdict; classify runs both and
logs any disagreement.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from charcore import NumericalCharacter, gaps, h1, is_connected
from core.constants import VerdictLabels
from core.exceptions import InconsistentHypothesisError

from .sequence import BettiSequence, WitnessedCheck, counts, minimal_betti

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    """Outcome of classify for one character."""
    connected: bool
    sauer_ok: bool
    smoothable: bool
    witness: Optional[int] = None
    sauer_witness: Optional[int] = None
    boundary_equality: bool = False
    labels: Tuple[str, ...] = ()
    diagnostic: Optional[str] = None

    @property
    def consistent(self) -> bool:
        return self.connected == self.sauer_ok


@dataclass(frozen=True)
class RemarkReport:
    """Pass/fail per structural clause of a ghost-free Betti sequence."""
    clauses: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.clauses.values())

    def failed(self):
        return [name for name, ok in self.clauses.items() if not ok]


def sauer_condition(betti: BettiSequence) -> WitnessedCheck:
    """
    b_n > a_{n+2} for every 1 <= n <= k-1.

    Fails at the first p with b_p <= a_{p+2}; equality flags a boundary
    case that a ghost-free sequence never produces. Vacuous for k = 1.
    """
    for p in range(1, betti.k):
        b_p = betti.b[p - 1]
        a_p2 = betti.a[p + 1]
        if b_p <= a_p2:
            return WitnessedCheck(ok=False, clause='SAUER', index=p, equality=b_p == a_p2)
    return WitnessedCheck(ok=True)


def _labels(smoothable: bool) -> Tuple[str, ...]:
    if smoothable:
        return (
            VerdictLabels.SMOOTHABLE,
            VerdictLabels.SMOOTH_SURFACE,
            VerdictLabels.INTEGRAL_SURFACE,
            VerdictLabels.COMPONENT_GENERAL_SMOOTH,
        )
    return (
        VerdictLabels.NOT_SMOOTHABLE,
        VerdictLabels.NO_INTEGRAL_SURFACE,
        VerdictLabels.COMPONENT_GENERAL_REDUCED,
    )


def classify(chi: NumericalCharacter, on_integral_curve: bool = False) -> Verdict:
    """
    Decide smoothability of a character.

    Args:
        chi: Character
        on_integral_curve: Caller asserts the scheme lies on an integral
            curve of degree s, which forces connectedness

    Returns:
        Verdict carrying both criteria and the witnesses

    Raises:
        InconsistentHypothesisError: flag set on a non-connected character
    """
    connected = is_connected(chi)
    if on_integral_curve and not connected:
        raise InconsistentHypothesisError(
            f"Character {chi} has a gap, so the scheme lies on no integral curve of degree {chi.s}",
            entries=chi.to_list(),
        )

    betti = minimal_betti(chi)
    sauer = sauer_condition(betti)
    gap_list = gaps(chi)

    diagnostic = None
    if connected != sauer.ok:
        diagnostic = (
            f"connectedness={connected} disagrees with Betti criterion={sauer.ok} "
            f"for {chi} ({betti})"
        )
        logger.error(diagnostic)

    return Verdict(
        connected=connected,
        sauer_ok=sauer.ok,
        smoothable=connected,
        witness=gap_list[0] if gap_list else None,
        sauer_witness=sauer.index,
        boundary_equality=sauer.equality,
        labels=_labels(connected),
        diagnostic=diagnostic,
    )


def corollary_check(d: int, s: int, on_integral_surface: bool) -> str:
    """
    Sufficient condition from degree data alone.

    'smoothable' when the scheme lies on an integral curve of degree s
    and d > s(s-1); otherwise 'inconclusive', also for d or s below 1.
    """
    if d < 1 or s < 1:
        return VerdictLabels.INCONCLUSIVE
    if on_integral_surface and d > s * (s - 1):
        return VerdictLabels.SMOOTHABLE
    return VerdictLabels.INCONCLUSIVE


def remark_checks(chi: NumericalCharacter, betti: Optional[BettiSequence] = None) -> RemarkReport:
    """
    Structural identities between a character and its ghost-free Betti data.
    """
    if betti is None:
        betti = minimal_betti(chi)
    c = counts(chi)
    b_k = betti.b[-1]
    top_multiplicity = sum(1 for x in betti.b if x == b_k)

    clauses = {
        'a1_equals_s': betti.a[0] == chi.s,
        'a2_equals_last_entry': betti.a[1] == chi.tail,
        'bk_equals_n0_plus_one': b_k == chi.n0 + 1,
        'top_syzygy_multiplicity': top_multiplicity == c(chi.n0) == h1(chi, b_k - 3),
        'last_generator_bound': betti.a[-1] <= chi.n0,
    }
    report = RemarkReport(clauses=clauses)
    if not report.passed:
        logger.warning(f"Remark clauses {report.failed()} fail for {chi}")
    return report


def witness_property(chi: NumericalCharacter) -> Optional[bool]:
    """
    At the Betti witness p of a non-connected character,
    b_p = n_t + 1 and a_{p+2} = n_{t-1} for the gap t it reflects.

    Returns None for connected characters.
    """
    sauer = sauer_condition(minimal_betti(chi))
    if sauer.ok:
        return None
    betti = minimal_betti(chi)
    p = sauer.index
    b_p = betti.b[p - 1]
    a_p2 = betti.a[p + 1]
    return any(
        b_p == chi[t] + 1 and a_p2 == chi[t - 1]
        for t in gaps(chi)
    )
