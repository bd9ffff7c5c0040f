"""
Betti sequences of length-one resolutions and their conversions.

A zero-dimensional plane scheme has a resolution
0 -> sum O(-b_j) -> sum O(-a_i) -> I -> 0 with k syzygies and k+1
generators. Everything is stored ascending (a_1 smallest); the
descending display common in print is only a presentation choice.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from charcore import HilbertTable, NumericalCharacter, character_from_delta
from charcore.character import forms_of_degree
from core.constants import SweepConstants
from core.exceptions import (
    BettiSequenceError,
    NegativeDimensionError,
    NotRealizableError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiSequence:
    """
    Generator degrees a (k+1 of them) and syzygy degrees b (k of them).

    The sum condition and the interlacing b_j > a_{j+1} are not enforced
    here; is_realizable reports on them.
    """
    a: Tuple[int, ...]
    b: Tuple[int, ...]

    def __post_init__(self):
        a = tuple(sorted(self.a))
        b = tuple(sorted(self.b))
        if not b or len(a) != len(b) + 1:
            raise BettiSequenceError(
                f"Need k >= 1 syzygies and k+1 generators, got {len(a)} and {len(b)}",
                a=list(a), b=list(b),
            )
        if any(isinstance(x, bool) or not isinstance(x, int) for x in a + b):
            raise BettiSequenceError("Betti degrees must be integers", a=list(a), b=list(b))
        if a[0] < 1:
            raise BettiSequenceError("Generator degrees must be positive", a=list(a), b=list(b))
        if b[0] < 2:
            raise BettiSequenceError("Syzygy degrees must be at least 2", a=list(a), b=list(b))
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)

    @property
    def k(self) -> int:
        return len(self.b)

    def alpha(self) -> Dict[int, int]:
        """Generator count per degree."""
        return dict(sorted(Counter(self.a).items()))

    def beta(self) -> Dict[int, int]:
        """Syzygy count per degree."""
        return dict(sorted(Counter(self.b).items()))

    def with_ghosts(self, degree: int, count: int = 1) -> 'BettiSequence':
        """Append `count` equal pairs (degree, degree) to a and b."""
        return BettiSequence(self.a + (degree,) * count, self.b + (degree,) * count)

    def __str__(self):
        return f"a={self.a}, b={self.b}"


@dataclass(frozen=True)
class CountFunction:
    """c(n) = #{i | n_i = n} for a character."""
    values: Dict[int, int]

    def __call__(self, n: int) -> int:
        return self.values.get(n, 0)

    @property
    def total(self) -> int:
        return sum(self.values.values())


@dataclass(frozen=True)
class WitnessedCheck:
    """Boolean outcome with the first violated clause and its index."""
    ok: bool
    clause: Optional[str] = None
    index: Optional[int] = None
    equality: bool = False

    def __bool__(self):
        return self.ok


def counts(chi: NumericalCharacter) -> CountFunction:
    return CountFunction(dict(sorted(Counter(chi.entries).items())))


def minimal_betti(chi: NumericalCharacter,
                  ghosts: Optional[Tuple[int, int]] = None) -> BettiSequence:
    """
    Ghost-free Betti sequence of a character.

    alpha_s = c(s) + 1 and, for n > s, alpha_n - beta_n = c(n) - c(n-1)
    with min(alpha_n, beta_n) = 0. No syzygy sits in degree <= s.

    Args:
        chi: Character
        ghosts: Optional (degree, count) of equal pairs to inject

    Returns:
        BettiSequence
    """
    c = counts(chi)
    s = chi.s
    a = [s] * (c(s) + 1)
    b = []
    for n in range(s + 1, chi.n0 + 2):
        jump = c(n) - c(n - 1)
        if jump > 0:
            a.extend([n] * jump)
        elif jump < 0:
            b.extend([n] * (-jump))

    result = BettiSequence(tuple(a), tuple(b))
    if ghosts is not None:
        ghost_degree, ghost_count = ghosts
        result = result.with_ghosts(ghost_degree, ghost_count)
    return result


def is_realizable(betti: BettiSequence) -> WitnessedCheck:
    """
    Existence test for a scheme with the given Betti numbers.

    True iff sum(b) = sum(a) and b_j > a_{j+1} for 1 <= j <= k. On
    failure the clause is 'SUM' or 'ORDER' with the 1-based index j.
    """
    if sum(betti.a) != sum(betti.b):
        return WitnessedCheck(ok=False, clause=NotRealizableError.SUM)
    for j in range(betti.k):
        if betti.b[j] <= betti.a[j + 1]:
            return WitnessedCheck(
                ok=False,
                clause=NotRealizableError.ORDER,
                index=j + 1,
                equality=betti.b[j] == betti.a[j + 1],
            )
    return WitnessedCheck(ok=True)


def require_realizable(betti: BettiSequence) -> None:
    """Raise NotRealizableError naming the first violated clause."""
    check = is_realizable(betti)
    if check:
        return
    if check.clause == NotRealizableError.SUM:
        message = f"sum(b)={sum(betti.b)} differs from sum(a)={sum(betti.a)}"
    else:
        j = check.index
        message = f"b_{j}={betti.b[j - 1]} is not larger than a_{j + 1}={betti.a[j]}"
    raise NotRealizableError(
        message, clause=check.clause, index=check.index,
        a=list(betti.a), b=list(betti.b),
    )


def scheme_degree(betti: BettiSequence) -> int:
    """Length of the scheme, (sum b_j^2 - sum a_i^2) / 2."""
    return (sum(x * x for x in betti.b) - sum(x * x for x in betti.a)) // 2


def betti_to_hilbert(betti: BettiSequence, window: Optional[int] = None) -> HilbertTable:
    """
    Hilbert table predicted by the resolution.

    h0(n) = sum_i binom(n - a_i + 2, 2) - sum_j binom(n - b_j + 2, 2).

    Raises:
        NotRealizableError: if the sums differ
        NegativeDimensionError: if some predicted value is negative
    """
    if sum(betti.a) != sum(betti.b):
        require_realizable(betti)
    if window is None:
        window = betti.b[-1] + SweepConstants.TABLE_MARGIN

    values = []
    for n in range(window + 1):
        h0 = sum(forms_of_degree(n - x) for x in betti.a) - sum(forms_of_degree(n - x) for x in betti.b)
        if h0 < 0:
            raise NegativeDimensionError(f"h0({n}) = {h0} < 0 for {betti}", degree=n)
        value = forms_of_degree(n) - h0
        if value < 0:
            raise NegativeDimensionError(f"H({n}) = {value} < 0 for {betti}", degree=n)
        if values and value < values[-1]:
            raise NegativeDimensionError(f"Delta({n}) < 0 for {betti}", degree=n)
        values.append(value)

    return HilbertTable.from_hilbert_values(values, scheme_degree(betti))


def betti_to_character(betti: BettiSequence) -> NumericalCharacter:
    """
    Recover the character from Betti data through the first difference.

    Raises:
        NegativeDimensionError: propagated from betti_to_hilbert
        NotACharacterError: if the difference function is not a character's
    """
    table = betti_to_hilbert(betti, window=betti.b[-1] + SweepConstants.TABLE_MARGIN)
    return character_from_delta(table.delta)


def h0_increment(chi: NumericalCharacter, n: int) -> int:
    """
    h0(I(n+1)) - h0(I(n)) from the counts alone.

    Equals n + 2 - s + c(n+1) + ... + c(s) once n + 1 >= s, and 0 below.
    """
    s = chi.s
    if n + 1 < s:
        return 0
    c = counts(chi)
    return n + 2 - s + sum(c(m) for m in range(s, n + 2))


def split_betti(betti: BettiSequence, p: int) -> Tuple[int, BettiSequence]:
    """
    Factor off the common curve of the first p+1 generators.

    When b_p <= a_{p+2} every entry below the first p columns and the
    first p+1 rows vanishes, so the matrix is block triangular. The lower
    square block has determinant degree t and the first p+1 generators
    are t-multiples of the residual scheme's generators.

    Args:
        betti: Realizable Betti sequence
        p: 1-based index with 1 <= p <= k-1

    Returns:
        (t, residual Betti sequence)

    Raises:
        NotRealizableError: if there is no block structure at p
    """
    if not 1 <= p <= betti.k - 1 or betti.b[p - 1] > betti.a[p + 1]:
        raise NotRealizableError(
            f"No block structure at p={p} for {betti}",
            clause='BLOCK', index=p, a=list(betti.a), b=list(betti.b),
        )
    t = sum(betti.b[p:]) - sum(betti.a[p + 1:])
    residual = BettiSequence(
        tuple(x - t for x in betti.a[:p + 1]),
        tuple(x - t for x in betti.b[:p]),
    )
    return t, residual


