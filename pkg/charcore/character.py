"""
Numerical characters of zero-dimensional subschemes of the plane.

A character (n_0, ..., n_{s-1}) with n_0 >= ... >= n_{s-1} >= s encodes
the Hilbert function of the scheme. This module holds the character
types and the calculus on them: degree, h1, first difference, Hilbert
tables, connectedness, splitting at a gap and the recursive
decomposition into connected pieces.
"""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, List, Optional, Sequence, Tuple

from core.constants import ErrorMessages, SweepConstants
from core.exceptions import (
    CharacterValidationError,
    InvalidLiftStepError,
    NotACharacterError,
    NoGapError,
    WindowTooSmallError,
)

logger = logging.getLogger(__name__)


def positive_part(x: int) -> int:
    """[x]_+ = max(x, 0)."""
    return x if x > 0 else 0


def forms_of_degree(n: int) -> int:
    """Dimension of the space of ternary forms of degree n (0 for n < 0)."""
    return comb(n + 2, 2) if n >= 0 else 0


@dataclass(frozen=True)
class NumericalCharacter:
    """
    Validated numerical character.

    Construction always validates, so downstream code never re-checks
    the nonincreasing and tail-bound conditions.
    """
    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise CharacterValidationError(
                ErrorMessages.EMPTY_CHARACTER,
                reason=CharacterValidationError.EMPTY,
                entries=[],
            )
        for value in entries:
            if isinstance(value, bool) or not isinstance(value, int):
                raise CharacterValidationError(
                    ErrorMessages.NOT_INTEGER.format(value=value),
                    reason=CharacterValidationError.NOT_INTEGER,
                    entries=list(entries),
                )
        for i in range(len(entries) - 1):
            if entries[i] < entries[i + 1]:
                raise CharacterValidationError(
                    ErrorMessages.NOT_NONINCREASING.format(index=i, next=i + 1),
                    reason=CharacterValidationError.NOT_NONINCREASING,
                    entries=list(entries),
                    index=i,
                )
        s = len(entries)
        if entries[-1] < s:
            raise CharacterValidationError(
                ErrorMessages.TAIL_BELOW_LENGTH.format(index=s - 1, value=entries[-1], length=s),
                reason=CharacterValidationError.TAIL_BELOW_LENGTH,
                entries=list(entries),
                index=s - 1,
            )
        object.__setattr__(self, 'entries', entries)

    @property
    def s(self) -> int:
        """Length, the least degree of a curve containing the scheme."""
        return len(self.entries)

    @property
    def n0(self) -> int:
        return self.entries[0]

    @property
    def tail(self) -> int:
        return self.entries[-1]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __str__(self):
        return '(' + ', '.join(str(n) for n in self.entries) + ')'

    def to_list(self) -> List[int]:
        return list(self.entries)


@dataclass(frozen=True)
class HilbertTable:
    """
    Tabulated Hilbert function data over the window [0, window].

    H is the Hilbert function of the quotient, delta its first
    difference, h0 the dimension of the ideal in each degree and h1
    the defect deg - H.
    """
    degree: int
    H: Tuple[int, ...]
    delta: Tuple[int, ...] = field(default=())
    h0: Tuple[int, ...] = field(default=())
    h1: Tuple[int, ...] = field(default=())

    @classmethod
    def from_hilbert_values(cls, values: Sequence[int], degree: int) -> 'HilbertTable':
        """Assemble the full table from H(0..N) and the total degree."""
        values = tuple(int(v) for v in values)
        delta = tuple(
            values[n] - (values[n - 1] if n > 0 else 0) for n in range(len(values))
        )
        h0 = tuple(forms_of_degree(n) - values[n] for n in range(len(values)))
        h1 = tuple(degree - values[n] for n in range(len(values)))
        return cls(degree=degree, H=values, delta=delta, h0=h0, h1=h1)

    @property
    def window(self) -> int:
        return len(self.H) - 1


@dataclass(frozen=True)
class SplitResult:
    """Top and residual characters of a split at the gap index t."""
    t: int
    top: NumericalCharacter
    residual: NumericalCharacter


def validate(entries: Iterable[int]) -> NumericalCharacter:
    """
    Validate an integer sequence as a numerical character.

    Args:
        entries: Candidate entries (n_0, ..., n_{s-1})

    Returns:
        NumericalCharacter

    Raises:
        CharacterValidationError: naming the violated clause
    """
    return NumericalCharacter(tuple(entries))


def degree(chi: NumericalCharacter) -> int:
    """deg = sum(n_i - i)."""
    return sum(n - i for i, n in enumerate(chi.entries))


def h1(chi: NumericalCharacter, n: int) -> int:
    """h1 of the ideal sheaf twisted by n, from the closed formula."""
    return sum(
        positive_part(n_i - n - 1) - positive_part(i - n - 1)
        for i, n_i in enumerate(chi.entries)
    )


def delta(chi: NumericalCharacter, i: int) -> int:
    """First difference of the Hilbert function at i >= 0."""
    if i < 0:
        return 0
    if i < chi.s:
        return i + 1
    return sum(1 for n in chi.entries if n >= i + 1)


def hilbert_table(chi: NumericalCharacter, window: Optional[int] = None) -> HilbertTable:
    """
    Tabulate H, delta, h0 and h1 over [0, window].

    Args:
        chi: Character
        window: Last degree, defaults to n0 + 2 so the plateau is visible

    Raises:
        WindowTooSmallError: if window < n0
    """
    if window is None:
        window = chi.n0 + SweepConstants.TABLE_MARGIN
    if window < chi.n0:
        raise WindowTooSmallError(window, chi.n0)

    values = []
    running = 0
    for n in range(window + 1):
        running += delta(chi, n)
        values.append(running)
    return HilbertTable.from_hilbert_values(values, degree(chi))


def is_connected(chi: NumericalCharacter) -> bool:
    """True iff n_i <= n_{i+1} + 1 throughout."""
    entries = chi.entries
    return all(entries[i] <= entries[i + 1] + 1 for i in range(len(entries) - 1))


def gaps(chi: NumericalCharacter) -> List[int]:
    """All t (ascending) with n_{t-1} > n_t + 1."""
    entries = chi.entries
    return [t for t in range(1, len(entries)) if entries[t - 1] > entries[t] + 1]


def is_strictly_decreasing_type(delta_values: Sequence[int]) -> bool:
    """
    Check that a first-difference sequence is of strictly decreasing type.

    Delta(i) = i + 1 below s; from the first drop on it must drop at every
    step until it reaches 0. The sequence has to run until it is 0.
    """
    values = list(delta_values)
    if not values or values[-1] != 0:
        raise NotACharacterError("Difference sequence must run until it vanishes", delta=values)

    s = next(i for i, v in enumerate(values) if v < i + 1)
    if s == 0:
        return False

    decreasing = False
    for i in range(s - 1, len(values) - 1):
        current, following = values[i], values[i + 1]
        if following > current:
            return False
        if following < current:
            decreasing = True
        elif decreasing and current > 0:
            return False
    return True


def split_at(chi: NumericalCharacter, t: int) -> SplitResult:
    """
    Split a character at a gap t (n_{t-1} > n_t + 1).

    The top piece keeps (n_0, ..., n_{t-1}); the residual is
    m_i = n_{t+i} - t.

    Raises:
        NoGapError: if 1 <= t <= s-1 fails or there is no gap at t
    """
    entries = chi.entries
    if not 1 <= t <= len(entries) - 1 or entries[t - 1] <= entries[t] + 1:
        raise NoGapError(entries, t)

    top = NumericalCharacter(entries[:t])
    residual = NumericalCharacter(tuple(n - t for n in entries[t:]))
    return SplitResult(t=t, top=top, residual=residual)


def decompose(chi: NumericalCharacter) -> List[Tuple[int, NumericalCharacter]]:
    """
    Decompose a character into connected pieces with cumulative shifts.

    Always splits at the smallest gap. Adding each shift back to its
    piece and concatenating reproduces chi.
    """
    pieces = []
    shift = 0
    current = chi
    while True:
        current_gaps = gaps(current)
        if not current_gaps:
            pieces.append((shift, current))
            break
        result = split_at(current, current_gaps[0])
        pieces.append((shift, result.top))
        shift += result.t
        current = result.residual

    logger.debug(f"Decomposed {chi} into {len(pieces)} connected pieces")
    return pieces


def recompose(pieces: Sequence[Tuple[int, NumericalCharacter]]) -> NumericalCharacter:
    """Undo decompose: shift each piece back and concatenate."""
    entries = []
    for shift, piece in pieces:
        entries.extend(n + shift for n in piece.entries)
    return NumericalCharacter(tuple(entries))


def lift(chi: NumericalCharacter, step: int) -> NumericalCharacter:
    """
    Lengthen a character by one: (n_0 + step, n_0 + 1, n_1 + 1, ..., n_{s-1} + 1).

    step is 1 or 2; both moves keep a connected character connected.
    """
    if step not in (1, 2):
        raise InvalidLiftStepError(step)
    return NumericalCharacter((chi.n0 + step,) + tuple(n + 1 for n in chi.entries))


def lift_chain(chi: NumericalCharacter) -> Tuple[NumericalCharacter, List[int]]:
    """
    Peel a connected character back to its length-one seed.

    Returns:
        (seed, steps) such that lifting seed by steps in order gives chi

    Raises:
        CharacterValidationError: if chi is not connected
    """
    if not is_connected(chi):
        raise CharacterValidationError(
            ErrorMessages.NOT_CONNECTED.format(entries=chi),
            reason=CharacterValidationError.NOT_CONNECTED,
            entries=chi.to_list(),
        )

    steps = []
    current = chi
    while current.s > 1:
        steps.append(current[0] - current[1] + 1)
        current = NumericalCharacter(tuple(n - 1 for n in current.entries[1:]))
    steps.reverse()
    return current, steps


def character_from_delta(delta_values: Sequence[int]) -> NumericalCharacter:
    """
    Invert a first-difference sequence into the character it comes from.

    Delta(i) = #{l | n_l >= i + 1} for i >= s - 1, so n_l is one more than
    the last i with Delta(i) > l. The sequence has to run until it is 0.

    Raises:
        NotACharacterError: if no character has this first difference
    """
    diff = list(delta_values)
    s = next((i for i, v in enumerate(diff) if v < i + 1), None)
    if s is None or s == 0 or diff[-1] != 0:
        raise NotACharacterError(f"Difference function {diff} has no character", delta=diff)

    entries = [
        1 + max(i for i in range(s - 1, len(diff)) if diff[i] > l)
        for l in range(s)
    ]
    try:
        chi = NumericalCharacter(tuple(entries))
    except CharacterValidationError as e:
        raise NotACharacterError(
            f"Inverted sequence {entries} is not a character: {e.message}", delta=diff
        ) from e

    if list(hilbert_table(chi, window=len(diff) - 1).delta) != diff:
        raise NotACharacterError(
            f"Difference function {diff} is not of the form of a character", delta=diff
        )
    return chi
