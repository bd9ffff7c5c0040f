"""
Exhaustive enumeration of numerical characters.
"""

from typing import Iterator, List

from .character import NumericalCharacter


def minimal_degree(s: int) -> int:
    """Smallest degree of a character of length s, reached by (s, ..., s)."""
    return s * (s + 1) // 2


def enumerate_characters(s_max: int, d_max: int) -> Iterator[NumericalCharacter]:
    """
    Yield every character with length <= s_max and degree <= d_max.

    Order is lexicographic by (s, entries): all characters of length 1
    first, then length 2, and so on, each block sorted by entries.

    Args:
        s_max: Largest length
        d_max: Largest degree

    Yields:
        NumericalCharacter, each exactly once
    """
    for s in range(1, s_max + 1):
        if minimal_degree(s) > d_max:
            break
        for entries in _sequences(s, [], d_max):
            yield NumericalCharacter(tuple(entries))


def _sequences(length: int, prefix: List[int], budget: int) -> Iterator[List[int]]:
    index = len(prefix)
    if index == length:
        yield prefix
        return

    # every later entry is at least `length`
    rest_minimum = sum(length - j for j in range(index + 1, length))
    upper = prefix[-1] if prefix else None
    value = length
    while upper is None or value <= upper:
        cost = value - index
        if cost + rest_minimum > budget:
            break
        yield from _sequences(length, prefix + [value], budget - cost)
        value += 1
