"""Shared value types for palindromic-length computations.

Lengths live in the extended naturals: a plain non-negative int, or INF
when no factorization of the wanted parity exists.  INF saturates under
+1 and is absorbing in min(), so parity bookkeeping never has to special
case it.
"""

from __future__ import annotations

from typing import NamedTuple, Union

INF = float("inf")

ExtLen = Union[int, float]


def is_inf(x: ExtLen) -> bool:
    return x == INF


class PlPair(NamedTuple):
    """(minimum even, minimum odd) number of palindromic factors of a prefix."""

    even: ExtLen
    odd: ExtLen


#: Value of PL[-1], the empty prefix: zero factors is even, never odd.
PL_EMPTY = PlPair(0, INF)

#: Identity element for pairwise minima.
PAIR_INF = PlPair(INF, INF)


def pair_min(a: PlPair, b: PlPair) -> PlPair:
    return PlPair(a.even if a.even <= b.even else b.even,
                  a.odd if a.odd <= b.odd else b.odd)


def pair_step(prev: PlPair) -> PlPair:
    """One more factor on top of ``prev``: swaps parity tracks and adds 1."""
    return PlPair(prev.odd + 1, prev.even + 1)
