"""Series-of-palindromes computations shared by the fast engines.

A series groups the palindromic suffixes having the same minimal period
p; members differ in length by exactly p, so consecutive list centers
inside a series differ by p in doubled coordinates.  The operations here
enumerate series with O(1) iterator queries each, locate the boundary of
the periodic run feeding a series (``compute_left``), and predict how
long periods and individual centers survive when upcoming letters keep
extending the longest palindromic suffix (``ttl_batch`` / ``pttl``).

Survival horizons use the "future adds" frame: a result of j means the
object survives the next j predicted adds, clipped at the given horizon.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .pal_iterator import PalIterator


@dataclass(frozen=True)
class SeriesDesc:
    """One series: period, head geometry, tail length, periodic-run boundary."""

    period: int
    head_center: int        # doubled
    head_len: int
    tail_len: int
    left: int               # -1 when the periodic run reaches position 0
    u_len: int              # head_len mod period

    @property
    def tail_center(self) -> int:
        return self.head_center + (self.head_len - self.tail_len)


@dataclass(frozen=True)
class TtlInfo:
    ttl_prime: int
    pttl_prime: int


def cntr(d: int, n: int) -> int:
    """Doubled center of the length-d suffix ending at position n."""
    return 2 * n - d + 1


def series_period(it: PalIterator, center: int) -> int:
    """Minimal period of the suffix-palindrome at ``center``: its length minus
    the length of its longest proper palindromic suffix."""
    nxt = it.next_pal(center)
    lam = it.length(center)
    return lam - (it.length(nxt) if nxt is not None else 0)


def tail_len(it: PalIterator, p: int, head_len: int) -> int:
    """Length of the shortest suffix-palindrome with minimal period p.

    The candidate of length p + (head_len mod p) is the tail unless its own
    minimal period is smaller, in which case it heads the next series and the
    true tail is one period longer.
    """
    n = it.last_index
    d0 = p + (head_len % p)
    if d0 == head_len:
        return d0
    y = cntr(d0, n)
    return d0 if series_period(it, y) == p else d0 + p


def compute_left(p: int, head_center: int, head_len: int, it: PalIterator) -> int:
    """Position just before the longest period-p suffix of the current text.

    Mirrors the center of the head's length-(head_len mod p) remainder
    palindrome across the head; the maximal palindrome there measures how far
    the period extends leftward of the head.  O(1) queries.
    """
    n = it.last_index
    u = head_len % p
    x1 = 2 * head_center - cntr(u, n)
    lz = (it.length(x1) - u) // 2 if x1 >= 0 else 0
    return n - head_len - lz


def enumerate_series(it: PalIterator) -> List[SeriesDesc]:
    """All series of the current text, longest head first; O(1) queries per series."""
    n = it.last_index
    out: List[SeriesDesc] = []
    x: int | None = it.max_pal()
    while x is not None:
        lam = it.length(x)
        p = series_period(it, x)
        d = tail_len(it, p, lam)
        out.append(SeriesDesc(
            period=p,
            head_center=x,
            head_len=lam,
            tail_len=d,
            left=compute_left(p, x, lam, it),
            u_len=lam % p,
        ))
        x = it.next_pal(cntr(d, n))
    return out


def pttl(center: int, t_prime: int, it: PalIterator) -> int:
    """Predicted adds (clipped at t_prime) that keep ``center`` a suffix-palindrome
    center, assuming every predicted letter extends the longest suffix-palindrome.

    The mirror of ``center`` across maxPal has a finalized radius; the margin
    between that radius and the center's current radius is exactly the number
    of extensions left.
    """
    if t_prime <= 0:
        return 0
    m = it.max_pal()
    if center == m:
        return t_prime
    margin = it.rad(2 * m - center) - it.rad(center)
    return margin if margin < t_prime else t_prime


def ttl_batch(series: List[SeriesDesc], t_prime: int, it: PalIterator) -> List[TtlInfo]:
    """Survival horizons for (big-period) series under the phase assumption.

    For each series: how many predicted adds the period keeps extending
    (ttl_prime) and how many its tail center survives (pttl_prime), both
    clipped at t_prime.  The period answer mirrors the head's remainder
    palindrome across maxPal: if the mirrored palindrome stops inside the
    predicted window its extra radius counts the surviving adds exactly;
    if it escapes, the period outlives the window and the clip applies.
    Requires every listed period to be at least the chunk width.
    """
    out: List[TtlInfo] = []
    if t_prime <= 0:
        return [TtlInfo(0, 0) for _ in series]
    n = it.last_index
    m = it.max_pal()
    for sd in series:
        y = cntr(sd.u_len, n)
        mirror = 2 * m - y
        u_rad = sd.u_len // 2
        margin = it.rad(mirror) - u_rad
        ttl_p = margin if margin < t_prime else t_prime
        out.append(TtlInfo(ttl_p, pttl(sd.tail_center, t_prime, it)))
    return out
