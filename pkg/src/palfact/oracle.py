"""Brute-force ground truth for every fast path in this package.

Everything here is computed straight from definitions: palindromes by
direct comparison, the even/odd length recurrence by enumerating all
palindromic suffixes, factorizability by exhaustive search, series and
periods by scanning.  Deliberately simple; used as the oracle side of
differential tests.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence

from .core import INF, PL_EMPTY, PlPair
from .series_engine import SeriesDesc

MAX_EXHAUSTIVE_LEN = 18


def is_palindrome(s: Sequence, i: int = 0, j: int | None = None) -> bool:
    """True iff s[i..j] (inclusive) equals its reversal."""
    if j is None:
        j = len(s) - 1
    while i < j:
        if s[i] != s[j]:
            return False
        i += 1
        j -= 1
    return True


def suffix_palindrome_lengths(s: Sequence) -> List[int]:
    """Lengths of all non-empty palindromic suffixes, decreasing."""
    n = len(s)
    return [lam for lam in range(n, 0, -1) if is_palindrome(s, n - lam, n - 1)]


def suffix_palindrome_centers(s: Sequence) -> List[int]:
    """Doubled centers of all non-empty palindromic suffixes, increasing.

    A suffix of length lam ending at n-1 has doubled center 2(n-1) - lam + 1.
    """
    n = len(s)
    return [2 * (n - 1) - lam + 1 for lam in suffix_palindrome_lengths(s)]


def minimal_period(s: Sequence) -> int:
    """Smallest p in [1..len] such that s[i] == s[i+p] for all valid i."""
    n = len(s)
    for p in range(1, n + 1):
        if all(s[i] == s[i + p] for i in range(n - p)):
            return p
    raise AssertionError("unreachable: len is always a period")


def longest_periodic_suffix_start(s: Sequence, p: int) -> int:
    """left[p]: start-1 of the longest suffix of s with period p.

    Returns -1 when the whole string has period p.  Requires len(s) >= p.
    """
    n = len(s) - 1
    j = n - p
    while j >= 0 and s[j] == s[j + p]:
        j -= 1
    return j


def pl_pairs_naive(s: Sequence) -> List[PlPair]:
    """PL[i] = (even, odd) minimal factor counts for every prefix s[0..i].

    Recurrence: pl^j[k] = 1 + min over palindromic suffixes s[i..k] of
    pl^(1-j)[i-1], with the empty prefix counting as (0, INF).
    """
    n = len(s)
    out: List[PlPair] = []
    starts_prev: List[int] = []  # starts of palindromes ending at k-1
    for k in range(n):
        starts = [j - 1 for j in starts_prev if j >= 1 and s[j - 1] == s[k]]
        if k >= 1 and s[k - 1] == s[k]:
            starts.append(k - 1)
        starts.append(k)
        best0 = best1 = INF
        for i in starts:
            prev = out[i - 1] if i >= 1 else PL_EMPTY
            if prev.odd < best0:
                best0 = prev.odd
            if prev.even < best1:
                best1 = prev.even
        out.append(PlPair(best0 + 1, best1 + 1))
        starts_prev = starts
    return out


def has_k_factorization_exhaustive(s: Sequence, k: int) -> bool:
    """Exhaustively decide whether s splits into exactly k non-empty palindromes."""
    n = len(s)
    if n > MAX_EXHAUSTIVE_LEN:
        raise ValueError("input too large for exhaustive oracle")
    if k <= 0:
        return n == 0 and k == 0

    @lru_cache(maxsize=None)
    def can(pos: int, rem: int) -> bool:
        left = n - pos
        if rem == 0:
            return left == 0
        if rem > left:
            return False
        for end in range(pos, n):
            if is_palindrome(s, pos, end) and can(end + 1, rem - 1):
                return True
        return False

    result = can(0, k)
    can.cache_clear()
    return result


def series_naive(s: Sequence) -> List[SeriesDesc]:
    """All series of s: maximal groups of palindromic suffixes sharing a minimal period.

    Head-to-tail order within each series; series listed longest-head first.
    """
    if not s:
        raise ValueError("series of empty string")
    n = len(s)
    lengths = suffix_palindrome_lengths(s)
    periods = [minimal_period(s[n - lam:]) for lam in lengths]
    out: List[SeriesDesc] = []
    i = 0
    while i < len(lengths):
        j = i
        while j + 1 < len(lengths) and periods[j + 1] == periods[i]:
            j += 1
        p = periods[i]
        head_len = lengths[i]
        tail_len = lengths[j]
        out.append(SeriesDesc(
            period=p,
            head_center=2 * (n - 1) - head_len + 1,
            head_len=head_len,
            tail_len=tail_len,
            left=longest_periodic_suffix_start(s, p),
            u_len=head_len % p,
        ))
        i = j + 1
    return out


def predicted_letters(s: Sequence, h: int) -> list:
    """The h letters that would extend the longest palindromic suffix of s.

    Letter i (1-based) mirrors position maxpal - (n-1) - i across the
    current longest suffix-palindrome's center (doubled coordinates).
    """
    n = len(s) - 1
    lam = suffix_palindrome_lengths(s)[0]
    m = 2 * n - lam + 1  # doubled center of the longest palindromic suffix
    out = []
    for i in range(1, h + 1):
        pos = m - n - i
        if pos < 0:
            raise ValueError("horizon exceeds the extension capacity of maxPal")
        out.append(s[pos])
    return out


def pttl_simulate(s: Sequence, center: int, h: int) -> int:
    """Adds (out of the next h predicted ones) that keep ``center`` a suffix-palindrome center."""
    ext = list(s) + predicted_letters(s, h)
    n = len(s) - 1
    for j in range(1, h + 1):
        lo = center - (n + j)
        if lo < 0 or not is_palindrome(ext, lo, n + j):
            return j - 1
    return h


def ttl_simulate(s: Sequence, p: int, h: int) -> int:
    """Adds (out of the next h predicted ones) that extend the period-p suffix run."""
    ext = list(s) + predicted_letters(s, h)
    n = len(s) - 1
    for j in range(1, h + 1):
        if ext[n + j] != ext[n + j - p]:
            return j - 1
    return h
