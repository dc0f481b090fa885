"""Offline reconstruction of explicit palindromic factorizations.

Given the finished per-prefix length pairs and the palindrome iterator
of the same string, a minimum factorization of either parity is rebuilt
right to left: positions are bucketed by their level (the number of
factors, of alternating parity, needed up to them), and for each level
the candidate cut points are scanned until one closes a palindromic
factor against the current end.  Buckets are consumed destructively, so
every position serves as a candidate at most once and reconstruction
costs O(n) palindrome queries.

A factorization with the minimum count k' of some parity expands to any
k of the same parity up to the string length by splitting a factor aua
into a, u, a, or by exploding two length-2 factors into singletons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .core import INF, PlPair
from .linear_engine import LinearEngine
from .pal_iterator import PalIterator

#: length queries spent by the most recent min_parity_factorization call
last_query_count = 0


@dataclass(frozen=True)
class Factorization:
    """End positions (exclusive) of the factors, increasing; the last is len(s)."""

    boundaries: List[int]

    def factor_count(self) -> int:
        return len(self.boundaries)

    def factors(self, s: Sequence) -> List[Sequence]:
        out = []
        start = 0
        for end in self.boundaries:
            out.append(s[start:end])
            start = end
        return out


def min_parity_factorization(pl: List[PlPair], it: PalIterator,
                             parity: int) -> Optional[Factorization]:
    """A factorization of s into exactly pl^parity[n-1] palindromes, or None."""
    global last_query_count
    n = len(pl)
    assert it.last_index == n - 1, "iterator and pl cover different strings"
    k_prime = (pl[n - 1].even, pl[n - 1].odd)[parity]
    if k_prime == INF:
        return None
    k_prime = int(k_prime)
    queries = 0

    levels: List[List[int]] = [[] for _ in range(k_prime)]
    for j in range(n):
        e, o = pl[j]
        if e != INF and 1 <= e < k_prime:
            levels[int(e)].append(j)
        if o != INF and 1 <= o < k_prime:
            levels[int(o)].append(j)

    cuts = [n - 1]
    end = n - 1
    for i in range(k_prime - 1, 0, -1):
        bucket = levels[i]
        while bucket:
            j = bucket.pop()
            queries += 1
            if j < end and it.length(j + 1 + end) >= end - j:
                break
        else:
            raise AssertionError("no palindromic cut found; inputs inconsistent")
        end = j
        cuts.append(end)
    queries += 1
    assert it.length(end) >= end + 1, "residual prefix is not a palindrome"
    last_query_count = queries
    return Factorization([c + 1 for c in reversed(cuts)])


def expand_to_k(f: Factorization, s: Sequence, k: int) -> Factorization:
    """Grow a factorization by 2 factors at a time until it has exactly k."""
    count = f.factor_count()
    if k < count or (k - count) % 2 != 0 or k > len(s):
        raise ValueError("no k-factorization")
    bounds = list(f.boundaries)
    while count < k:
        start = 0
        split_at = None
        twos: List[int] = []
        for idx, end in enumerate(bounds):
            flen = end - start
            if flen >= 3:
                split_at = idx
                break
            if flen == 2:
                twos.append(idx)
                if len(twos) == 2:
                    break
            start = end
        if split_at is not None:
            start = bounds[split_at - 1] if split_at else 0
            end = bounds[split_at]
            bounds[split_at:split_at + 1] = [start + 1, end - 1, end]
        elif len(twos) == 2:
            for idx in reversed(twos):
                bounds[idx:idx + 1] = [bounds[idx] - 1, bounds[idx]]
        else:
            raise ValueError("no k-factorization")
        count += 2
    return Factorization(bounds)


def k_factorization(s: Sequence, k: int) -> Optional[Factorization]:
    """A palindromic k-factorization of s, or None if none exists."""
    n = len(s)
    if k < 1 or k > n:
        return None
    eng = LinearEngine(length_hint=n)
    for ch in s:
        eng.push(ch)
    eng.finish()
    pl = eng.pl_values()
    parity = k % 2
    target = (pl[n - 1].even, pl[n - 1].odd)[parity]
    if target == INF or target > k:
        return None
    base = min_parity_factorization(pl, eng.it, parity)
    assert base is not None
    return expand_to_k(base, s, k)
