"""Online Manacher-style structure over a growing string.

Maintains, after every ``add``, the exact ordered list of centers of all
non-empty palindromic suffixes, plus finalized maximal radii for every
center whose palindrome can no longer grow.  Queries are O(1); ``add``
costs O(1 + deaths + live series), which is linear overall on typical
inputs because series counts stay logarithmic.

Centers are doubled integers: center value v encodes the rational center
v/2, so even v is an odd-length palindrome center and odd v an
even-length one.  A palindrome ending at the last index n with center v
spans text[v-n .. n] and has length 2n - v + 1.

Letters are opaque; only ``==`` is ever used on them.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import List, Optional

NO_NODE = -1


@dataclass(frozen=True)
class DeadRecord:
    """Query answers for a suffix-palindrome center frozen at its death.

    ``length``/``rad`` describe the maximal palindrome at ``center`` (final
    from now on); ``next_center_len`` is the length of its longest proper
    palindromic suffix, 0 if none.
    """

    center: int
    length: int
    rad: int
    next_center_len: int


class PalIterator:
    """Single-writer online palindrome iterator.

    Not safe for concurrent mutation; a finished instance may be queried
    from multiple threads.
    """

    __slots__ = ("text", "_rad", "_next", "_prev", "_alive", "_head", "_tail",
                 "ops")

    def __init__(self) -> None:
        self.text: list = []
        self._rad = array("i")
        self._next = array("i")
        self._prev = array("i")
        self._alive = bytearray()
        self._head = NO_NODE
        self._tail = NO_NODE
        self.ops = 0  # instrumented work counter for the linearity tests

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    @property
    def last_index(self) -> int:
        return len(self.text) - 1

    def rad(self, center: int) -> int:
        """Maximal radius of the palindrome centered at ``center``."""
        assert 0 <= center <= 2 * self.last_index, "center out of range"
        if self._alive[center]:
            return (2 * self.last_index - center + 1) // 2
        return self._rad[center]

    def length(self, center: int) -> int:
        """Maximal palindrome length at ``center`` (0 when only the empty one)."""
        r = self.rad(center)
        return 2 * r + (1 if center % 2 == 0 else 0)

    def max_pal(self) -> int:
        """Center of the longest palindromic suffix."""
        if self._head == NO_NODE:
            raise ValueError("no palindrome")
        return self._head

    def next_pal(self, center: int) -> Optional[int]:
        """Center of the longest proper palindromic suffix of the suffix-palindrome
        at ``center``; None past the last one."""
        assert self._alive[center], "center is not a suffix-palindrome center"
        nxt = self._next[center]
        return None if nxt == NO_NODE else nxt

    def is_suffix_center(self, center: int) -> bool:
        return center <= 2 * self.last_index and bool(self._alive[center])

    def suffix_centers(self) -> List[int]:
        """All suffix-palindrome centers, increasing (test hook; O(list))."""
        out = []
        v = self._head
        while v != NO_NODE:
            out.append(v)
            v = self._next[v]
        return out

    # ------------------------------------------------------------------
    # update
    # ------------------------------------------------------------------

    def add(self, letter) -> List[DeadRecord]:
        """Append ``letter``; rebuild the suffix list; report removed centers."""
        text = self.text
        text.append(letter)
        n = len(text) - 1
        m = n - 1
        grow = 2 if n else 1
        for _ in range(grow):
            self._rad.append(0)
            self._next.append(NO_NODE)
            self._prev.append(NO_NODE)
            self._alive.append(0)

        dead: List[DeadRecord] = []

        # Longest suffix-palindromes that cannot absorb `letter` die first.
        head = self._head
        while head != NO_NODE:
            self.ops += 1
            pos = head - n
            if pos >= 0 and text[pos] == letter:
                break
            self._kill(head, m, dead)
            head = self._head

        if head != NO_NODE:
            self._sweep_series(head, n, m, letter, dead)

        if n >= 1:
            even_center = 2 * n - 1
            if text[n - 1] == letter:
                self._link_tail(even_center)
            # else: the center stays with an empty palindrome, radius 0 final
        self._link_tail(2 * n)
        return dead

    def _sweep_series(self, survivor: int, n: int, m: int, letter,
                      dead: List[DeadRecord]) -> None:
        """Resolve survival for every remaining list member, one series at a time.

        Inside one series all non-head members extend iff the periodic run
        extends, so a single letter probe decides them; only the head (whose
        probe sits on the period boundary) needs its own test.  Series heads
        and tails are located arithmetically, never by walking members.
        """
        text = self.text
        x = survivor
        first = True
        while x != NO_NODE:
            self.ops += 1
            nxt = self._next[x]
            lam = 2 * m - x + 1
            p = (nxt - x) if nxt != NO_NODE else lam
            # tail of this series: candidate length p + (lam mod p), bumped by
            # p when the candidate's own minimal period disagrees
            d0 = p + (lam % p)
            if d0 == lam:
                d = d0
            else:
                y = 2 * m - d0 + 1
                ny = self._next[y]
                q = (ny - y) if ny != NO_NODE else d0
                d = d0 if q == p else d0 + p
            tail = 2 * m - d + 1
            after = self._next[tail]

            if first:
                head_live = True
                first = False
            else:
                head_live = text[x - n] == letter
            if not head_live:
                self._kill(x, m, dead)
            if tail != x and text[x + p - n] != letter:
                w = x + p
                while True:
                    self.ops += 1
                    wn = self._next[w]
                    self._kill(w, m, dead)
                    if w == tail:
                        break
                    w = wn
            x = after

    def _kill(self, v: int, m: int, dead: List[DeadRecord]) -> None:
        lam = 2 * m - v + 1
        r = lam // 2
        nxt = self._next[v]
        ncl = (2 * m - nxt + 1) if nxt != NO_NODE else 0
        dead.append(DeadRecord(center=v, length=lam, rad=r, next_center_len=ncl))
        self._rad[v] = r
        self._unlink(v)

    def _unlink(self, v: int) -> None:
        p, nx = self._prev[v], self._next[v]
        if p != NO_NODE:
            self._next[p] = nx
        else:
            self._head = nx
        if nx != NO_NODE:
            self._prev[nx] = p
        else:
            self._tail = p
        self._alive[v] = 0
        self._next[v] = self._prev[v] = NO_NODE

    def _link_tail(self, v: int) -> None:
        t = self._tail
        self._prev[v] = t
        self._next[v] = NO_NODE
        if t != NO_NODE:
            self._next[t] = v
        else:
            self._head = v
        self._tail = v
        self._alive[v] = 1
