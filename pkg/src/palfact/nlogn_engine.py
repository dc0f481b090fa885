"""Online engine: one series walk per letter, O(n log n) overall.

For every arriving letter the engine walks the series of palindromic
suffixes (there are O(log n) of them) and, per series, folds one
committed PL value into that period's precomputed-minimum array, then
improves PL[n] through the freshly folded slot.  The per-period arrays
``pre[p]`` hold, at index i, the minimum of PL over committed positions
in residue class i of the current period-p run; they are cleared lazily
when the stored run boundary goes stale.

Serves as the mid-tier reference: exact like the brute-force oracle,
fast enough to differential-test the linear engine on long inputs.
Single-threaded; snapshots of finished state may be shared.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .core import INF, PL_EMPTY, PlPair
from .pal_iterator import PalIterator
from .series_engine import cntr, compute_left, series_period, tail_len


@dataclass(frozen=True)
class PreElement:
    value: Optional[PlPair]
    defined: bool


class NlognEngine:

    def __init__(self) -> None:
        self.it = PalIterator()
        self.pl: List[PlPair] = []
        self.pre: Dict[int, Tuple[List[Optional[PlPair]], int]] = {}
        self.series_visits = 0  # instrumented: series processed over the run

    def push(self, letter) -> PlPair:
        it = self.it
        it.add(letter)
        n = it.last_index
        pl = self.pl
        best_e = best_o = INF

        x: Optional[int] = it.max_pal()
        while x is not None:
            self.series_visits += 1
            lam = it.length(x)
            p = series_period(it, x)
            d = tail_len(it, p, lam)

            left = compute_left(p, x, lam, it)
            entry = self.pre.get(p)
            if entry is None or entry[1] != left:
                entry = ([None] * p, left)
                self.pre[p] = entry
            slots = entry[0]
            i = n - lam - left
            src = pl[n - d] if n >= d else PL_EMPTY
            cur = slots[i]
            if cur is None:
                slots[i] = src
            else:
                slots[i] = PlPair(cur.even if cur.even <= src.even else src.even,
                                  cur.odd if cur.odd <= src.odd else src.odd)
            v = slots[i]
            if v.odd + 1 < best_e:
                best_e = v.odd + 1
            if v.even + 1 < best_o:
                best_o = v.even + 1

            x = it.next_pal(cntr(d, n))

        res = PlPair(best_e, best_o)
        pl.append(res)
        return res

    def pre_snapshot(self, p: int) -> List[PreElement]:
        """Current contents of the period-p minima array (test hook)."""
        entry = self.pre.get(p)
        if entry is None:
            raise KeyError(f"no data for period {p}")
        return [PreElement(v, v is not None) for v in entry[0]]

    def run(self, letters) -> List[PlPair]:
        return [self.push(ch) for ch in letters]
