"""Phase-structured online engine with chunk-compressed state.

Letters are processed in phases of up to ``t`` iterations.  While the
longest palindromic suffix keeps absorbing letters, its interior is
symmetric, so the whole phase's per-series work can be predicted at the
phase start: for every big-period series one batched update folds the
upcoming committed-PL sources into that period's minima array and mins
the answers into a work buffer W holding the in-flight PL values for
the phase positions.  Small-period series, and any series born after
the phase start, are processed element-wise each iteration, exactly
like the n-log-n engine but against chunked storage.  A letter that
breaks the longest suffix-palindrome aborts the phase: W's unused
predictions are discarded, and any period the stale predictions touched
broke at that very letter, so its array is cleared before reuse.

Committed PL values are exact and sealed into width-t chunks.  The
per-period arrays hold smoothed chunks; smoothing only ever lowers a
slot to a value that a genuine palindromic suffix still witnesses, so
reads stay exact for the dynamic program.

Single-threaded; the values returned by ``push`` are plain tuples.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from .core import INF, PL_EMPTY, PlPair
from .chunk_codec import Chunk, ChunkCodec, ChunkConfig, DIRECT, default_width
from .pal_iterator import NO_NODE, DeadRecord, PalIterator
from .pre_array import PreArray
from .series_engine import cntr


def _walk_series(it: PalIterator):
    """(period, head_center, head_len, tail_len, tail_center) per series.

    Inlined iterator access: a live center v ends at the last index n,
    so its length is 2n - v + 1 and its successor is the next entry of
    the suffix list.
    """
    nxt = it._next
    two_n = 2 * it.last_index
    out = []
    x = it._head
    while x != NO_NODE:
        lam = two_n - x + 1
        nx = nxt[x]
        p = (nx - x) if nx != NO_NODE else lam
        d0 = p + (lam % p)
        if d0 == lam:
            d = d0
        else:
            y = two_n - d0 + 1
            ny = nxt[y]
            q = (ny - y) if ny != NO_NODE else d0
            d = d0 if q == p else d0 + p
        tail = two_n - d + 1
        out.append((p, x, lam, d, tail))
        x = nxt[tail]
    return out


class PhaseState:
    __slots__ = ("n0", "maxpal", "t_prime", "w_even", "w_odd", "done", "ops",
                 "predicted", "start_period")

    def __init__(self, n0: int, maxpal: int, t_prime: int, start_period: int):
        self.n0 = n0
        self.maxpal = maxpal
        self.t_prime = t_prime
        self.w_even = [INF] * t_prime
        self.w_odd = [INF] * t_prime
        self.done = 0
        self.ops = 0
        self.predicted: Dict[int, int] = {}  # period -> iterations batched
        self.start_period = start_period


class LinearEngine:
    """Online even/odd palindromic lengths in amortized constant work per letter."""

    def __init__(self, chunk_width: Optional[int] = None,
                 op_mode: str = DIRECT,
                 length_hint: Optional[int] = None,
                 track_stats: bool = False):
        if chunk_width is None:
            chunk_width = default_width(length_hint) if length_hint else 2
        self.codec = ChunkCodec(ChunkConfig(chunk_width, op_mode))
        self.t = chunk_width
        self.it = PalIterator()
        self.pl_chunks: List[Chunk] = []
        self._pl_tail: List[PlPair] = []     # committed values not yet sealed
        self.n_committed = 0
        self._recent: List[PlPair] = []      # ring of the latest committed values
        self._recent_cap = 4 * chunk_width + 16
        self.pre: Dict[int, PreArray] = {}
        self.phase: Optional[PhaseState] = None
        self.track_stats = track_stats
        self.phase_stats: List[tuple] = []   # (ops, start_period, iterations)
        self.dead_ops = 0
        self._decode_cache: tuple = (-1, None)

    # ------------------------------------------------------------------
    # committed PL access
    # ------------------------------------------------------------------

    def _commit(self, value: PlPair) -> None:
        self._pl_tail.append(value)
        self.n_committed += 1
        rec = self._recent
        rec.append(value)
        if len(rec) > 2 * self._recent_cap:
            del rec[:self._recent_cap]
        if len(self._pl_tail) == self.t:
            self.pl_chunks.append(self.codec.encode(self._pl_tail))
            self._pl_tail = []

    def read_pl(self, pos: int) -> PlPair:
        if pos < 0:
            return PL_EMPTY
        back = self.n_committed - pos
        rec = self._recent
        if back <= len(rec):
            return rec[-back]
        t = self.t
        ci, off = divmod(pos, t)
        if ci >= len(self.pl_chunks):
            return self._pl_tail[off]
        cache_ci, cache_vals = self._decode_cache
        if cache_ci != ci:
            cache_vals = self.codec.decode(self.pl_chunks[ci])
            self._decode_cache = (ci, cache_vals)
        return cache_vals[off]

    def read_pl_window(self, lo: int, hi: int) -> List[PlPair]:
        """Committed values at positions lo..hi inclusive (lo may be negative)."""
        read = self.read_pl
        return [read(p) for p in range(lo, hi + 1)]

    def pl_values(self) -> List[PlPair]:
        """All committed values (offline hook for the factorizer)."""
        out: List[PlPair] = []
        for ch in self.pl_chunks:
            out.extend(self.codec.decode(ch))
        out.extend(self._pl_tail)
        return out

    # ------------------------------------------------------------------
    # per-period arrays
    # ------------------------------------------------------------------

    def _pre_array(self, p: int, left: int) -> PreArray:
        arr = self.pre.get(p)
        if arr is None or arr.created_left != left:
            arr = PreArray(p, left)
            self.pre[p] = arr
            if len(self.pre) > max(64, (2 * (self.n_committed + 1)) // self.t):
                self._evict()
        arr.last_touch = self.n_committed
        return arr

    def _evict(self) -> None:
        cap = max(64, (2 * (self.n_committed + 1)) // self.t)
        victims = sorted(self.pre, key=lambda p: self.pre[p].last_touch)
        for p in victims[:len(self.pre) - cap // 2]:
            del self.pre[p]

    def _left_of(self, p: int, x: int, lam: int) -> int:
        """Boundary of the longest period-p run feeding the series headed at x."""
        it = self.it
        n = it.last_index
        u = lam % p
        x1 = 2 * x - (2 * n - u + 1)
        if x1 < 0:
            return n - lam
        if it._alive[x1]:
            lam1 = 2 * n - x1 + 1
        else:
            r = it._rad[x1]
            lam1 = 2 * r + (1 if x1 % 2 == 0 else 0)
        return n - lam - (lam1 - u) // 2

    # ------------------------------------------------------------------
    # push
    # ------------------------------------------------------------------

    def push(self, letter) -> PlPair:
        ph = self.phase
        if ph is None:
            return self._start_phase(letter)
        it = self.it
        test_pos = ph.maxpal - it.last_index - 1
        if test_pos >= 0 and it.text[test_pos] == letter:
            dead = it.add(letter)
            res = self._finish_iteration(ph, dead, None)
            ph.done += 1
            if ph.done == ph.t_prime:
                self._end_phase(ph)
            return res
        # the letter breaks the longest suffix-palindrome: abort
        self._end_phase(ph)
        return self._start_phase(letter)

    def run(self, letters) -> List[PlPair]:
        return [self.push(ch) for ch in letters]

    # ------------------------------------------------------------------
    # phase skeleton
    # ------------------------------------------------------------------

    def _start_phase(self, letter) -> PlPair:
        it = self.it
        dead = it.add(letter)
        n0 = it.last_index
        m = it._head
        t_prime = m - n0 + 1
        if t_prime > self.t:
            t_prime = self.t
        elif t_prime < 1:
            t_prime = 1
        series = _walk_series(it)
        ph = PhaseState(n0, m, t_prime, series[0][0])
        self.phase = ph
        if series[0][0] >= self.t:
            for sd in series:
                if sd[0] < self.t:
                    break
                self._predict_series(ph, sd)
        res = self._finish_iteration(ph, dead, series)
        ph.done = 1
        if ph.done == ph.t_prime:
            self._end_phase(ph)
        return res

    def _end_phase(self, ph: PhaseState) -> None:
        """Abort or terminate: settle the per-period arrays for the phase."""
        if ph.predicted:
            self._flush_series_windows(ph)
        if self.track_stats:
            self.phase_stats.append((ph.ops, ph.start_period, ph.done))
        self.phase = None

    def _has_big_series(self) -> bool:
        # series periods only shrink down the list; check the first
        it = self.it
        x = it._head
        if x == NO_NODE:
            return False
        nx = it._next[x]
        lam = 2 * it.last_index - x + 1
        return ((nx - x) if nx != NO_NODE else lam) >= self.t

    # ------------------------------------------------------------------
    # predictions for big series (phase start only)
    # ------------------------------------------------------------------

    def _predict_series(self, ph: PhaseState, sd: tuple) -> None:
        """Batched fold + W update for one big-period series.

        For the next D iterations (period alive, current tail alive,
        horizon) the series folds committed PL sources q0, q0-1, ... into
        descending slots and contributes the freshly folded slot values,
        one per iteration, to the phase's work buffer.  If the period
        dies while the tail palindrome survives, the tail keeps
        contributing directly from PL for its remaining lifetime.
        """
        p, x, lam, d, tail = sd
        it = self.it
        n0 = ph.n0
        h = ph.t_prime - 1
        m = ph.maxpal
        if h <= 0:
            ttl_now = pttl_now = 0
        else:
            # mirror the head's remainder palindrome across maxPal: its
            # radius margin counts the adds the period survives
            u = lam % p
            y = 2 * n0 - u + 1
            margin = it.rad(2 * m - y) - (u // 2)
            ttl_now = margin if margin < h else h
            if tail == m:
                pttl_now = h
            else:
                pm = it.rad(2 * m - tail) - ((2 * n0 - tail + 1) // 2)
                pttl_now = pm if pm < h else h
        D = 1 + (ttl_now if ttl_now <= pttl_now else pttl_now)
        if D == 1 and ttl_now >= pttl_now:
            return  # the element-wise pass covers a single-iteration window
        left = self._left_of(p, x, lam)
        arr = self._pre_array(p, left)
        ph.predicted[p] = D
        slot0 = n0 - lam - left
        q0 = n0 - d
        sources = self.read_pl_window(q0 - D + 1, q0)[::-1]  # descending
        arr.apply_run(self.codec, slot0, sources)
        folded = arr.read_desc(self.codec, slot0, D)
        ph.ops += 3
        we, wo = ph.w_even, ph.w_odd
        for j in range(D):
            ve, vo = folded[j]
            if vo + 1 < we[j]:
                we[j] = vo + 1
            if ve + 1 < wo[j]:
                wo[j] = ve + 1
        if ttl_now < pttl_now:
            # tail outlives its period: direct contributions from PL
            span = 1 + pttl_now
            ph.ops += 1
            vals = self.read_pl_window(q0 - span + 1, q0)[::-1]
            for j in range(span):
                ve, vo = vals[j]
                if vo + 1 < we[j]:
                    we[j] = vo + 1
                if ve + 1 < wo[j]:
                    wo[j] = ve + 1

    def _flush_series_windows(self, ph: PhaseState) -> None:
        """End of phase: fold this phase's sources for every live big series.

        Folding a source PL[q] with q >= left into slot (q - left) mod p
        is always safe (the corresponding suffix of any later text in the
        same periodic run is a palindrome), so the window is folded for
        the current tail and, if distinct, the previous tail, which
        together cover every tail the series had during the phase.
        """
        it = self.it
        n_end = it.last_index
        predicted = ph.predicted
        for p, x, lam, d, tail in _walk_series(it):
            if p < self.t:
                break
            if p not in predicted:
                continue  # processed element-wise at every iteration
            arr = self._pre_array(p, self._left_of(p, x, lam))
            ph.ops += 1
            self._fold_member_window(arr, tail, ph.n0, n_end)
            prev_tail = tail - p
            if prev_tail >= x and it._alive[prev_tail]:
                self._fold_member_window(arr, prev_tail, ph.n0, n_end)

    def _fold_member_window(self, arr: PreArray, center: int,
                            m_from: int, m_to: int) -> None:
        """Fold sources center-m-1 for iterations m_from..m_to, clipped to
        the periodic run (q >= left) and to committed positions."""
        left = arr.created_left
        q_hi = center - m_from - 1
        q_lo = center - m_to - 1
        if q_lo < left:
            q_lo = left
        if q_lo < -1:
            q_lo = -1
        if q_hi > self.n_committed - 1:
            q_hi = self.n_committed - 1
        if q_lo > q_hi:
            return
        slot_hi = (q_hi - left) % arr.period
        sources = self.read_pl_window(q_lo, q_hi)[::-1]
        arr.apply_run(self.codec, slot_hi, sources)

    # ------------------------------------------------------------------
    # one iteration: new centers, small series, commit, deaths
    # ------------------------------------------------------------------

    def _finish_iteration(self, ph: PhaseState, dead: List[DeadRecord],
                          series: Optional[list]) -> PlPair:
        it = self.it
        n = it.last_index
        o = n - ph.n0
        we, wo = ph.w_even, ph.w_odd
        horizon = ph.t_prime - 1 - o
        m = ph.maxpal
        read = self.read_pl

        # contributions of the just-born suffix palindromes, for this
        # iteration and for the surviving predicted positions
        even_center = 2 * n - 1
        for center in ((even_center, 2 * n) if n >= 1 and it._alive[even_center]
                       else (2 * n,)):
            if horizon <= 0:
                span = 1
            elif center == m:
                span = 1 + horizon
            else:
                margin = it.rad(2 * m - center) - ((2 * n - center + 1) // 2)
                span = 1 + (margin if margin < horizon else horizon)
            ph.ops += 1
            hi = center - n - 1
            for j in range(span):
                ve, vo = read(hi - j)
                if vo + 1 < we[o + j]:
                    we[o + j] = vo + 1
                if ve + 1 < wo[o + j]:
                    wo[o + j] = ve + 1

        m_even, m_odd = we[o], wo[o]

        # element-wise processing of everything outside the phase batches
        if series is None:
            series = _walk_series(it)
            ph.ops += len(series)
        predicted = ph.predicted
        for p, x, lam, d, tail in series:
            batched = predicted.get(p)
            if batched is not None and o < batched:
                # covered by the phase-start batch; only a tail that joined
                # mid-phase is outside it, so add its direct contribution
                ve, vo = read(n - d)
                if vo + 1 < m_even:
                    m_even = vo + 1
                if ve + 1 < m_odd:
                    m_odd = ve + 1
                continue
            left = self._left_of(p, x, lam)
            arr = self._pre_array(p, left)
            ve, vo = arr.fold_read_one(self.codec, n - lam - left, read(n - d))
            ph.ops += 2
            if vo + 1 < m_even:
                m_even = vo + 1
            if ve + 1 < m_odd:
                m_odd = ve + 1

        res = PlPair(m_even, m_odd)
        self._commit(res)
        if dead:
            self._process_dead(ph, dead)
        return res

    # ------------------------------------------------------------------
    # deaths
    # ------------------------------------------------------------------

    def _process_dead(self, ph: PhaseState, dead: List[DeadRecord]) -> None:
        """Settle per-period arrays for palindromes that just died.

        Only a palindrome that was the head of its series can owe folds
        (anything shorter stopped being the source long ago, and if its
        whole series died with it the period broke, so the array is
        stale anyway).  Heads are recognized by their longer would-be
        series mate having died before this iteration.
        """
        it = self.it
        n = it.last_index
        for dr in dead:
            self.dead_ops += 1
            p = dr.length - dr.next_center_len
            if p < self.t and dr.length >= 3 * p:
                continue  # its period broke; the array is cleared before reuse
            longer = dr.center - p
            if longer >= 0:
                if it._alive[longer]:
                    continue  # not the head: a longer mate is still alive
                r = it._rad[longer]
                lam = 2 * r + (1 if longer % 2 == 0 else 0)
                if lam and (longer + lam - 1) // 2 == n - 1:
                    continue  # the longer mate died this very iteration
            left = self._left_at_death(dr, p)
            arr = self.pre.get(p)
            if arr is not None and left < arr.created_left:
                continue  # the record's run epoch is already superseded
            if arr is None or arr.created_left != left:
                arr = self._pre_array(p, left)
            self._fold_member_window(arr, dr.center, ph.n0, n - 1)
            self.dead_ops += 1

    def _left_at_death(self, dr: DeadRecord, p: int) -> int:
        """Periodic-run boundary for a head palindrome frozen at death."""
        it = self.it
        m = it.last_index - 1           # the record's palindrome ended here
        u = dr.length % p
        x1 = 2 * dr.center - (2 * m - u + 1)
        if x1 < 0:
            return m - dr.length
        if it._alive[x1]:
            lam1 = 2 * m - x1 + 1       # grew by the very add that killed dr
        else:
            r = it._rad[x1]
            lam1 = 2 * r + (1 if x1 % 2 == 0 else 0)
        return m - dr.length - (lam1 - u) // 2

    # ------------------------------------------------------------------
    # finishing hooks
    # ------------------------------------------------------------------

    def finish(self) -> None:
        """Settle outstanding phase bookkeeping (end of input)."""
        if self.phase is not None:
            self._end_phase(self.phase)

    def pre_snapshot(self, p: int) -> List[Optional[PlPair]]:
        arr = self.pre.get(p)
        if arr is None:
            raise KeyError(f"no data for period {p}")
        return arr.snapshot(self.codec)
