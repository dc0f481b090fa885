"""Per-period precomputed-minima arrays stored as three chunked parts.

For a live period p the engine keeps, indexed by residue slot, the
minimum of committed PL values over qualifying positions.  Slots are
written in descending order, wrapping modulo p; the write history splits
the array into part L (slots [0..end_L], filled first), part C (slots
(end_L..end_C], entered after the first wrap) and part R (slots above
end_C, skipped while the series was briefly absent and filled one lap
later).  Each part holds smoothed chunks over contiguous slot runs; an
update run is split at part boundaries, fills uncovered slots and
min-updates covered ones.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from operator import attrgetter
from typing import List, Optional, Tuple

from .core import PAIR_INF, PlPair
from .chunk_codec import Chunk, ChunkCodec, smooth_values

_START = attrgetter("start")

PART_L, PART_C, PART_R = "L", "C", "R"


@dataclass
class _Piece:
    start: int
    chunk: Chunk


class PreArray:

    __slots__ = ("period", "created_left", "end_L", "end_C",
                 "L", "C", "R", "last_touch")

    def __init__(self, period: int, created_left: int):
        self.period = period
        self.created_left = created_left
        self.end_L: Optional[int] = None
        self.end_C: Optional[int] = None
        self.L: List[_Piece] = []
        self.C: List[_Piece] = []
        self.R: List[_Piece] = []
        self.last_touch = 0

    # -- inspection hooks -------------------------------------------------

    def part_slots(self, name: str) -> List[int]:
        part = getattr(self, name)
        out: List[int] = []
        for piece in part:
            out.extend(range(piece.start, piece.start + piece.chunk.length))
        return sorted(out)

    @property
    def len_L(self) -> int:
        return sum(p.chunk.length for p in self.L)

    @property
    def len_C(self) -> int:
        return sum(p.chunk.length for p in self.C)

    @property
    def len_R(self) -> int:
        return sum(p.chunk.length for p in self.R)

    def piece_count(self) -> int:
        return len(self.L) + len(self.C) + len(self.R)

    # -- part routing ------------------------------------------------------

    def _part_for(self, slot: int) -> str:
        if self.end_L is not None and slot <= self.end_L:
            return PART_L
        if self.end_C is None or slot <= self.end_C:
            return PART_C
        return PART_R

    def _boundaries(self, lo: int, hi: int) -> List[Tuple[str, int, int]]:
        """Split [lo..hi] at the part boundaries, low part first."""
        cuts = []
        prev = lo
        for edge in (self.end_L, self.end_C):
            if edge is not None and prev <= edge < hi:
                cuts.append((prev, edge))
                prev = edge + 1
        cuts.append((prev, hi))
        return [(self._part_for(a), a, b) for a, b in cuts if a <= b]

    # -- updates -----------------------------------------------------------

    def apply_run(self, codec: ChunkCodec, hi_slot: int,
                  values_desc: List[PlPair]) -> None:
        """Fold ``values_desc`` into slots hi_slot, hi_slot-1, ... (mod p).

        values_desc[k] targets slot hi_slot - k; runs longer than the
        distance to slot 0 wrap to the top of the array.  Segments are
        applied in that temporal order so the L/C/R boundaries are
        discovered exactly as the slots are first written.
        """
        p = self.period
        k = 0
        total = len(values_desc)
        while k < total:
            slot = (hi_slot - k) % p
            seg = min(total - k, slot + 1)
            vals_asc = values_desc[k:k + seg][::-1]
            self._apply_segment(codec, slot - seg + 1, vals_asc)
            k += seg

    def _apply_segment(self, codec: ChunkCodec, lo: int,
                       vals_asc: List[PlPair]) -> None:
        hi = lo + len(vals_asc) - 1
        if self.end_L is None:
            self.end_L = hi
        for name, a, b in self._boundaries(lo, hi):
            if name == PART_C and self.end_C is None:
                self.end_C = b
                name = PART_C
            self._merge(codec, getattr(self, name), a,
                        vals_asc[a - lo:b - lo + 1])

    def _merge(self, codec: ChunkCodec, part: List[_Piece], lo: int,
               vals: List[PlPair]) -> None:
        """Fill uncovered slots of [lo..lo+len-1] and min into covered ones.

        Stored pieces are split at the update's boundaries first, so every
        minimum is taken between two whole equal-length smoothed chunks and
        stays encodable.
        """
        hi = lo + len(vals) - 1
        vals = smooth_values(vals)
        idx = bisect_right(part, lo, key=_START)
        if idx and part[idx - 1].start + part[idx - 1].chunk.length > lo:
            idx -= 1
        cursor = lo
        t = codec.cfg.t
        while cursor <= hi:
            if idx < len(part) and part[idx].start <= cursor:
                piece = part[idx]
                plen = piece.chunk.length
                if piece.start < cursor:
                    head_len = cursor - piece.start
                    part[idx] = _Piece(piece.start,
                                       codec.extract_range(piece.chunk, None, 0, head_len))
                    part.insert(idx + 1, _Piece(
                        cursor, codec.extract_range(piece.chunk, None,
                                                    head_len, plen - head_len)))
                    idx += 1
                    continue
                pend = piece.start + plen - 1
                if pend > hi:
                    keep = hi - piece.start + 1
                    part[idx] = _Piece(piece.start,
                                       codec.extract_range(piece.chunk, None, 0, keep))
                    part.insert(idx + 1, _Piece(
                        hi + 1, codec.extract_range(piece.chunk, None,
                                                    keep, plen - keep)))
                    continue
                seg = vals[cursor - lo:cursor - lo + plen]
                pvals = codec.decode(piece.chunk)
                merged = [PlPair(a.even if a.even <= b.even else b.even,
                                 a.odd if a.odd <= b.odd else b.odd)
                          for a, b in zip(pvals, seg)]
                part[idx] = _Piece(piece.start,
                                   codec.encode(smooth_values(merged), smoothed=True))
                cursor = pend + 1
                idx += 1
            else:
                end = hi if idx >= len(part) else min(hi, part[idx].start - 1)
                seg = vals[cursor - lo:end - lo + 1]
                for st in range(0, len(seg), t):
                    sub = seg[st:st + t]
                    part.insert(idx, _Piece(cursor + st,
                                            codec.encode(sub, smoothed=True)))
                    idx += 1
                cursor = end + 1

    def fold_read_one(self, codec: ChunkCodec, slot: int, value: PlPair) -> PlPair:
        """Min one value into a slot and return the slot's new content.

        Fast path for the element-wise updates; equivalent to apply_run
        with a single value followed by read_slot.
        """
        name = self._part_for(slot)
        if self.end_L is None:
            self.end_L = slot
            name = PART_L
        elif name == PART_C and self.end_C is None:
            self.end_C = slot
        part = getattr(self, name)
        idx = bisect_right(part, slot, key=_START) - 1
        if idx >= 0:
            piece = part[idx]
            off = slot - piece.start
            if off < piece.chunk.length:
                vals = codec.decode(piece.chunk)
                cur = vals[off]
                e = cur.even if cur.even <= value.even else value.even
                o = cur.odd if cur.odd <= value.odd else value.odd
                if e == cur.even and o == cur.odd:
                    return cur
                vals[off] = PlPair(e, o)
                vals = smooth_values(vals)
                part[idx] = _Piece(piece.start, codec.encode(vals, smoothed=True))
                return vals[off]
        part.insert(idx + 1, _Piece(slot, codec.encode([value], smoothed=True)))
        return value

    # -- reads -------------------------------------------------------------

    def read_slot(self, codec: ChunkCodec, slot: int) -> PlPair:
        part = getattr(self, self._part_for(slot))
        idx = bisect_right(part, slot, key=_START) - 1
        if idx >= 0:
            piece = part[idx]
            if piece.start <= slot < piece.start + piece.chunk.length:
                return codec.extract(piece.chunk, slot - piece.start)
        return PAIR_INF

    def read_desc(self, codec: ChunkCodec, hi_slot: int, count: int) -> List[PlPair]:
        """Values at slots hi_slot, hi_slot-1, ... (mod p); INF where unset."""
        p = self.period
        out: List[PlPair] = []
        k = 0
        while k < count:
            slot = (hi_slot - k) % p
            seg = min(count - k, slot + 1)
            asc = [self.read_slot(codec, s) for s in range(slot - seg + 1, slot + 1)]
            out.extend(reversed(asc))
            k += seg
        return out

    def snapshot(self, codec: ChunkCodec) -> List[Optional[PlPair]]:
        out: List[Optional[PlPair]] = [None] * self.period
        for part in (self.L, self.C, self.R):
            for piece in part:
                for i, v in enumerate(codec.decode(piece.chunk)):
                    out[piece.start + i] = v
        return out
