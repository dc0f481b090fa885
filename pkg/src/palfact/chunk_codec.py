"""Bit-compressed fixed-width segments of (even, odd) length pairs.

A chunk stores up to ``t`` consecutive pairs: the first two pairs as four
explicit values, every later pair as one 4-bit code made of two 2-bit
subcodes, one per parity track.  Subcode k for track j at index i selects
how pl^j[i] relates to the opposite track's recent values:

    0: pl^(1-j)[i-1] + 1        1: pl^(1-j)[i-1] - 1        2: pl^(1-j)[i-2] + 1

Subcode 3 never describes a value; the nibble 0xF terminates the code
stream, making short chunks explicit about their end.  A sequence whose
adjacent pairs all satisfy one of the three alternatives per track is
"chain-valid"; only such sequences are encodable.  Infinite entries ride
along: an INF seed stays INF under the saturating arithmetic until a
code routes the track to a finite value.

Smoothing is the right-to-left suffix-minimum-with-slope-one transform
on both tracks; it removes "drops" (a track falling steeper than -1),
after which reversal, extension and pointwise minima stay chain-valid.

Two interchangeable engines: DIRECT decodes by per-element arithmetic on
the packed code field; TABLE routes decoding through precomputed block
tables (code block -> seed-rooted offset descriptors) and smoothing
through a dispatch table keyed by the code field and the clamped offset
between the two tracks.  Both modes produce bit-identical chunks.

Chunks are immutable values; tables are process-wide and built up front
for the block size in use, so concurrent readers are safe.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

from .core import INF, ExtLen, PlPair

TABLE = "table"
DIRECT = "direct"

MAX_WIDTH = 16          # one machine word of 4-bit codes
_BLOCK = 4              # code elements per decode-table block
_END_NIBBLE = 0xF


@dataclass(frozen=True)
class ChunkConfig:
    t: int = 2
    op_mode: str = DIRECT

    def __post_init__(self) -> None:
        if not 2 <= self.t <= MAX_WIDTH:
            raise ValueError(f"chunk width must be in [2, {MAX_WIDTH}]")
        if self.op_mode not in (TABLE, DIRECT):
            raise ValueError(f"unknown op_mode {self.op_mode!r}")


@dataclass(frozen=True)
class Chunk:
    """Immutable packed segment of PlPair values."""

    length: int
    seeds: Tuple[Optional[ExtLen], Optional[ExtLen],
                 Optional[ExtLen], Optional[ExtLen]]
    codes: int
    smoothed: bool = False


def default_width(length_hint: int) -> int:
    """Chunk width for an input of roughly ``length_hint`` letters."""
    if length_hint < 4:
        return 2
    return max(2, min(MAX_WIDTH, length_hint.bit_length() // 8))


# ----------------------------------------------------------------------
# chain arithmetic
# ----------------------------------------------------------------------

def _pick_code(value: ExtLen, prev: ExtLen, prev2: Optional[ExtLen]) -> Optional[int]:
    if value == prev + 1:
        return 0
    if value == (prev - 1 if prev != INF else INF):
        return 1
    if prev2 is not None and value == prev2 + 1:
        return 2
    return None


def chain_valid(values: Sequence[PlPair]) -> bool:
    """True iff the sequence is encodable: every element past the two explicit
    ones satisfies one of the three alternatives on both tracks."""
    for i in range(2, len(values)):
        prev, prev2, cur = values[i - 1], values[i - 2], values[i]
        if _pick_code(cur.even, prev.odd, prev2.odd) is None:
            return False
        if _pick_code(cur.odd, prev.even, prev2.even) is None:
            return False
    return True


def _seam_ok(va: Sequence[PlPair], vb: Sequence[PlPair]) -> bool:
    """The elements of vb that stop being explicit after concatenation must
    have valid codes against their new predecessors in va."""
    pairs = list(va[-2:]) + list(vb[:2])
    k = len(va[-2:])
    for i in range(max(2, k), len(pairs)):
        prev, prev2, cur = pairs[i - 1], pairs[i - 2], pairs[i]
        if _pick_code(cur.even, prev.odd, prev2.odd) is None:
            return False
        if _pick_code(cur.odd, prev.even, prev2.even) is None:
            return False
    return True


def _has_drop(values: Sequence[PlPair]) -> bool:
    """A drop: some track falls by more than one against the swapped
    predecessor (an INF-to-finite transition counts)."""
    for i in range(1, len(values)):
        prev, cur = values[i - 1], values[i]
        for v, pv in ((cur.even, prev.odd), (cur.odd, prev.even)):
            if v == INF:
                continue
            if pv == INF or v < pv - 1:
                return True
    return False


def smooth_values(values: Sequence[PlPair]) -> List[PlPair]:
    """Definitional suffix-min-with-slope-one transform on decoded values."""
    out = list(values)
    for i in range(len(out) - 2, -1, -1):
        nxt = out[i + 1]
        cur = out[i]
        e = cur.even if cur.even <= nxt.odd + 1 else nxt.odd + 1
        o = cur.odd if cur.odd <= nxt.even + 1 else nxt.even + 1
        out[i] = PlPair(e, o)
    return out


# ----------------------------------------------------------------------
# TABLE machinery
# ----------------------------------------------------------------------
#
# Decoding is structural: every decoded value equals one of the four
# seeds plus an integer offset, and which seed ("root") plus which offset
# is a pure function of the code nibbles.  The block table maps a run of
# _BLOCK nibbles to descriptors for its elements and for the exit state
# (the last two pairs), so decoding walks the code field one lookup per
# block.  Smoothing additionally needs the numeric gap between the two
# tracks; per the dispatch idea, gaps beyond +-2t act like +-infinity,
# so the table key stays small.

_Descriptor = Tuple[int, int]                 # (root index, delta)
_BlockEntry = Tuple[Tuple[Tuple[_Descriptor, _Descriptor], ...],
                    Tuple[_Descriptor, _Descriptor, _Descriptor, _Descriptor]]

_block_table: Dict[int, _BlockEntry] = {}
_smooth_table: Dict[tuple, Tuple[tuple, tuple]] = {}


def _apply_sym(code: int, prev: _Descriptor, prev2: _Descriptor) -> _Descriptor:
    root, delta = prev if code != 2 else prev2
    return (root, delta + (1 if code != 1 else -1))


def _build_block(codes: int) -> _BlockEntry:
    # roots: 0 = prev even, 1 = prev odd, 2 = prev-prev even, 3 = prev-prev odd
    pe: _Descriptor = (0, 0)
    po: _Descriptor = (1, 0)
    ppe: _Descriptor = (2, 0)
    ppo: _Descriptor = (3, 0)
    elems = []
    for k in range(_BLOCK):
        nib = (codes >> (4 * k)) & 0xF
        e = _apply_sym(nib & 0x3, po, ppo)
        o = _apply_sym((nib >> 2) & 0x3, pe, ppe)
        elems.append((e, o))
        ppe, ppo, pe, po = pe, po, e, o
    return tuple(elems), (pe, po, ppe, ppo)


def _block_entry(codes: int) -> _BlockEntry:
    entry = _block_table.get(codes)
    if entry is None:
        entry = _build_block(codes)
        _block_table[codes] = entry
    return entry


def _materialize(desc: _Descriptor, roots: Tuple[ExtLen, ExtLen, ExtLen, ExtLen]) -> ExtLen:
    root = roots[desc[0]]
    return INF if root == INF else root + desc[1]


# ----------------------------------------------------------------------
# codec
# ----------------------------------------------------------------------

class ChunkCodec:
    """Encode, decode and combine chunks under one ChunkConfig."""

    def __init__(self, cfg: ChunkConfig):
        self.cfg = cfg
        self.ops = 0  # instrumented operation counter
        if cfg.op_mode == TABLE and len(_block_table) < (1 << (4 * _BLOCK)):
            for codes in range(1 << (4 * _BLOCK)):
                _block_entry(codes)

    # -- encode / decode ------------------------------------------------

    def encode(self, values: Sequence[PlPair], smoothed: bool = False) -> Chunk:
        self.ops += 1
        n = len(values)
        if not 1 <= n <= self.cfg.t:
            raise ValueError(f"chunk length {n} outside [1, {self.cfg.t}]")
        v0 = values[0]
        if n == 1:
            return Chunk(1, (v0.even, v0.odd, None, None), _END_NIBBLE, smoothed)
        v1 = values[1]
        codes = 0
        for i in range(2, n):
            prev, prev2, cur = values[i - 1], values[i - 2], values[i]
            ce = _pick_code(cur.even, prev.odd, prev2.odd)
            co = _pick_code(cur.odd, prev.even, prev2.even)
            if ce is None or co is None:
                raise ValueError("not chunk-encodable")
            codes |= ((co << 2) | ce) << (4 * (i - 2))
        codes |= _END_NIBBLE << (4 * (n - 2))
        return Chunk(n, (v0.even, v0.odd, v1.even, v1.odd), codes, smoothed)

    def decode(self, c: Chunk) -> List[PlPair]:
        self.ops += 1
        if self.cfg.op_mode == TABLE and c.length > 2:
            return self._decode_table(c)
        return self._decode_direct(c)

    def _decode_direct(self, c: Chunk) -> List[PlPair]:
        out = [PlPair(c.seeds[0], c.seeds[1])]
        if c.length == 1:
            return out
        out.append(PlPair(c.seeds[2], c.seeds[3]))
        codes = c.codes
        for i in range(2, c.length):
            nib = (codes >> (4 * (i - 2))) & 0xF
            prev, prev2 = out[i - 1], out[i - 2]
            e = self._apply(nib & 0x3, prev.odd, prev2.odd)
            o = self._apply((nib >> 2) & 0x3, prev.even, prev2.even)
            out.append(PlPair(e, o))
        return out

    @staticmethod
    def _apply(code: int, prev: ExtLen, prev2: ExtLen) -> ExtLen:
        if code == 0:
            return prev + 1
        if code == 1:
            return prev - 1 if prev != INF else INF
        if code == 2:
            return prev2 + 1
        raise ValueError("terminator nibble inside code stream")

    def _decode_table(self, c: Chunk) -> List[PlPair]:
        out = [PlPair(c.seeds[0], c.seeds[1]), PlPair(c.seeds[2], c.seeds[3])]
        roots: Tuple[ExtLen, ExtLen, ExtLen, ExtLen] = (
            c.seeds[2], c.seeds[3], c.seeds[0], c.seeds[1])
        codes = c.codes
        remaining = c.length - 2
        while remaining > 0:
            take = min(_BLOCK, remaining)
            block = codes & ((1 << (4 * _BLOCK)) - 1)
            if take < _BLOCK:
                block &= (1 << (4 * take)) - 1
            elems, exit_state = _block_entry(block)
            for k in range(take):
                e, o = elems[k]
                out.append(PlPair(_materialize(e, roots), _materialize(o, roots)))
            if take == _BLOCK and remaining > _BLOCK:
                pe, po, ppe, ppo = exit_state
                roots = (_materialize(pe, roots), _materialize(po, roots),
                         _materialize(ppe, roots), _materialize(ppo, roots))
            codes >>= 4 * _BLOCK
            remaining -= take
        return out

    # -- constant-time operations ----------------------------------------

    def increment(self, c: Chunk) -> Chunk:
        """Add one to every value on both tracks."""
        self.ops += 1
        bump = tuple(None if x is None else (INF if x == INF else x + 1)
                     for x in c.seeds)
        return replace(c, seeds=bump)

    def extract(self, c: Chunk, l: int) -> PlPair:
        """Value at index l."""
        self.ops += 1
        if not 0 <= l < c.length:
            raise ValueError("index outside chunk")
        if l == 0:
            return PlPair(c.seeds[0], c.seeds[1])
        if l == 1:
            return PlPair(c.seeds[2], c.seeds[3])
        return self.decode(c)[l]

    def extract_range(self, a: Chunk, b: Optional[Chunk], l: int, d: int) -> Chunk:
        """Chunk AB[l..min(l+d-1, end)] of the concatenation AB."""
        self.ops += 1
        if d < 1:
            raise ValueError("empty extraction")
        vals = self.decode(a)
        if b is not None:
            tail = self.decode(b)
            if not _seam_ok(vals, tail):
                raise ValueError("incompatible seam")
            vals += tail
        if not 0 <= l < len(vals):
            raise ValueError("index outside chunks")
        picked = vals[l:min(l + d, len(vals))]
        flag = (a.smoothed and (b is None or b.smoothed)
                and not _has_drop(picked))
        return self.encode(picked, smoothed=flag)

    def reverse(self, c: Chunk) -> Chunk:
        """Reversed chunk; requires a drop-free (e.g. smoothed) input."""
        self.ops += 1
        vals = self.decode(c)[::-1]
        if not chain_valid(vals):
            raise ValueError("cannot reverse a chunk with drops")
        return self.encode(vals, smoothed=c.smoothed)

    def concat(self, a: Chunk, b: Chunk) -> Tuple[Chunk, Optional[Chunk]]:
        """AB as one chunk, or split (C, D) with |C| = t when AB overflows."""
        self.ops += 1
        va, vb = self.decode(a), self.decode(b)
        if not _seam_ok(va, vb):
            raise ValueError("incompatible seam")
        vals = va + vb
        flag = a.smoothed and b.smoothed and not _has_drop(vals)
        t = self.cfg.t
        if len(vals) <= t:
            return self.encode(vals, smoothed=flag), None
        return (self.encode(vals[:t], smoothed=flag),
                self.encode(vals[t:], smoothed=flag))

    def extend(self, c: Chunk, l: int, r: int) -> Chunk:
        """Pad a smoothed chunk: l pairs sloping down into the left end,
        r pairs sloping up from the right end."""
        self.ops += 1
        if c.length + l + r > self.cfg.t:
            raise ValueError("extension exceeds chunk width")
        if not c.smoothed:
            raise ValueError("extend requires a smoothed chunk")
        vals = self.decode(c)
        for _ in range(l):
            first = vals[0]
            vals.insert(0, PlPair(first.odd + 1, first.even + 1))
        for _ in range(r):
            last = vals[-1]
            vals.append(PlPair(last.odd + 1, last.even + 1))
        return self.encode(vals, smoothed=True)

    def min_pointwise(self, a: Chunk, b: Chunk) -> Chunk:
        """Pointwise pair minimum of equal-length smoothed chunks, re-smoothed."""
        self.ops += 1
        if a.length != b.length:
            raise ValueError("length mismatch")
        if not (a.smoothed and b.smoothed):
            raise ValueError("min_pointwise requires smoothed chunks")
        va, vb = self.decode(a), self.decode(b)
        merged = [PlPair(x.even if x.even <= y.even else y.even,
                         x.odd if x.odd <= y.odd else y.odd)
                  for x, y in zip(va, vb)]
        return self.encode(smooth_values(merged), smoothed=True)

    def smooth(self, c: Chunk) -> Chunk:
        """Suffix-minimum-with-slope-one transform of both tracks."""
        self.ops += 1
        if c.smoothed:
            return c
        if self.cfg.op_mode == TABLE and c.length > 2:
            return self._smooth_table(c)
        return self.encode(smooth_values(self._decode_direct(c)), smoothed=True)

    # The smoothing outcome, expressed as seed-rooted offsets, is fixed by
    # the code field plus the pairwise gaps between the four explicit
    # values: every comparison inside the suffix-min pits two seed-rooted
    # quantities whose offsets stay within 2t, so gaps clamped beyond
    # 4t+2 act like +-infinity.  One dispatch-table entry serves every
    # chunk in the same class.

    def _smooth_table(self, c: Chunk) -> Chunk:
        lim = 4 * self.cfg.t + 2

        def clamp(v):
            if v is None:
                return None
            return v if abs(v) <= lim else (lim + 1 if v > 0 else -lim - 1)

        s = c.seeds
        gaps = tuple(clamp(None if s[i] == INF or s[j] == INF else s[i] - s[j])
                     for i in range(4) for j in range(i + 1, 4))
        seedmask = sum(1 << i for i, x in enumerate(s) if x == INF)
        key = (c.codes, c.length, seedmask, gaps)
        hit = _smooth_table.get(key)
        if hit is None:
            hit = self._smooth_descriptors(c)
            _smooth_table[key] = hit
        offs_e, offs_o = hit
        smoothed = [PlPair(self._unoff(oe, c.seeds), self._unoff(oo, c.seeds))
                    for oe, oo in zip(offs_e, offs_o)]
        return self.encode(smoothed, smoothed=True)

    def _smooth_descriptors(self, c: Chunk) -> Tuple[tuple, tuple]:
        """Smoothing outcome as seed-rooted descriptors.

        Runs the suffix-min in tandem on values and (root, delta)
        descriptors, recording for every position the descriptor of the
        winning source; within one dispatch class the winners, hence the
        descriptors, are identical for every chunk.
        """
        descs: List[Tuple[_Descriptor, _Descriptor]] = [((0, 0), (1, 0)),
                                                        ((2, 0), (3, 0))]
        pe, po, ppe, ppo = (2, 0), (3, 0), (0, 0), (1, 0)
        for i in range(2, c.length):
            nib = (c.codes >> (4 * (i - 2))) & 0xF
            e = _apply_sym(nib & 0x3, po, ppo)
            o = _apply_sym((nib >> 2) & 0x3, pe, ppe)
            descs.append((e, o))
            ppe, ppo, pe, po = pe, po, e, o
        vals = self.decode(c)
        sm_vals = [[v.even, v.odd] for v in vals]
        sm_descs = [list(d) for d in descs]
        for i in range(c.length - 2, -1, -1):
            for j in (0, 1):
                cand = sm_vals[i + 1][1 - j]
                cand = INF if cand == INF else cand + 1
                if cand < sm_vals[i][j]:
                    sm_vals[i][j] = cand
                    root, delta = sm_descs[i + 1][1 - j]
                    sm_descs[i][j] = (root, delta + 1)
        offs_e = tuple(None if sm_vals[i][0] == INF else sm_descs[i][0]
                       for i in range(c.length))
        offs_o = tuple(None if sm_vals[i][1] == INF else sm_descs[i][1]
                       for i in range(c.length))
        return offs_e, offs_o

    @staticmethod
    def _unoff(off: Optional[_Descriptor], seeds: tuple) -> ExtLen:
        if off is None:
            return INF
        return seeds[off[0]] + off[1]
