"""Command-line front end.

    palfact length [input]           per-position even/odd palindromic lengths
    palfact check -k K [input]       is there a palindromic K-factorization?
    palfact factorize -k K [input]   print one K-factorization
    palfact diff [input]             cross-check all engines position by position
    palfact bench                    CSV timings over doubling sizes

Input is a file path or stdin, treated as bytes (equality only); --utf8
switches to code points.  Exit codes: 0 ok / "yes", 1 "no" or no
factorization or an engine mismatch, 2 usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional, Sequence

from .core import INF, PlPair
from .factorizer import expand_to_k, min_parity_factorization
from .generators import FAMILIES
from .linear_engine import LinearEngine
from .nlogn_engine import NlognEngine
from .oracle import pl_pairs_naive

NAIVE_DIFF_CAP = 2000  # the brute-force engine joins diff runs up to this length


def _read_input(path: Optional[str], utf8: bool) -> Sequence:
    if path is None or path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    if data.endswith(b"\n"):
        data = data[:-1]
    if utf8:
        return data.decode("utf-8")
    return data


def _make_engine(name: str, n: int, chunk_width: Optional[int]):
    if name == "linear":
        return LinearEngine(chunk_width=chunk_width, length_hint=n)
    if name == "nlogn":
        return NlognEngine()
    raise ValueError(name)


def _fmt(v) -> str:
    return "inf" if v == INF else str(int(v))


def _run_length(args) -> int:
    s = _read_input(args.input, args.utf8)
    n = len(s)
    ndjson = args.format == "ndjson"
    if args.engine == "naive":
        pairs = pl_pairs_naive(s)
        stream = enumerate(pairs)
    else:
        eng = _make_engine(args.engine, n, args.chunk_width)
        stream = ((i, eng.push(ch)) for i, ch in enumerate(s))
    if args.format == "json":
        out = [[i, None if p.even == INF else int(p.even),
                None if p.odd == INF else int(p.odd)] for i, p in stream]
        json.dump(out, sys.stdout)
        sys.stdout.write("\n")
        return 0
    for i, p in stream:
        if ndjson:
            rec = {"i": i,
                   "even": None if p.even == INF else int(p.even),
                   "odd": None if p.odd == INF else int(p.odd)}
            sys.stdout.write(json.dumps(rec) + "\n")
        else:
            sys.stdout.write(f"{i} {_fmt(p.even)} {_fmt(p.odd)}\n")
        if args.online:
            sys.stdout.flush()
    return 0


def _final_pair(s, engine: str, chunk_width: Optional[int]) -> PlPair:
    if engine == "naive":
        return pl_pairs_naive(s)[-1]
    eng = _make_engine(engine, len(s), chunk_width)
    last = None
    for ch in s:
        last = eng.push(ch)
    return last


def _run_check(args) -> int:
    s = _read_input(args.input, args.utf8)
    k = args.k
    ok = False
    if len(s) and 1 <= k <= len(s):
        pair = _final_pair(s, args.engine, args.chunk_width)
        v = pair.even if k % 2 == 0 else pair.odd
        ok = v != INF and v <= k
    print("yes" if ok else "no")
    return 0 if ok else 1


def _run_factorize(args) -> int:
    s = _read_input(args.input, args.utf8)
    k = args.k
    f = None
    if len(s) and 1 <= k <= len(s):
        eng = LinearEngine(chunk_width=args.chunk_width, length_hint=len(s))
        for ch in s:
            eng.push(ch)
        eng.finish()
        pl = eng.pl_values()
        target = (pl[-1].even, pl[-1].odd)[k % 2]
        if target != INF and target <= k:
            base = min_parity_factorization(pl, eng.it, k % 2)
            f = expand_to_k(base, s, k)
    if f is None:
        print("no factorization", file=sys.stderr)
        return 1
    parts = f.factors(s)
    text_parts = [p.decode("latin-1") if isinstance(p, (bytes, bytearray)) else p
                  for p in parts]
    if args.format == "json":
        json.dump(text_parts, sys.stdout)
        sys.stdout.write("\n")
    else:
        print("|".join(text_parts))
    return 0


def _run_diff(args) -> int:
    s = _read_input(args.input, args.utf8)
    n = len(s)
    engines = {"linear": LinearEngine(chunk_width=args.chunk_width, length_hint=n),
               "nlogn": NlognEngine()}
    naive = pl_pairs_naive(s) if n <= NAIVE_DIFF_CAP else None
    for i, ch in enumerate(s):
        got = {name: eng.push(ch) for name, eng in engines.items()}
        if naive is not None:
            got["naive"] = naive[i]
        vals = set(got.values())
        if len(vals) > 1:
            rep = s[:i + 1]
            if isinstance(rep, (bytes, bytearray)):
                rep = rep.decode("latin-1")
            print(f"mismatch at position {i}: " +
                  ", ".join(f"{k}={_fmt(v.even)}/{_fmt(v.odd)}"
                            for k, v in sorted(got.items())), file=sys.stderr)
            print(f"reproducer: {rep}", file=sys.stderr)
            return 1
    print(f"ok: {n} positions agree")
    return 0


def _run_bench(args) -> int:
    sizes = [args.base << i for i in range(args.doublings + 1)]
    print("family,n,engine,nanoseconds")
    for family, gen in FAMILIES.items():
        for n in sizes:
            s = gen(n, args.seed)
            for name in ("linear", "nlogn"):
                eng = _make_engine(name, n, args.chunk_width)
                push = eng.push
                t0 = time.perf_counter_ns()
                for ch in s:
                    push(ch)
                elapsed = time.perf_counter_ns() - t0
                print(f"{family},{n},{name},{elapsed}")
                sys.stdout.flush()
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="palfact",
                                 description="even/odd palindromic lengths and k-factorizations")
    sub = ap.add_subparsers(dest="mode", required=True)

    def common(p, engines=("linear", "nlogn", "naive")):
        p.add_argument("input", nargs="?", default=None,
                       help="input file (default: stdin)")
        p.add_argument("--engine", choices=engines, default="linear")
        p.add_argument("--utf8", action="store_true",
                       help="treat input as UTF-8 code points instead of bytes")
        p.add_argument("--chunk-width", type=int, default=None)

    p = sub.add_parser("length", help="per-position even/odd palindromic lengths")
    common(p)
    p.add_argument("--format", choices=("text", "json", "ndjson"), default="text")
    p.add_argument("--online", action="store_true",
                   help="flush each record before reading further input")
    p.set_defaults(fn=_run_length)

    p = sub.add_parser("check", help="decide palindromic k-factorizability")
    common(p)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(fn=_run_check)

    p = sub.add_parser("factorize", help="print one palindromic k-factorization")
    common(p, engines=("linear",))
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_run_factorize)

    p = sub.add_parser("diff", help="cross-check engines position by position")
    common(p)
    p.set_defaults(fn=_run_diff)

    p = sub.add_parser("bench", help="CSV timings over doubling sizes")
    p.add_argument("--base", type=int, default=1 << 12)
    p.add_argument("--doublings", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--chunk-width", type=int, default=None)
    p.set_defaults(fn=_run_bench)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (OSError, UnicodeDecodeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
