"""Input families for benchmarks and scaling tests."""

from __future__ import annotations

import random


def random_letters(n: int, alphabet: str = "ab", seed: int = 0) -> str:
    rng = random.Random(seed)
    return "".join(rng.choice(alphabet) for _ in range(n))


def periodic(n: int, unit: str = "ab") -> str:
    reps = n // len(unit) + 1
    return (unit * reps)[:n]


def high_series(n: int) -> str:
    """Prefix of the Fibonacci word: many live series at most positions."""
    a, b = "a", "ab"
    while len(b) < n:
        a, b = b, b + a
    return b[:n]


FAMILIES = {
    "random": lambda n, seed: random_letters(n, "ab", seed),
    "periodic": lambda n, seed: periodic(n, "ab"),
    "high-series": lambda n, seed: high_series(n),
}
