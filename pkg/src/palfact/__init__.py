"""Online even/odd palindromic length and palindromic k-factorization."""

from .core import INF, PlPair
from .pal_iterator import DeadRecord, PalIterator

__all__ = ["INF", "PlPair", "PalIterator", "DeadRecord"]
