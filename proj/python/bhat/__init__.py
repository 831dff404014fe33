"""Exact bigraded length computations for pairs of m-primary ideals in k[[x,y]]."""

from ._bhat import DEFAULT_PRIME, BhatError, Pair, colength

__all__ = ["DEFAULT_PRIME", "BhatError", "Pair", "colength"]
