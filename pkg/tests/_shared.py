"""Heavy fixtures shared between the unit suites and the acceptance suite."""

from fractions import Fraction
from functools import lru_cache

from densediv.families import membership_tables


@lru_cache(maxsize=8)
def tables_at(N: int, y: Fraction, imax: int = 4):
    return membership_tables(N, y, imax)
