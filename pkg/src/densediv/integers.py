"""Exact integer infrastructure: sieves, factorization, divisor generation.

Everything here is deterministic and pure once built; the sieve arrays are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import DomainError, ResourceLimitError

# Budgets are deliberately conservative: inputs are desk-scale (<= ~1e12),
# divisor lists are re-enumerated heavily by the recursive family tests.
DEFAULT_SIEVE_BUDGET = 1 << 27
DEFAULT_DIVISOR_CAP = 1 << 20


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its ordered prime factorization.

    ``factors`` is a tuple of (prime, exponent) pairs with primes strictly
    increasing and exponents >= 1; the product reconstructs ``n``.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"positive integer required, got {self.n}")
        prod = 1
        prev = 1
        for p, e in self.factors:
            if e < 1 or p <= prev:
                raise DomainError(f"invalid factorization for {self.n}: {self.factors}")
            prev = p
            prod *= p**e
        if prod != self.n:
            raise DomainError(f"factorization of {self.n} does not reconstruct: {self.factors}")

    @property
    def p_minus(self) -> float | int:
        """Smallest prime factor; +inf for n = 1 by convention."""
        return self.factors[0][0] if self.factors else math.inf

    @property
    def p_plus(self) -> int:
        """Largest prime factor; 1 for n = 1 by convention."""
        return self.factors[-1][0] if self.factors else 1

    @property
    def big_omega(self) -> int:
        """Number of prime factors counted with multiplicity."""
        return sum(e for _, e in self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def prime_list(self) -> list[int]:
        """Primes of n repeated with multiplicity, in nondecreasing order."""
        out = []
        for p, e in self.factors:
            out.extend([p] * e)
        return out

    def divisor_count(self) -> int:
        return reduce(lambda acc, fe: acc * (fe[1] + 1), self.factors, 1)


def sieve_spf(limit: int, budget: int = DEFAULT_SIEVE_BUDGET) -> np.ndarray:
    """Smallest-prime-factor table for 2..limit.

    Returns an int64 array ``spf`` of length limit+1 with spf[n] the smallest
    prime factor of n (spf[0] = 0, spf[1] = 1, spf[p] = p for primes).
    """
    if limit < 2:
        raise DomainError("sieve limit must be >= 2")
    if limit + 1 > budget:
        raise ResourceLimitError(f"sieve limit {limit} exceeds budget {budget}")
    spf = np.arange(limit + 1, dtype=np.int64)
    spf[0] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            sl = spf[p * p :: p]
            np.minimum(sl, p, out=sl)
    spf.setflags(write=False)  # safe for concurrent readers
    return spf


def primes_upto(n: int) -> list[int]:
    """All primes <= n, by plain Eratosthenes on a byte sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i in range(2, n + 1) if sieve[i]]


def factorize(n: int, spf: np.ndarray | None = None) -> FactoredInteger:
    """Factor n >= 1 into a FactoredInteger.

    Uses the spf table when it covers n, trial division otherwise.
    """
    if n < 1:
        raise DomainError(f"positive integer required, got {n}")
    if n == 1:
        return FactoredInteger(1, ())
    factors = []
    if spf is not None and n < len(spf):
        m = n
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    else:
        m = n
        d = 2
        while d * d <= m:
            if m % d == 0:
                e = 0
                while m % d == 0:
                    m //= d
                    e += 1
                factors.append((d, e))
            d += 1 if d == 2 else 2
        if m > 1:
            factors.append((m, 1))
    return FactoredInteger(n, tuple(factors))


def divisors(f: FactoredInteger, cap: int = DEFAULT_DIVISOR_CAP) -> list[int]:
    """All divisors of f.n in increasing order."""
    if f.divisor_count() > cap:
        raise ResourceLimitError(f"{f.n} has {f.divisor_count()} divisors, cap is {cap}")
    divs = [1]
    for p, e in f.factors:
        pk = 1
        ext = []
        for _ in range(e):
            pk *= p
            ext.extend(d * pk for d in divs)
        divs.extend(ext)
    divs.sort()
    return divs


def divisor_lists(limit: int, budget: int = DEFAULT_SIEVE_BUDGET) -> list[list[int]]:
    """Sorted divisor lists for every n <= limit, built by one multiples pass.

    Total memory is ~limit*ln(limit) ints; intended for the bulk family scans.
    """
    if (limit + 1) * 16 > budget * 8:
        raise ResourceLimitError(f"divisor_lists limit {limit} exceeds budget")
    dl: list[list[int]] = [[] for _ in range(limit + 1)]
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            dl[m].append(d)
    return dl
