import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from densediv.errors import DomainError, ResourceLimitError
from densediv.integers import (
    FactoredInteger,
    divisors,
    divisor_lists,
    factorize,
    primes_upto,
    sieve_spf,
)


def trial_division_spf(n: int) -> int:
    for d in range(2, n + 1):
        if n % d == 0:
            return d
    raise AssertionError


class TestSieve:
    def test_small_entries(self):
        spf = sieve_spf(20)
        assert spf[2] == 2
        assert spf[15] == 3
        assert spf[17] == 17

    def test_8424(self):
        spf = sieve_spf(10_000)
        assert spf[8424] == 2

    def test_agrees_with_trial_division(self, spf_1e5):
        # exhaustive to 1e5 against an independent trial-division oracle
        for n in range(2, 100_001):
            p = 2
            while n % p:
                p += 1
            assert spf_1e5[n] == p

    def test_budget(self):
        with pytest.raises(ResourceLimitError):
            sieve_spf(10**12)

    def test_bad_limit(self):
        with pytest.raises(DomainError):
            sieve_spf(1)


class TestFactorize:
    def test_one(self):
        f = factorize(1)
        assert f.factors == ()
        assert f.p_plus == 1
        assert f.p_minus == math.inf

    def test_8424(self):
        assert factorize(8424).factors == ((2, 3), (3, 4), (13, 1))

    def test_65520(self):
        assert factorize(65520).factors == ((2, 4), (3, 2), (5, 1), (7, 1), (13, 1))

    def test_with_sieve_matches_without(self, spf_1e4):
        for n in range(1, 5000):
            assert factorize(n, spf_1e4) == factorize(n)

    @given(st.integers(min_value=1, max_value=10**6))
    @settings(max_examples=300, deadline=None)
    def test_reconstruction(self, n):
        f = factorize(n)
        prod = 1
        for p, e in f.factors:
            prod *= p**e
        assert prod == n

    def test_invalid_tuple_rejected(self):
        with pytest.raises(DomainError):
            FactoredInteger(12, ((3, 1), (2, 2)))
        with pytest.raises(DomainError):
            FactoredInteger(12, ((2, 2),))


class TestDivisors:
    def test_examples(self):
        assert divisors(factorize(12)) == [1, 2, 3, 4, 6, 12]
        assert divisors(factorize(1)) == [1]
        assert divisors(factorize(32)) == [1, 2, 4, 8, 16, 32]

    @given(st.integers(min_value=1, max_value=10**6))
    @settings(max_examples=200, deadline=None)
    def test_count_matches_formula(self, n):
        f = factorize(n)
        divs = divisors(f)
        expected = 1
        for _, e in f.factors:
            expected *= e + 1
        assert len(divs) == expected
        assert divs == sorted(set(divs))
        assert all(n % d == 0 for d in divs)

    def test_cap(self):
        f = factorize(2 * 3 * 5 * 7 * 11 * 13 * 17 * 19)
        with pytest.raises(ResourceLimitError):
            divisors(f, cap=100)


def test_divisor_lists_consistent():
    dl = divisor_lists(500)
    for n in (1, 2, 360, 499, 500):
        assert dl[n] == divisors(factorize(n))


def test_primes_upto():
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_upto(1) == []
