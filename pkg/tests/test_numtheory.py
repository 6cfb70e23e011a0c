from __future__ import annotations

from math import factorial, gcd

import pytest
from hypothesis import given, strategies as st

from phicert.numtheory import (
    Factorization,
    FactorizationBudgetError,
    euler_phi_prime_power,
    factorize,
    integer_nth_root,
    is_prime,
    legendre_valuation,
    power_residues,
    primes_up_to,
    verify_binomial_divisibility,
)


def slow_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def test_is_prime_matches_trial_division():
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if slow_is_prime(n)]


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


def test_primes_up_to():
    assert primes_up_to(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert primes_up_to(1) == ()


@given(st.integers(1, 10**9))
def test_factorize_recomposes(n):
    f = factorize(n)
    assert f.value == n
    assert all(is_prime(p) and e >= 1 for p, e in f.factors)
    assert list(f.primes) == sorted(f.primes)


def test_factorize_examples():
    assert factorize(233280).factors == ((2, 6), (3, 6), (5, 1))
    assert factorize(1).factors == ()
    assert str(factorize(72)) == "2^3*3^2"
    big_prime = 1_000_000_007
    assert factorize(2**5 * big_prime).factors == ((2, 5), (big_prime, 1))


def test_factorize_budget():
    p, q = 1_000_000_007, 998_244_353
    with pytest.raises(FactorizationBudgetError):
        factorize(p * q * 1_000_000_009, max_digits=10)


def test_factorization_rejects_bad_input():
    with pytest.raises(ValueError):
        Factorization(((4, 1),))
    with pytest.raises(ValueError):
        factorize(0)


@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(1, 4))
def test_phi_prime_power_counts_coprimes(p, k):
    q = p**k
    assert euler_phi_prime_power(p, k) == sum(1 for x in range(1, q + 1) if gcd(x, q) == 1)


@given(st.integers(0, 300), st.sampled_from([2, 3, 5, 7]))
def test_legendre_valuation(n, p):
    f, v = factorial(n), 0
    while f % p == 0:
        f //= p
        v += 1
    assert legendre_valuation(n, p) == v


def test_binomial_divisibility():
    # p^k | n implies p divides C(n, j) for 0 < j < p
    assert verify_binomial_divisibility(2, 3, 24)
    assert verify_binomial_divisibility(5, 1, 10)
    with pytest.raises(ValueError):
        verify_binomial_divisibility(3, 2, 12)


@given(st.integers(0, 10**40), st.integers(1, 12))
def test_integer_nth_root(d, n):
    r = integer_nth_root(d, n)
    assert r**n <= d < (r + 1) ** n


@given(st.integers(1, 12), st.integers(2, 200))
def test_power_residues_brute(n, c):
    rs = power_residues(n, c)
    assert set(rs.residues) == {pow(x, n, c) for x in range(c)}
    assert rs.sorted() == sorted(rs.residues)


def test_zero_one_residue_examples():
    assert set(power_residues(6, 9).residues) == {0, 1}
    assert set(power_residues(12, 16).residues) == {0, 1}
    assert set(power_residues(3, 9).residues) == {0, 1, 8}
