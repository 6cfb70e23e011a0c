"""Exact integer primitives used by the reduction and criteria engines.

Everything here works on Python ints, so nothing overflows and nothing
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

__all__ = [
    "FactorizationBudgetError",
    "Factorization",
    "ResidueSet",
    "is_prime",
    "primes_up_to",
    "factorize",
    "euler_phi_prime_power",
    "legendre_valuation",
    "verify_binomial_divisibility",
    "integer_nth_root",
    "power_residues",
    "DEFAULT_FACTOR_DIGITS",
]

# Trial division past ~10^7 candidate divisors stops being a desk-scale job.
DEFAULT_FACTOR_DIGITS = 14

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class FactorizationBudgetError(ValueError):
    """Raised when an integer is too large to factor by trial division."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=64)
def primes_up_to(limit: int) -> tuple[int, ...]:
    """Sieve of Eratosthenes; returns the primes ``p <= limit``."""
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization: ``factors`` lists (prime, exponent) pairs
    with strictly increasing primes."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1 or not is_prime(p):
                raise ValueError(f"not a canonical factorization: {self.factors}")
            last = p

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def factorize(N: int, max_digits: int = DEFAULT_FACTOR_DIGITS) -> Factorization:
    """Factor ``N >= 1`` by trial division.

    Only a composite cofactor left after removing the primes below 1000
    counts against ``max_digits``; prime cofactors are recognised directly.
    """
    if N < 1:
        raise ValueError(f"factorize expects N >= 1, got {N}")
    factors = []

    def strip(d):
        nonlocal N
        e = 0
        while N % d == 0:
            N //= d
            e += 1
        if e:
            factors.append((d, e))
        return e

    for p in primes_up_to(997):
        strip(p)
    d = 1001  # 6k - 1, continuing the 6k +/- 1 wheel
    step = 2
    while N > 1 and d * d <= N:
        if is_prime(N):
            break
        if len(str(N)) > max_digits:
            raise FactorizationBudgetError(
                f"composite cofactor with {len(str(N))} digits exceeds the "
                f"{max_digits}-digit trial-division budget"
            )
        while d * d <= N:
            if strip(d):
                break
            d += step
            step = 6 - step
    if N > 1:
        factors.append((N, 1))
    return Factorization(tuple(factors))


def euler_phi_prime_power(p: int, k: int) -> int:
    if k < 1:
        raise ValueError(f"exponent must be positive, got {k}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p ** (k - 1) * (p - 1)


def legendre_valuation(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``n!``: sum of floor(n / p^j)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    total, q = 0, p
    while q <= n:
        total += n // q
        q *= p
    return total


def verify_binomial_divisibility(p: int, k: int, n: int) -> bool:
    """Check that ``p^(k+1)`` divides ``C(n, j) * p^(n-j)`` for all
    ``1 <= j <= n - 1``. Requires ``p^k | n``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1 or n < 1 or n % p**k:
        raise ValueError(f"precondition p^k | n violated for p={p}, k={k}, n={n}")
    mod = p ** (k + 1)
    return all(comb(n, j) * pow(p, n - j, mod) % mod == 0 for j in range(1, n))


def integer_nth_root(d: int, n: int) -> int:
    """Return ``r`` with ``r**n <= d < (r+1)**n``, by bisection on exact powers."""
    if d < 0:
        raise ValueError("d must be non-negative")
    if n < 1:
        raise ValueError("n must be positive")
    if d < 2 or n == 1:
        return d
    lo, hi = 1, 1 << (d.bit_length() // n + 1)
    # invariant: lo**n <= d < hi**n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**n <= d:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class ResidueSet:
    """All values ``x^n mod modulus`` for ``x`` in ``[0, modulus)``."""

    exponent: int
    modulus: int
    residues: frozenset[int]

    def __contains__(self, r: int) -> bool:
        return r in self.residues

    def __len__(self):
        return len(self.residues)

    def issubset(self, other) -> bool:
        return self.residues <= frozenset(other)

    def sorted(self) -> list[int]:
        return sorted(self.residues)


@lru_cache(maxsize=4096)
def power_residues(n: int, c: int) -> ResidueSet:
    if c < 2:
        raise ValueError(f"modulus must be >= 2, got {c}")
    return ResidueSet(n, c, frozenset(pow(x, n, c) for x in range(c)))
