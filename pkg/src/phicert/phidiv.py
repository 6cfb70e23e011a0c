"""phi-divisors of an exponent.

A prime ``p`` is a phi-divisor of ``n`` when ``phi(p^k)`` divides ``n`` for
some ``k`` with ``p^k >= 3``; its degree is the largest such ``k``.  Because
``phi(p^k)`` is even whenever ``p^k >= 3``, only even exponents have any.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .numtheory import euler_phi_prime_power, is_prime, primes_up_to

__all__ = ["PhiDivisor", "phi_divisor_degree", "all_phi_divisors", "phi_divisor"]


@dataclass(frozen=True, order=True)
class PhiDivisor:
    p: int
    degree: int
    prime_power: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "prime_power", self.p**self.degree)

    @property
    def phi(self) -> int:
        return euler_phi_prime_power(self.p, self.degree)

    @property
    def max_terms(self) -> int:
        """Largest number of summands ``m`` this divisor can be stripped for."""
        return self.prime_power - 1

    def as_tuple(self) -> tuple[int, int]:
        return (self.p, self.degree)


def phi_divisor_degree(p: int, n: int) -> int | None:
    """Maximal ``k`` with ``phi(p^k) | n`` and ``p^k >= 3``, or None."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError(f"exponent must be positive, got {n}")
    best = None
    k = 1
    # phi(p^k) at least doubles with k (p >= 2), so this stops quickly
    while n % euler_phi_prime_power(p, k) == 0:
        if p**k >= 3:
            best = k
        k += 1
    return best


def phi_divisor(p: int, n: int) -> PhiDivisor | None:
    k = phi_divisor_degree(p, n)
    return None if k is None else PhiDivisor(p, k)


def all_phi_divisors(n: int) -> list[PhiDivisor]:
    """Every phi-divisor of ``n`` at its maximal degree, by increasing prime.

    ``(p - 1) | phi(p^k) | n`` forces ``p <= n + 1``, so scanning those
    primes is complete.
    """
    if n % 2:
        return []
    out = []
    for p in primes_up_to(n + 1):
        if n % (p - 1) == 0:
            k = phi_divisor_degree(p, n)
            if k is not None:
                out.append(PhiDivisor(p, k))
    return out
