"""Count-preserving reductions of ``x_1^n + ... + x_m^n = b * c^n``.

If ``p`` is a phi-divisor of ``n`` of degree ``k`` and ``m <= p^k - 1``,
every solution of ``sum x_i^n = N * p^n`` has all ``x_i`` divisible by
``p``: a term prime to ``p`` contributes 1 mod ``p^k``, a term divisible by
``p`` contributes 0, and at most ``m < p^k`` ones can never add up to a
multiple of ``p^k``.  Dividing every ``x_i`` by ``p`` is then a bijection
onto the solutions for ``N``, in both counting modes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .phidiv import PhiDivisor, all_phi_divisors

__all__ = [
    "Mode",
    "Equation",
    "ReductionTrace",
    "RhsReduction",
    "eligible_divisors",
    "is_standard",
    "reduce_equation",
    "reduce_rhs",
    "strip_primes",
]


class Mode(enum.Enum):
    NONNEGATIVE = "nonnegative"
    NATURAL = "natural"


@dataclass(frozen=True)
class Equation:
    """``x_1^n + ... + x_m^n = b * c^n`` counted in the given mode."""

    n: int
    m: int
    b: int
    c: int = 1
    mode: Mode = Mode.NONNEGATIVE

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"exponent n must be >= 2, got {self.n}")
        if self.m < 2:
            raise ValueError(f"number of terms m must be >= 2, got {self.m}")
        if self.b < 0:
            raise ValueError(f"b must be non-negative, got {self.b}")
        if self.c < 1:
            raise ValueError(f"c must be positive, got {self.c}")

    @property
    def rhs(self) -> int:
        return self.b * self.c**self.n

    @property
    def natural(self) -> bool:
        return self.mode is Mode.NATURAL

    def with_mode(self, mode: Mode) -> Equation:
        return replace(self, mode=mode)

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "b": self.b, "c": self.c, "mode": self.mode.value}

    @classmethod
    def from_dict(cls, d: dict) -> Equation:
        return cls(d["n"], d["m"], d["b"], d.get("c", 1), Mode(d.get("mode", "nonnegative")))

    def __str__(self):
        lhs = f"sum_{{i=1..{self.m}}} x_i^{self.n}"
        rhs = str(self.b) if self.c == 1 else f"{self.b}*{self.c}^{self.n}"
        return f"{lhs} = {rhs} [{self.mode.value}]"


def eligible_divisors(n: int, m: int) -> list[PhiDivisor]:
    """phi-divisors of ``n`` whose maximal degree allows ``m`` summands."""
    return [d for d in all_phi_divisors(n) if m <= d.max_terms]


def strip_primes(c: int, primes) -> tuple[int, list[tuple[int, int]]]:
    """Divide ``c`` by the full power of each prime; return the cofactor and
    the (prime, exponent) pairs actually removed."""
    removed = []
    for p in primes:
        e = 0
        while c % p == 0:
            c //= p
            e += 1
        if e:
            removed.append((p, e))
    return c, removed


def is_standard(eq: Equation) -> bool:
    """True when ``n`` is even, every prime of ``c`` is a phi-divisor of
    ``n`` and ``m`` is at most ``p^k - 1`` for each of them."""
    if eq.n % 2 or eq.m < 2:
        return False
    divisors = all_phi_divisors(eq.n)
    rest, removed = strip_primes(eq.c, [d.p for d in divisors])
    if rest != 1:
        return False
    by_prime = {d.p: d for d in divisors}
    return all(eq.m <= by_prime[p].max_terms for p, _ in removed)


@dataclass(frozen=True)
class ReductionTrace:
    """Result of stripping eligible prime powers out of ``c``.

    ``stripped`` pairs each divisor with the exponent of ``p`` removed
    from ``c``.
    """

    original: Equation
    reduced: Equation
    stripped: tuple[tuple[PhiDivisor, int], ...] = ()

    def __post_init__(self):
        c = self.reduced.c
        for d, e in self.stripped:
            if self.original.m > d.max_terms:
                raise ValueError(f"{d} is not eligible for m={self.original.m}")
            c *= d.p**e
        if c != self.original.c or self.reduced.b != self.original.b:
            raise ValueError("reduction trace does not recompose to the original equation")

    @property
    def is_identity(self) -> bool:
        return not self.stripped

    def to_dict(self) -> dict:
        return {
            "original": self.original.to_dict(),
            "reduced": self.reduced.to_dict(),
            "stripped": [[d.p, d.degree, e] for d, e in self.stripped],
        }

    @classmethod
    def from_dict(cls, d: dict) -> ReductionTrace:
        return cls(
            Equation.from_dict(d["original"]),
            Equation.from_dict(d["reduced"]),
            tuple((PhiDivisor(p, k), e) for p, k, e in d["stripped"]),
        )


def reduce_equation(eq: Equation) -> ReductionTrace:
    """Remove from ``c`` every prime whose phi-divisor degree admits ``m``.

    The solution count (in either mode) of the reduced equation equals that
    of the original.
    """
    eligible = eligible_divisors(eq.n, eq.m)
    rest, removed = strip_primes(eq.c, [d.p for d in eligible])
    by_prime = {d.p: d for d in eligible}
    return ReductionTrace(
        eq,
        replace(eq, c=rest),
        tuple((by_prime[p], e) for p, e in removed),
    )


@dataclass(frozen=True)
class RhsReduction:
    """Stripping ``p^n`` factors off a raw right-hand side.

    ``steps`` pairs each divisor with the number of ``p^n`` divisions.
    """

    n: int
    m: int
    original: int
    reduced: int
    steps: tuple[tuple[PhiDivisor, int], ...] = ()

    def __post_init__(self):
        N = self.reduced
        for d, s in self.steps:
            if self.m > d.max_terms:
                raise ValueError(f"{d} is not eligible for m={self.m}")
            N *= d.p ** (self.n * s)
        if N != self.original:
            raise ValueError("rhs reduction does not recompose to the original value")

    @property
    def is_identity(self) -> bool:
        return not self.steps

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "original": self.original,
            "reduced": self.reduced,
            "steps": [[d.p, d.degree, s] for d, s in self.steps],
        }

    @classmethod
    def from_dict(cls, d: dict) -> RhsReduction:
        return cls(
            d["n"], d["m"], d["original"], d["reduced"],
            tuple((PhiDivisor(p, k), s) for p, k, s in d["steps"]),
        )


def reduce_rhs(n: int, m: int, N: int) -> tuple[int, RhsReduction]:
    """Divide ``N`` by ``p^n`` for each eligible ``p`` while possible.

    Partial powers stay behind: ``2^7`` with ``n = 4`` leaves ``2^3``.
    """
    if N < 0:
        raise ValueError("right-hand side must be non-negative")
    if N == 0:
        return 0, RhsReduction(n, m, 0, 0)
    value = N
    steps = []
    for d in eligible_divisors(n, m):
        q = d.p**n
        s = 0
        while value % q == 0:
            value //= q
            s += 1
        if s:
            steps.append((d, s))
    return value, RhsReduction(n, m, N, value, tuple(steps))
