"""Insolubility criteria and the analysis pipeline.

Every check returns a certificate or None.  The dispatchers try them in a
fixed order (gap, zero-one residues, plus-minus residues, general residue
sumsets, exact count), so the same input always yields the same verdict
and the same certificate.
"""

from __future__ import annotations

import logging
from functools import lru_cache

from .certificates import (
    Certificate,
    ExhaustiveCount,
    GapInterval,
    GeneralResidue,
    PhiAugmentedFermat,
    PrimePowerFermat,
    ReducedBy,
    ResiduePlusMinus,
    ResidueZeroOne,
    StandardNaturalBound,
    Status,
    TrivialSolvable,
    Verdict,
    _sumset_bits,
)
from .numtheory import (
    FactorizationBudgetError,
    euler_phi_prime_power,
    factorize,
    integer_nth_root,
    is_prime,
    power_residues,
    primes_up_to,
)
from .oracle import DEFAULT_BUDGET, OracleBudget, OracleBudgetExceeded, count_solutions
from .phidiv import all_phi_divisors
from .reduction import Equation, Mode, is_standard, reduce_equation, reduce_rhs, strip_primes

__all__ = [
    "CriterionMisuse",
    "DEFAULT_MODULUS_CAP",
    "check_gap",
    "check_zero_one_residue",
    "candidate_zero_one_moduli",
    "check_plus_minus_residue",
    "candidate_plus_minus_moduli",
    "check_general_residue",
    "general_moduli",
    "first_certificate",
    "analyze",
    "analyze_natural",
]

log = logging.getLogger(__name__)

DEFAULT_MODULUS_CAP = 4096


class CriterionMisuse(ValueError):
    """A criterion was called outside its hypotheses."""


def check_gap(n: int, m: int, b: int) -> GapInterval | None:
    """Look for ``l`` with ``b`` strictly between ``m*l^n`` and ``(l+1)^n``."""
    if b <= m:
        return None
    # the intervals sit strictly between consecutive n-th powers, so only
    # l = floor(b^(1/n)) can contain b
    l = integer_nth_root(b, n)  # noqa: E741
    if m * l**n < b and (m + 1) * l**n < (l + 1) ** n:
        return GapInterval(n, m, b, l)
    return None


def check_zero_one_residue(n: int, m: int, b: int, c: int) -> ResidueZeroOne | None:
    if not power_residues(n, c).issubset({0, 1}):
        raise CriterionMisuse(f"x^{n} mod {c} is not always 0 or 1")
    r = b % c
    if m < c - 1 and r > m:
        return ResidueZeroOne(n, m, b, c, r)
    return None


@lru_cache(maxsize=1024)
def _zero_one_moduli(n: int, m: int) -> tuple[int, ...]:
    out = set()
    # p^k >= 3 with phi(p^k) | n
    for p in primes_up_to(n + 1):
        if n % (p - 1):
            continue
        k = 1
        while n % euler_phi_prime_power(p, k) == 0:
            q = p**k
            if q >= 3 and m < q - 1:
                out.add(q)
            k += 1
    # 2^(k+2) with 2^k | n, k >= 2
    k = 2
    while n % 2**k == 0:
        if m < 2 ** (k + 2) - 1:
            out.add(2 ** (k + 2))
        k += 1
    return tuple(sorted(out))


def candidate_zero_one_moduli(n: int, m: int) -> list[int]:
    """Moduli on which n-th powers are 0 or 1 and ``m`` is small enough."""
    return list(_zero_one_moduli(n, m))


def check_plus_minus_residue(n: int, m: int, b: int, p: int, k: int) -> ResiduePlusMinus | None:
    if p < 3 or not is_prime(p) or k < 1:
        raise CriterionMisuse(f"need an odd prime power, got {p}^{k}")
    half = euler_phi_prime_power(p, k) // 2
    if n % half or (n // half) % 2 == 0:
        raise CriterionMisuse(f"n={n} is not an odd multiple of phi({p}^{k})/2 = {half}")
    c = p**k
    if not power_residues(n, c).issubset({0, 1, c - 1}):
        raise CriterionMisuse(f"x^{n} mod {c} is not always 0 or +-1")
    r = b % c
    if 2 * m < c - 1 and m + 1 <= r <= c - m - 1:
        return ResiduePlusMinus(n, m, b, p, k, r)
    return None


@lru_cache(maxsize=1024)
def _plus_minus_moduli(n: int, m: int) -> tuple[tuple[int, int], ...]:
    out = []
    # phi(p^k)/2 | n forces (p - 1)/2 | n, i.e. p <= 2n + 1
    for p in primes_up_to(2 * n + 1)[1:]:
        k = 1
        while n % (euler_phi_prime_power(p, k) // 2) == 0:
            half = euler_phi_prime_power(p, k) // 2
            if (n // half) % 2 == 1 and 2 * m < p**k - 1:
                out.append((p, k))
            k += 1
    return tuple(sorted(out, key=lambda pk: pk[0] ** pk[1]))


def candidate_plus_minus_moduli(n: int, m: int) -> list[tuple[int, int]]:
    """``(p, k)`` pairs usable by :func:`check_plus_minus_residue`, by modulus."""
    return list(_plus_minus_moduli(n, m))


def check_general_residue(n: int, m: int, b: int, c: int) -> GeneralResidue | None:
    """Certificate when ``b mod c`` is not a sum of ``m`` n-th power residues."""
    if c < 2:
        raise ValueError("modulus must be >= 2")
    bits = _sumset_bits(n, m, c)
    r = b % c
    if bits >> r & 1:
        return None
    return GeneralResidue(n, m, b, c, r, bin(bits).count("1"))


@lru_cache(maxsize=1024)
def _general_moduli(n: int, m: int, cap: int) -> tuple[int, ...]:
    out = set(_zero_one_moduli(n, m))
    out.update(p**k for p, k in _plus_minus_moduli(n, m))
    for p in primes_up_to(min(2 * n + 1, cap)):
        if (2 * n) % (p - 1):
            continue
        q = p
        while q <= cap:
            if q >= 3:
                out.add(q)
            q *= p
    return tuple(sorted(c for c in out if c <= cap))


def general_moduli(n: int, m: int, cap: int = DEFAULT_MODULUS_CAP) -> list[int]:
    """Moduli tried by the residue-sumset criterion, ascending."""
    return list(_general_moduli(n, m, cap))


def first_certificate(n: int, m: int, b: int,
                      modulus_cap: int = DEFAULT_MODULUS_CAP) -> Certificate | None:
    """First insolubility certificate for ``sum x_i^n = b`` in precedence order."""
    if b <= m:
        return None
    cert = check_gap(n, m, b)
    if cert:
        return cert
    for c in _zero_one_moduli(n, m):
        cert = check_zero_one_residue(n, m, b, c)
        if cert:
            return cert
    for p, k in _plus_minus_moduli(n, m):
        cert = check_plus_minus_residue(n, m, b, p, k)
        if cert:
            return cert
    for c in _general_moduli(n, m, modulus_cap):
        cert = check_general_residue(n, m, b, c)
        if cert:
            return cert
    return None


def _wrap(trace, rhs_trace, cert):
    if trace.is_identity and rhs_trace.is_identity:
        return cert
    return ReducedBy(trace, rhs_trace, cert)


def analyze(eq: Equation, *, budget: OracleBudget | None = DEFAULT_BUDGET,
            modulus_cap: int = DEFAULT_MODULUS_CAP, use_oracle: bool = True) -> Verdict:
    """Decide solvability of ``eq`` in non-negative integers, if possible.

    Natural-mode equations are handed to :func:`analyze_natural`.
    ``Unknown`` means no criterion applied and the oracle was out of budget
    (or disabled); it is not a claim either way.
    """
    if eq.natural:
        return analyze_natural(eq, budget=budget, modulus_cap=modulus_cap, use_oracle=use_oracle)
    n, m = eq.n, eq.m
    trace = reduce_equation(eq)
    R, rhs_trace = reduce_rhs(n, m, trace.reduced.rhs)
    common = dict(equation=eq, trace=trace, rhs_trace=rhs_trace)

    if eq.b <= m:
        return Verdict(Status.SOLVABLE, certificate=TrivialSolvable(n, m, eq.b, eq.c), **common)
    if R <= m:
        cert = _wrap(trace, rhs_trace, TrivialSolvable(n, m, R, 1))
        return Verdict(Status.SOLVABLE, certificate=cert, **common)

    cert = first_certificate(n, m, R, modulus_cap)
    if cert is not None:
        return Verdict(Status.INSOLUBLE, certificate=_wrap(trace, rhs_trace, cert), **common)

    if use_oracle:
        try:
            res = count_solutions(n, m, R, Mode.NONNEGATIVE, budget=budget)
        except OracleBudgetExceeded as exc:
            log.info("oracle skipped: %s", exc)
        else:
            if res.count:
                return Verdict(Status.SOLVABLE, count=res.count, **common)
            cert = _wrap(trace, rhs_trace, ExhaustiveCount(n, m, R))
            return Verdict(Status.INSOLUBLE, certificate=cert, count=0, **common)
    return Verdict(Status.UNKNOWN, **common)


def _single_prime_power(c: int) -> tuple[int, int] | None:
    try:
        fac = factorize(c)
    except FactorizationBudgetError:
        return None
    return fac.factors[0] if len(fac) == 1 else None


def _fermat_shape(eq: Equation) -> bool:
    return eq.m == 2 and eq.b == 1 and eq.c > 1


def prime_power_fermat_certificate(eq: Equation) -> PrimePowerFermat | None:
    """``x^n + y^n = (p^s)^n`` with ``n >= 3`` has no positive solution."""
    if not _fermat_shape(eq) or eq.n < 3:
        return None
    pk = _single_prime_power(eq.c)
    return None if pk is None else PrimePowerFermat(eq.n, *pk)


def natural_fermat_certificate(eq: Equation) -> Certificate | None:
    """Certificates for ``x^n + y^n = c^n`` in positive integers."""
    n, c = eq.n, eq.c
    if not _fermat_shape(eq):
        return None
    cert = prime_power_fermat_certificate(eq)
    if cert is not None:
        return cert
    if n >= 4 and n % 2 == 0:
        rest, removed = strip_primes(c, [d.p for d in all_phi_divisors(n)])
        if rest == 1:
            return PhiAugmentedFermat(n, None, 0, tuple(removed))
        pk = _single_prime_power(rest)
        if pk is not None:
            return PhiAugmentedFermat(n, pk[0], pk[1], tuple(removed))
    return None


def analyze_natural(eq: Equation, *, budget: OracleBudget | None = DEFAULT_BUDGET,
                    modulus_cap: int = DEFAULT_MODULUS_CAP, use_oracle: bool = True) -> Verdict:
    """Decide solvability of ``eq`` in positive integers, if possible."""
    if not eq.natural:
        raise ValueError("analyze_natural expects a natural-mode equation")
    n, m = eq.n, eq.m
    trace = reduce_equation(eq)
    R, rhs_trace = reduce_rhs(n, m, trace.reduced.rhs)
    common = dict(equation=eq, trace=trace, rhs_trace=rhs_trace)

    if eq.b == m:
        return Verdict(Status.SOLVABLE, certificate=TrivialSolvable(n, m, eq.b, eq.c), **common)
    # the prime-power case is named even when the bound for standard equations also applies
    cert = prime_power_fermat_certificate(eq)
    if cert is not None:
        return Verdict(Status.INSOLUBLE, certificate=cert, **common)
    if eq.b < m and is_standard(eq):
        cert = StandardNaturalBound(n, m, eq.b, eq.c)
        return Verdict(Status.INSOLUBLE, certificate=cert, **common)
    cert = natural_fermat_certificate(eq)
    if cert is not None:
        return Verdict(Status.INSOLUBLE, certificate=cert, **common)

    # no non-negative solution means no positive one either
    nonneg = analyze(eq.with_mode(Mode.NONNEGATIVE), budget=budget,
                     modulus_cap=modulus_cap, use_oracle=False)
    if nonneg.insoluble:
        return Verdict(Status.INSOLUBLE, certificate=nonneg.certificate, **common)

    if use_oracle:
        try:
            res = count_solutions(n, m, R, Mode.NATURAL, budget=budget)
        except OracleBudgetExceeded as exc:
            log.info("oracle skipped: %s", exc)
        else:
            if res.count:
                return Verdict(Status.SOLVABLE, count=res.count, **common)
            cert = _wrap(trace, rhs_trace, ExhaustiveCount(n, m, R, Mode.NATURAL.value))
            return Verdict(Status.INSOLUBLE, certificate=cert, count=0, **common)
    return Verdict(Status.UNKNOWN, **common)
