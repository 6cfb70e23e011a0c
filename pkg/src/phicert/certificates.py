"""Certificates: self-checking records of why a verdict holds.

Each certificate re-verifies its hypotheses on construction, including
when it is rebuilt from JSON, so a parsed certificate is a checked one.
Theorem labels follow the numbering used throughout the package docs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, fields
from functools import lru_cache
from typing import ClassVar

from .numtheory import euler_phi_prime_power, is_prime, power_residues
from .phidiv import phi_divisor_degree
from .reduction import Equation, Mode, ReductionTrace, RhsReduction, is_standard

__all__ = [
    "CertificateError",
    "Certificate",
    "TrivialSolvable",
    "GapInterval",
    "ResidueZeroOne",
    "ResiduePlusMinus",
    "GeneralResidue",
    "StandardNaturalBound",
    "PrimePowerFermat",
    "PhiAugmentedFermat",
    "ExhaustiveCount",
    "ReducedBy",
    "Status",
    "Verdict",
    "attainable_residues",
    "certificate_from_dict",
    "prime_power_base",
]


class CertificateError(ValueError):
    """A certificate's parameters do not satisfy its theorem's hypotheses."""


def _require(cond, msg):
    if not cond:
        raise CertificateError(msg)


def prime_power_base(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` if ``q = p^k`` with ``p`` prime and ``k >= 1``."""
    if q < 2:
        return None
    for k in range(q.bit_length(), 0, -1):
        lo, hi = 2, 1 << (q.bit_length() // k + 1)
        while lo <= hi:
            mid = (lo + hi) // 2
            v = mid**k
            if v == q:
                return (mid, k) if is_prime(mid) else None
            if v < q:
                lo = mid + 1
            else:
                hi = mid - 1
    return None


@lru_cache(maxsize=8192)
def _sumset_bits(n: int, m: int, c: int) -> int:
    """Bitmask of residues mod ``c`` reachable as a sum of ``m`` n-th powers."""
    mask = (1 << c) - 1
    residues = power_residues(n, c).residues
    reach = 1  # the empty sum
    for _ in range(m):
        nxt = 0
        for r in residues:
            nxt |= ((reach << r) | (reach >> (c - r))) & mask
        # 0 is always a residue, so reach only grows; stop at the fixpoint
        if nxt == reach:
            break
        reach = nxt
        if reach == mask:
            break
    return reach


def attainable_residues(n: int, m: int, c: int) -> frozenset[int]:
    bits = _sumset_bits(n, m, c)
    return frozenset(r for r in range(c) if bits >> r & 1)


_REGISTRY: dict[str, type[Certificate]] = {}


@dataclass(frozen=True)
class Certificate:
    kind: ClassVar[str] = "certificate"
    solvable: ClassVar[bool] = False
    natural_only: ClassVar[bool] = False

    def __init_subclass__(cls, **kw):
        super().__init_subclass__(**kw)
        _REGISTRY[cls.kind] = cls

    def __post_init__(self):
        self.check()

    def check(self):
        raise NotImplementedError

    @property
    def theorem(self) -> str:
        raise NotImplementedError

    def params(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def to_dict(self) -> dict:
        return {"kind": self.kind, "theorem": self.theorem, "params": self.params()}

    @classmethod
    def from_params(cls, params: dict) -> Certificate:
        return cls(**params)

    def describe(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.theorem} [{self.kind}: {args}]"


def certificate_from_dict(d: dict) -> Certificate:
    try:
        cls = _REGISTRY[d["kind"]]
    except KeyError:
        raise CertificateError(f"unknown certificate kind {d.get('kind')!r}") from None
    cert = cls.from_params(d["params"])
    if "theorem" in d and d["theorem"] != cert.theorem:
        raise CertificateError(f"theorem label {d['theorem']!r} does not match {cert.theorem!r}")
    return cert


@dataclass(frozen=True)
class TrivialSolvable(Certificate):
    """``b <= m``: put ``c`` in ``b`` slots and 0 elsewhere."""

    kind: ClassVar[str] = "TrivialSolvable"
    solvable: ClassVar[bool] = True

    n: int
    m: int
    b: int
    c: int = 1

    def check(self):
        _require(0 <= self.b <= self.m, f"b={self.b} must lie in [0, m={self.m}]")
        _require(self.c >= 1, "c must be positive")

    @property
    def theorem(self):
        return "trivial witness"

    @property
    def rhs(self):
        return self.b * self.c**self.n

    def witness(self) -> tuple[int, ...]:
        return (self.c,) * self.b + (0,) * (self.m - self.b)


@dataclass(frozen=True)
class GapInterval(Certificate):
    """No sum of ``m`` n-th powers lands in ``[m*l^n + 1, (l+1)^n - 1]``."""

    kind: ClassVar[str] = "GapInterval"

    n: int
    m: int
    rhs: int
    l: int  # noqa: E741

    def check(self):
        n, m, l = self.n, self.m, self.l
        _require(l >= 1, "l must be positive")
        # m < (1 + 1/l)^n - 1, cleared of denominators
        _require((m + 1) * l**n < (l + 1) ** n, f"m={m} too large for l={l}, n={n}")
        _require(m * l**n + 1 <= self.rhs <= (l + 1) ** n - 1,
                 f"{self.rhs} is outside [{m * l**n + 1}, {(l + 1) ** n - 1}]")

    @property
    def theorem(self):
        return "Theorem 3"

    @property
    def interval(self) -> tuple[int, int]:
        return self.m * self.l**self.n + 1, (self.l + 1) ** self.n - 1


@dataclass(frozen=True)
class ResidueZeroOne(Certificate):
    """n-th powers are 0 or 1 mod ``modulus``, so ``m`` of them leave a
    remainder in ``[0, m]``."""

    kind: ClassVar[str] = "ResidueZeroOne"

    n: int
    m: int
    rhs: int
    modulus: int
    remainder: int

    def check(self):
        c = self.modulus
        _require(c >= 3, "modulus must be >= 3")
        _require(self.remainder == self.rhs % c, "remainder does not match rhs mod modulus")
        _require(power_residues(self.n, c).issubset({0, 1}),
                 f"x^{self.n} mod {c} takes values other than 0 and 1")
        _require(self.m < c - 1, f"m={self.m} must be < modulus - 1 = {c - 1}")
        _require(self.remainder > self.m, f"remainder {self.remainder} must exceed m={self.m}")

    @property
    def theorem(self):
        c, n = self.modulus, self.n
        if c == 4 and self.m == 2:
            return "Theorem 5"
        base = prime_power_base(c)
        if base is not None:
            p, k = base
            if n % euler_phi_prime_power(p, k) == 0:
                return "Theorem 4"
            if p == 2 and k >= 4 and n % 2 ** (k - 2) == 0:
                return "Theorem 6"
        return "zero-one residue lemma"


@dataclass(frozen=True)
class ResiduePlusMinus(Certificate):
    """n-th powers are 0 or +-1 mod ``p^k``, so ``m`` of them leave a
    remainder within ``m`` of 0."""

    kind: ClassVar[str] = "ResiduePlusMinus"

    n: int
    m: int
    rhs: int
    p: int
    k: int
    remainder: int

    @property
    def modulus(self) -> int:
        return self.p**self.k

    def check(self):
        p, k, n, m = self.p, self.k, self.n, self.m
        _require(p >= 3 and is_prime(p), f"{p} must be an odd prime")
        _require(k >= 1, "k must be positive")
        half = euler_phi_prime_power(p, k) // 2
        _require(n % half == 0 and (n // half) % 2 == 1,
                 f"n={n} must be an odd multiple of phi({p}^{k})/2 = {half}")
        c = p**k
        _require(self.remainder == self.rhs % c, "remainder does not match rhs mod modulus")
        _require(power_residues(n, c).issubset({0, 1, c - 1}),
                 f"x^{n} mod {c} takes values other than 0 and +-1")
        _require(2 * m < c - 1, f"m={m} must be < (modulus - 1)/2")
        _require(m + 1 <= self.remainder <= c - m - 1,
                 f"remainder {self.remainder} outside [{m + 1}, {c - m - 1}]")

    @property
    def theorem(self):
        return "Theorem 7"


@dataclass(frozen=True)
class GeneralResidue(Certificate):
    """The remainder of ``rhs`` is not a sum of ``m`` n-th power residues."""

    kind: ClassVar[str] = "GeneralResidue"

    n: int
    m: int
    rhs: int
    modulus: int
    remainder: int
    attainable: int  # size of the m-fold residue sumset

    def check(self):
        c = self.modulus
        _require(c >= 2, "modulus must be >= 2")
        _require(self.remainder == self.rhs % c, "remainder does not match rhs mod modulus")
        bits = _sumset_bits(self.n, self.m, c)
        _require(not bits >> self.remainder & 1,
                 f"remainder {self.remainder} is reachable mod {c}")
        _require(self.attainable == bin(bits).count("1"), "attainable-set size mismatch")

    @property
    def theorem(self):
        return "residue sumset"


@dataclass(frozen=True)
class StandardNaturalBound(Certificate):
    """A standard equation with ``b < m`` has no solution in positive integers."""

    kind: ClassVar[str] = "StandardNaturalBound"
    natural_only: ClassVar[bool] = True

    n: int
    m: int
    b: int
    c: int

    def check(self):
        _require(0 <= self.b < self.m, f"b={self.b} must be < m={self.m}")
        _require(is_standard(Equation(self.n, self.m, self.b, self.c)),
                 "equation is not standard")

    @property
    def theorem(self):
        return "Theorem 11"

    @property
    def rhs(self):
        return self.b * self.c**self.n


@dataclass(frozen=True)
class PrimePowerFermat(Certificate):
    """``x^n + y^n = (p^s)^n`` has no positive solutions for ``n >= 3``."""

    kind: ClassVar[str] = "PrimePowerFermat"
    natural_only: ClassVar[bool] = True

    n: int
    p: int
    s: int

    def check(self):
        _require(self.n >= 3, "n must be >= 3")
        _require(is_prime(self.p), f"{self.p} is not prime")
        _require(self.s >= 1, "s must be positive")

    @property
    def theorem(self):
        return "Theorem 12"

    @property
    def m(self):
        return 2

    @property
    def rhs(self):
        return self.p ** (self.s * self.n)


@dataclass(frozen=True)
class PhiAugmentedFermat(Certificate):
    """``x^n + y^n = (p^s * prod q_i^e_i)^n`` with ``n`` even, ``n >= 4``
    and each ``q_i`` a phi-divisor of ``n``: no positive solutions.

    ``p`` is None when nothing but phi-divisors divides ``c``.
    """

    kind: ClassVar[str] = "PhiAugmentedFermat"
    natural_only: ClassVar[bool] = True

    n: int
    p: int | None
    s: int
    stripped: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "stripped", tuple(tuple(q) for q in self.stripped))
        super().__post_init__()

    def check(self):
        _require(self.n >= 4 and self.n % 2 == 0, "n must be even and >= 4")
        if self.p is None:
            _require(self.s == 0, "s must be 0 when p is absent")
        else:
            _require(is_prime(self.p) and self.s >= 0, "p must be prime and s >= 0")
        for q, e in self.stripped:
            _require(e >= 1 and phi_divisor_degree(q, self.n) is not None,
                     f"{q} is not a phi-divisor of {self.n}")

    @property
    def theorem(self):
        return "Theorem 13"

    @property
    def m(self):
        return 2

    @property
    def c(self) -> int:
        out = 1 if self.p is None else self.p**self.s
        for q, e in self.stripped:
            out *= q**e
        return out

    @property
    def rhs(self):
        return self.c**self.n


@dataclass(frozen=True)
class ExhaustiveCount(Certificate):
    """The exact oracle found no solutions."""

    kind: ClassVar[str] = "ExhaustiveCount"

    n: int
    m: int
    rhs: int
    mode: str = Mode.NONNEGATIVE.value

    def check(self):
        Mode(self.mode)
        _require(self.rhs >= 0, "rhs must be non-negative")

    @property
    def natural_only(self):
        return self.mode == Mode.NATURAL.value

    @property
    def theorem(self):
        return "exhaustive count"

    def verify(self, budget=None) -> bool:
        """Re-run the count; True when it is still zero."""
        from .oracle import DEFAULT_BUDGET, count_solutions

        res = count_solutions(self.n, self.m, self.rhs, Mode(self.mode),
                              budget=budget or DEFAULT_BUDGET)
        return res.count == 0


@dataclass(frozen=True)
class ReducedBy(Certificate):
    """``inner`` certifies the reduced right-hand side; the reduction is
    count-preserving, so the verdict transfers to the original equation."""

    kind: ClassVar[str] = "ReducedBy"

    trace: ReductionTrace
    rhs_trace: RhsReduction
    inner: Certificate

    def check(self):
        t, r = self.trace, self.rhs_trace
        _require(t.reduced.rhs == r.original, "rhs reduction does not start at the reduced equation")
        _require((r.n, r.m) == (t.original.n, t.original.m), "n, m mismatch in traces")
        _require(getattr(self.inner, "rhs", None) == r.reduced,
                 "inner certificate is not about the reduced right-hand side")
        _require(getattr(self.inner, "n", None) == r.n, "inner certificate has a different n")
        _require(getattr(self.inner, "m", None) == r.m, "inner certificate has a different m")

    @property
    def solvable(self):
        return self.inner.solvable

    @property
    def natural_only(self):
        return self.inner.natural_only

    @property
    def theorem(self):
        if (
            not self.inner.solvable
            and self.inner.theorem in {"Theorem 3", "Theorem 4", "Theorem 5", "Theorem 6", "Theorem 7"}
            and is_standard(self.trace.original)
        ):
            return "Theorem 9"
        return "Theorem 2"

    @property
    def root(self) -> Certificate:
        """The innermost certificate."""
        return self.inner

    def params(self):
        return {
            "trace": self.trace.to_dict(),
            "rhs_trace": self.rhs_trace.to_dict(),
            "inner": self.inner.to_dict(),
        }

    @classmethod
    def from_params(cls, params):
        return cls(
            ReductionTrace.from_dict(params["trace"]),
            RhsReduction.from_dict(params["rhs_trace"]),
            certificate_from_dict(params["inner"]),
        )

    def describe(self):
        steps = [f"{d.p}^{e}" for d, e in self.trace.stripped]
        steps += [f"({d.p}^{self.rhs_trace.n})^{s}" for d, s in self.rhs_trace.steps]
        return (f"{self.theorem}: strip {' * '.join(steps) or 'nothing'} "
                f"({self.rhs_trace.original} -> {self.rhs_trace.reduced}); "
                f"then {self.inner.describe()}")


class Status(enum.Enum):
    SOLVABLE = "solvable"
    INSOLUBLE = "insoluble"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    status: Status
    equation: Equation
    certificate: Certificate | None = None
    count: int | None = None
    trace: ReductionTrace | None = None
    rhs_trace: RhsReduction | None = None

    def __post_init__(self):
        if self.status is Status.INSOLUBLE and self.certificate is None:
            raise CertificateError("an insoluble verdict needs a certificate")
        if self.certificate is not None:
            if self.status is Status.UNKNOWN or self.certificate.solvable != (self.status is Status.SOLVABLE):
                raise CertificateError("certificate contradicts the verdict")
            if self.certificate.natural_only and not self.equation.natural:
                raise CertificateError("natural-only certificate on a non-negative equation")

    @property
    def insoluble(self) -> bool:
        return self.status is Status.INSOLUBLE

    @property
    def solvable(self) -> bool:
        return self.status is Status.SOLVABLE

    @property
    def theorem(self) -> str | None:
        return None if self.certificate is None else self.certificate.theorem

    @property
    def root_certificate(self) -> Certificate | None:
        cert = self.certificate
        while isinstance(cert, ReducedBy):
            cert = cert.inner
        return cert
