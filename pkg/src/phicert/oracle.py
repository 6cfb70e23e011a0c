"""Exact solution counts for ``x_1^n + ... + x_m^n = d``.

Counts are of ordered tuples.  Two independent engines are provided:

* a depth-first search over non-increasing tuples, grouped by distinct
  value, that expands each multiset to its ``m! / prod(k_j!)`` orderings;
* a convolution table ``P_m(d) = sum_x P_{m-1}(d - x^n)``.

They share nothing but the problem statement, so they check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

import numpy as np

from .numtheory import integer_nth_root
from .phidiv import phi_divisor_degree
from .reduction import Mode

__all__ = [
    "OracleBudgetExceeded",
    "OracleBudget",
    "CountResult",
    "DEFAULT_BUDGET",
    "count_solutions",
    "count_table",
    "enumerate_counts",
    "iter_representations",
    "iter_solutions",
    "verify_descent_step",
]


class OracleBudgetExceeded(RuntimeError):
    """The requested count is too expensive under the configured budget."""


@dataclass(frozen=True)
class OracleBudget:
    node_limit: int = 10**8
    """Cap on the estimated number of search nodes for the DFS engine."""
    table_cap: int = 2 * 10**7
    """Cap on table entries ``(d + 1) * m`` for the convolution engine."""


DEFAULT_BUDGET = OracleBudget()


@dataclass(frozen=True)
class CountResult:
    count: int
    mode: Mode
    d: int
    n: int
    m: int
    method: str = "dfs"

    def __int__(self):
        return self.count


def _lowest(mode: Mode) -> int:
    return 1 if mode is Mode.NATURAL else 0


def _check_args(n, m, d):
    if n < 1:
        raise ValueError(f"exponent must be positive, got {n}")
    if m < 0:
        raise ValueError(f"number of terms must be non-negative, got {m}")
    if d < 0:
        raise ValueError(f"right-hand side must be non-negative, got {d}")


def dfs_node_estimate(n: int, m: int, d: int) -> int:
    """Upper bound on the search nodes the DFS visits: the number of
    non-increasing ``(m-1)``-tuples over ``[0, r]``, ``r = floor(d^(1/n))``;
    the last coordinate is solved by table lookup."""
    if m <= 1:
        return 1
    r = integer_nth_root(d, n)
    return comb(r + m - 1, m - 1)


def _dfs_count(n: int, m: int, d: int, lo: int) -> int:
    r = integer_nth_root(d, n)
    powers = [x**n for x in range(r + 1)]
    root_of = {p: x for x, p in enumerate(powers)}
    fact = [factorial(k) for k in range(m + 1)]
    total_perm = fact[m]

    def rec(rem, slots, top, denom):
        # all remaining values are <= top, each used with some multiplicity
        if rem == 0:
            # leftover slots must all be zero
            if slots == 0 or lo == 0:
                return total_perm // (denom * fact[slots])
            return 0
        if slots == 1:
            x = root_of.get(rem)
            if x is not None and lo <= x <= top:
                return total_perm // denom
            return 0
        if top < lo or slots * powers[top] < rem:
            return 0
        total = 0
        start = min(top, integer_nth_root(rem, n))
        for v in range(start, max(lo, 1) - 1, -1):
            pv = powers[v]
            if slots * pv < rem:
                break
            acc = 0
            for k in range(1, slots + 1):
                acc += pv
                if acc > rem:
                    break
                total += rec(rem - acc, slots - k, v - 1, denom * fact[k])
        return total

    if m == 0:
        return 1 if d == 0 else 0
    return rec(d, m, r, 1)


def _table_dtype(n, m_max, d_max, lo):
    r = integer_nth_root(d_max, n)
    bound = max(r + 1 - lo, 1) ** m_max
    return np.int64 if bound < 2**62 else object


def count_table(n: int, m_max: int, d_max: int, mode: Mode = Mode.NONNEGATIVE,
                budget: OracleBudget | None = DEFAULT_BUDGET) -> np.ndarray:
    """Counts for every ``m <= m_max`` and ``d <= d_max``.

    Row ``m`` of the returned array holds ``P_m(0..d_max)``; row 0 is the
    indicator of ``d == 0``.  The dtype is int64 when the counts provably
    fit, otherwise Python ints in an object array.
    """
    _check_args(n, m_max, d_max)
    if budget is not None and (d_max + 1) * (m_max + 1) > budget.table_cap:
        raise OracleBudgetExceeded(
            f"table of {(d_max + 1) * (m_max + 1)} entries exceeds cap {budget.table_cap}"
        )
    lo = _lowest(mode)
    dtype = _table_dtype(n, m_max, d_max, lo)
    table = np.zeros((m_max + 1, d_max + 1), dtype=dtype)
    table[0, 0] = 1
    powers = []
    x = lo
    while x**n <= d_max:
        powers.append(x**n)
        x += 1
    for m in range(1, m_max + 1):
        prev, row = table[m - 1], table[m]
        for p in powers:
            row[p:] += prev[: d_max + 1 - p]
    return table


def count_solutions(n: int, m: int, d: int, mode: Mode = Mode.NONNEGATIVE, *,
                    method: str = "auto",
                    budget: OracleBudget | None = DEFAULT_BUDGET) -> CountResult:
    """Number of ordered ``m``-tuples with ``sum x_i^n = d``.

    ``method`` is ``"dfs"``, ``"table"`` or ``"auto"``; auto prefers the
    DFS and falls back to the table when the DFS estimate is over budget.
    ``budget=None`` disables the guard.
    """
    _check_args(n, m, d)
    lo = _lowest(mode)
    if method == "auto":
        if budget is None or dfs_node_estimate(n, m, d) <= budget.node_limit:
            method = "dfs"
        elif (d + 1) * (m + 1) <= budget.table_cap:
            method = "table"
        else:
            raise OracleBudgetExceeded(
                f"counting sum of {m} {n}-th powers = {d}: DFS estimate "
                f"{dfs_node_estimate(n, m, d)} nodes > {budget.node_limit} and table "
                f"{(d + 1) * (m + 1)} entries > {budget.table_cap}"
            )
    if method == "dfs":
        if budget is not None and dfs_node_estimate(n, m, d) > budget.node_limit:
            raise OracleBudgetExceeded("DFS node estimate over budget")
        count = _dfs_count(n, m, d, lo)
    elif method == "table":
        count = int(count_table(n, m, d, mode, budget)[m, d])
    else:
        raise ValueError(f"unknown method {method!r}")
    return CountResult(count, mode, d, n, m, method)


def enumerate_counts(n: int, m: int, d_max: int, mode: Mode = Mode.NONNEGATIVE) -> list[int]:
    """Counts for all ``d <= d_max`` at fixed ``m`` by walking every
    non-increasing tuple with ``sum x_i^n <= d_max`` once.

    Independent of :func:`count_table`; meant for cross-checking it.
    """
    _check_args(n, m, d_max)
    lo = _lowest(mode)
    counts = [0] * (d_max + 1)
    if m == 0:
        counts[0] = 1
        return counts
    r = integer_nth_root(d_max, n)
    powers = [x**n for x in range(r + 1)]
    fact = [factorial(k) for k in range(m + 1)]

    # walk positions one at a time; `run` is the length of the current block
    # of equal values, `denom` the product of factorials of closed blocks
    def rec(pos, total, prev, run, denom):
        if pos == m:
            counts[total] += fact[m] // (denom * fact[run])
            return
        room = d_max - total
        for v in range(lo, prev + 1):
            pv = powers[v]
            if pv > room:
                break
            if v == prev:
                rec(pos + 1, total + pv, v, run + 1, denom)
            else:
                rec(pos + 1, total + pv, v, 1, denom * fact[run])

    for v in range(lo, r + 1):
        rec(1, powers[v], v, 1, 1)
    return counts


def iter_representations(n: int, m: int, d: int, mode: Mode = Mode.NONNEGATIVE):
    """Yield each solution once as a non-increasing tuple."""
    _check_args(n, m, d)
    lo = _lowest(mode)
    if m == 0:
        if d == 0:
            yield ()
        return

    def rec(prefix, rem, slots, top):
        if rem == 0:
            if lo == 0:
                yield tuple(prefix) + (0,) * slots
            elif slots == 0:
                yield tuple(prefix)
            return
        if slots == 0:
            return
        for v in range(min(top, integer_nth_root(rem, n)), max(lo, 1) - 1, -1):
            if slots * v**n < rem:
                break
            prefix.append(v)
            yield from rec(prefix, rem - v**n, slots - 1, v)
            prefix.pop()

    yield from rec([], d, m, integer_nth_root(d, n))


def _distinct_permutations(values):
    """Distinct orderings of a multiset in lexicographic order."""
    a = sorted(values)
    while True:
        yield tuple(a)
        i = len(a) - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = len(a) - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def iter_solutions(n: int, m: int, d: int, mode: Mode = Mode.NONNEGATIVE):
    """Yield every ordered solution tuple, in lexicographic order."""
    ordered = []
    for rep in iter_representations(n, m, d, mode):
        ordered.extend(_distinct_permutations(rep))
    ordered.sort()
    yield from ordered


def verify_descent_step(n: int, m: int, b: int, p: int, s: int,
                        mode: Mode = Mode.NONNEGATIVE,
                        budget: OracleBudget | None = DEFAULT_BUDGET) -> bool:
    """Compare the counts at ``b * p^(n*s)`` and ``b * p^(n*(s-1))``.

    Requires ``p`` to be a phi-divisor of ``n`` whose degree ``k`` satisfies
    ``m <= p^k - 1``; under that hypothesis the two counts must agree.
    """
    k = phi_divisor_degree(p, n)
    if k is None or m > p**k - 1:
        raise ValueError(f"{p} is not an eligible phi-divisor for n={n}, m={m}")
    if s < 1:
        raise ValueError("s must be positive")
    upper = count_solutions(n, m, b * p ** (n * s), mode, budget=budget).count
    lower = count_solutions(n, m, b * p ** (n * (s - 1)), mode, budget=budget).count
    return upper == lower
