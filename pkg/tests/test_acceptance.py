"""Acceptance criteria, one test per criterion.

Each test is tagged with ``@pytest.mark.acceptance(number, title)``; the
terminal summary prints one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import json
import time
from math import comb

import numpy as np
import pytest

from phicert import cli
from phicert.certificates import PrimePowerFermat, certificate_from_dict
from phicert.criteria import (
    analyze,
    analyze_natural,
    candidate_plus_minus_moduli,
    candidate_zero_one_moduli,
    check_gap,
    check_general_residue,
    check_plus_minus_residue,
    check_zero_one_residue,
    general_moduli,
)
from phicert.numtheory import is_prime
from phicert.oracle import count_solutions, count_table, enumerate_counts
from phicert.reduction import Equation, Mode, eligible_divisors, reduce_rhs


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line.strip()]


@pytest.mark.acceptance(1, "233280 with n=6, m=3 is insoluble, reduces to 5, count 0")
def test_sixth_powers_233280(capsys):
    t0 = time.perf_counter()
    code, [report] = run_cli(capsys, "analyze", "--n", "6", "--m", "3", "--rhs", "233280", "--json")
    assert code == cli.EXIT_INSOLUBLE
    assert report["verdict"] == "insoluble"
    assert report["trace"]["rhs"]["original"] == 233280
    assert report["trace"]["rhs"]["reduced"] == 5
    assert 233280 == 5 * (2 * 3) ** 6
    cert = certificate_from_dict(report["certificate"])
    assert cert.root.kind in ("GapInterval", "GeneralResidue")

    code, [report] = run_cli(capsys, "count", "--n", "6", "--m", "3", "--rhs", "233280", "--json")
    assert code == 0 and report["count"] == 0
    assert time.perf_counter() - t0 < 1.0


@pytest.mark.acceptance(2, "73728 has exactly 105 representations by 7 fourth powers")
def test_fourth_powers_73728(capsys):
    t0 = time.perf_counter()
    code, [report] = run_cli(capsys, "count", "--n", "4", "--m", "7", "--rhs", "73728",
                             "--method", "table", "--json")
    assert code == 0 and report["count"] == 105
    assert time.perf_counter() - t0 < 5.0
    assert reduce_rhs(4, 7, 73728)[0] == 18
    assert count_solutions(4, 7, 18).count == 105


# (n, largest m, rhs, theorem, criterion check at a given m)
SECTION_EXAMPLES = [
    (12, 14, 32015, "Theorem 6", lambda m: check_zero_one_residue(12, m, 32015, 16)),
    (6, 7, 7028, "Theorem 4", lambda m: check_zero_one_residue(6, m, 7028, 9)),
    (3, 3, 9005, "Theorem 7", lambda m: check_plus_minus_residue(3, m, 9005, 3, 2)),
    (6, 2, 45399, "Theorem 5", lambda m: check_zero_one_residue(6, m, 45399, 4)),
    (15, 127, 23607, "Theorem 3", lambda m: check_gap(15, m, 23607)),
]


@pytest.mark.acceptance(3, "worked insoluble examples certified by the named theorems")
def test_named_theorem_examples():
    t0 = time.perf_counter()
    for idx, (n, m_max, rhs, theorem, check) in enumerate(SECTION_EXAMPLES):
        v = analyze(Equation(n, m_max, rhs), use_oracle=False)
        assert v.insoluble and v.theorem == theorem, (n, m_max, rhs, v.theorem)
        assert certificate_from_dict(v.certificate.to_dict()) == v.certificate
        # the named criterion covers the whole range m <= m_max; another criterion
        # may be reported first for smaller m, which is fine as long as it is insoluble
        for m in range(2, m_max + 1):
            cert = check(m)
            assert cert is not None and cert.theorem == theorem, (n, m, rhs)
            assert analyze(Equation(n, m, rhs), use_oracle=False).insoluble
            if idx < 4:
                assert count_solutions(n, m, rhs).count == 0, (n, m, rhs)
    assert time.perf_counter() - t0 < 30.0


def _firing_certificates(n, m, b):
    out = []
    if c := check_gap(n, m, b):
        out.append(c)
    for q in candidate_zero_one_moduli(n, m):
        if c := check_zero_one_residue(n, m, b, q):
            out.append(c)
    for p, k in candidate_plus_minus_moduli(n, m):
        if c := check_plus_minus_residue(n, m, b, p, k):
            out.append(c)
    for q in general_moduli(n, m):
        if c := check_general_residue(n, m, b, q):
            out.append(c)
    return out


@pytest.mark.acceptance(4, "soundness sweep: no criterion fires on a solvable instance")
def test_soundness_sweep():
    t0 = time.perf_counter()
    fired = 0
    for n in (2, 3, 4, 6):
        table = count_table(n, 4, 5000)
        for m in (2, 3, 4):
            for b in range(5001):
                certs = _firing_certificates(n, m, b)
                fired += bool(certs)
                if certs:
                    assert table[m, b] == 0, (n, m, b, [c.theorem for c in certs])
                v = analyze(Equation(n, m, b), use_oracle=False)
                if v.insoluble:
                    assert table[m, b] == 0, (n, m, b, v.theorem)
    assert fired > 0
    assert time.perf_counter() - t0 < 300.0


def _eligible_multipliers(n, m, limit):
    """All c >= 2 built from eligible phi-divisor primes with c^n <= limit."""
    out = {1}
    for d in eligible_divisors(n, m):
        grown = set()
        for c in out:
            q = c
            while q**n <= limit:
                grown.add(q)
                q *= d.p
        out = grown
    return sorted(c for c in out if c > 1)


@pytest.mark.acceptance(5, "stripping eligible phi-divisor powers preserves counts in both modes")
def test_reduction_exactness():
    t0 = time.perf_counter()
    limit = 10**7
    checked = 0
    for n in (2, 4, 6):
        for m in (2, 3):
            cs = _eligible_multipliers(n, m, limit)
            assert cs, (n, m)
            for mode in Mode:
                for b in range(31):
                    base = count_solutions(n, m, b, mode).count
                    for c in cs:
                        if b * c**n > limit:
                            continue
                        assert count_solutions(n, m, b * c**n, mode).count == base, (n, m, b, c, mode)
                        checked += 1
    assert checked > 500
    assert time.perf_counter() - t0 < 300.0


@pytest.mark.acceptance(6, "numbers 4^s(8l+7) are not sums of three squares")
def test_three_squares(capsys):
    for s in range(4):
        for l in range(6):  # noqa: E741
            rhs = 4**s * (8 * l + 7)
            code, [report] = run_cli(capsys, "analyze", "--n", "2", "--m", "3",
                                     "--rhs", f"4^{s}*(8*{l}+7)", "--json")
            assert code == cli.EXIT_INSOLUBLE, rhs
            assert report["input"]["rhs"] == rhs
            assert count_solutions(2, 3, rhs).count == 0


@pytest.mark.acceptance(7, "x^n + y^n = p^(sn) has no positive solution (prime-power case)")
def test_prime_power_fermat():
    seen = 0
    for n in (3, 4, 5):
        for p in (2, 3, 5):
            for s in (1, 2):
                if p ** (s * n) > 10**9:
                    continue
                seen += 1
                assert count_solutions(n, 2, p ** (s * n), Mode.NATURAL).count == 0
                v = analyze_natural(Equation(n, 2, 1, p**s, Mode.NATURAL), use_oracle=False)
                assert v.insoluble and v.count is None
                assert isinstance(v.certificate, PrimePowerFermat), (n, p, s, v.theorem)
    assert seen == 18


def _brute_phi_divisors(n):
    out = {}
    for p in range(2, n + 2):
        if not is_prime(p):
            continue
        k, best = 1, None
        while p ** (k - 1) * (p - 1) <= n:
            if n % (p ** (k - 1) * (p - 1)) == 0 and p**k >= 3:
                best = k
            k += 1
        if best:
            out[p] = best
    return out


@pytest.mark.acceptance(8, "phi-divisor tables for n=120 and n=2")
def test_phidiv_tables(capsys):
    code, [report] = run_cli(capsys, "phidiv", "--n", "120", "--json")
    assert code == 0
    pairs = {tuple(x) for x in report["result"]["divisors"]}
    listed = {(2, 4), (3, 2), (5, 2), (7, 1), (11, 1), (13, 1)}
    assert listed <= pairs
    # the remaining entries are primes p with p - 1 | 120 as well
    assert pairs - listed == {(31, 1), (41, 1), (61, 1)}
    assert pairs == set(_brute_phi_divisors(120).items())

    code, [report] = run_cli(capsys, "phidiv", "--n", "2", "--json")
    assert {tuple(x) for x in report["result"]["divisors"]} == {(2, 2), (3, 1)}


@pytest.mark.acceptance(9, "enumeration and convolution table agree; binomial identity holds")
def test_oracle_self_consistency():
    d_max = 10**4
    for n in range(2, 7):
        tables = {mode: count_table(n, 4, d_max, mode) for mode in Mode}
        for mode in Mode:
            for m in range(1, 5):
                assert enumerate_counts(n, m, d_max, mode) == tables[mode][m].tolist(), (n, m, mode)
        nat = tables[Mode.NATURAL].astype(object)
        for m in range(1, 5):
            expected = sum(comb(m, j) * nat[j] for j in range(m + 1))
            assert np.array_equal(tables[Mode.NONNEGATIVE][m].astype(object), expected), (n, m)
