from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from phicert.certificates import (
    CertificateError,
    ExhaustiveCount,
    GapInterval,
    GeneralResidue,
    PhiAugmentedFermat,
    PrimePowerFermat,
    ResiduePlusMinus,
    ResidueZeroOne,
    StandardNaturalBound,
    Status,
    TrivialSolvable,
    Verdict,
    certificate_from_dict,
)
from phicert.criteria import analyze
from phicert.reduction import Equation, Mode
from phicert.report import Report, parse_int, verdict_report

VALID = [
    TrivialSolvable(2, 3, 2, 5),
    GapInterval(15, 127, 23607, 1),
    ResidueZeroOne(12, 14, 32015, 16, 15),
    ResiduePlusMinus(3, 3, 9005, 3, 2, 5),
    GeneralResidue(2, 3, 47, 8, 7, 7),
    StandardNaturalBound(2, 3, 2, 2),
    PrimePowerFermat(3, 5, 2),
    PhiAugmentedFermat(4, 7, 1, ((2, 1), (3, 1))),
    PhiAugmentedFermat(4, None, 0, ((2, 2),)),
    ExhaustiveCount(2, 2, 77),
]


@pytest.mark.parametrize("cert", VALID, ids=lambda c: c.kind)
def test_round_trip(cert):
    d = json.loads(json.dumps(cert.to_dict()))
    assert certificate_from_dict(d) == cert
    assert d["theorem"] == cert.theorem
    assert cert.theorem in cert.describe()


@pytest.mark.parametrize("build", [
    lambda: TrivialSolvable(2, 3, 4),
    lambda: GapInterval(2, 5, 7, 1),            # m too large for l = 1
    lambda: GapInterval(15, 127, 100, 1),       # outside the interval
    lambda: ResidueZeroOne(12, 14, 32015, 16, 14),
    lambda: ResidueZeroOne(3, 2, 8, 9, 8),      # cubes are not 0/1 mod 9
    lambda: ResiduePlusMinus(6, 2, 10, 7, 1, 3),
    lambda: ResiduePlusMinus(3, 3, 9003, 3, 2, 3),
    lambda: GeneralResidue(2, 3, 46, 8, 6, 7),
    lambda: StandardNaturalBound(2, 3, 2, 3),   # 3 only allows m <= 2
    lambda: PrimePowerFermat(2, 5, 1),
    lambda: PrimePowerFermat(3, 6, 1),
    lambda: PhiAugmentedFermat(4, 7, 1, ((11, 1),)),
    lambda: ExhaustiveCount(2, 2, 5, "integer"),
])
def test_invalid_certificates_rejected(build):
    with pytest.raises((CertificateError, ValueError)):
        build()


def test_from_dict_checks_label_and_kind():
    d = GapInterval(15, 127, 23607, 1).to_dict()
    with pytest.raises(CertificateError):
        certificate_from_dict({**d, "theorem": "Theorem 4"})
    with pytest.raises(CertificateError):
        certificate_from_dict({**d, "kind": "Nope"})


def test_verdict_invariants():
    eq = Equation(2, 2, 3)
    with pytest.raises(CertificateError):
        Verdict(Status.INSOLUBLE, eq)
    with pytest.raises(CertificateError):
        Verdict(Status.SOLVABLE, eq, certificate=GapInterval(2, 2, 3, 1))
    with pytest.raises(CertificateError):
        Verdict(Status.INSOLUBLE, eq, certificate=PrimePowerFermat(3, 2, 1))
    Verdict(Status.INSOLUBLE, eq.with_mode(Mode.NATURAL), certificate=PrimePowerFermat(3, 2, 1))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 6]), st.integers(2, 5), st.integers(0, 500),
       st.sampled_from([1, 2, 3, 6, 7, 10]), st.booleans())
def test_report_round_trip(n, m, b, c, natural):
    eq = Equation(n, m, b, c, Mode.NATURAL if natural else Mode.NONNEGATIVE)
    v = analyze(eq)
    rep = verdict_report("analyze", eq.to_dict(), v, 0.125)
    line = rep.to_json()
    assert "\n" not in line
    back = Report.from_json(line)
    assert back == rep
    assert back.to_json() == line
    d = json.loads(line)
    assert {"input", "verdict", "certificate", "trace"} <= d.keys()
    if d["certificate"] is not None:
        assert {"theorem", "params"} <= d["certificate"].keys()


@pytest.mark.parametrize("text,value", [
    ("233280", 233280),
    ("2^5*3^2", 288),
    ("4^3*(8*5+7)", 3008),
    ("2**10 - 1", 1023),
    ("-(3)", -3),
])
def test_parse_int(text, value):
    assert parse_int(text) == value


@pytest.mark.parametrize("text", ["", "2/3", "abc", "2^(10^7)", "1.5", "__import__('os')"])
def test_parse_int_rejects(text):
    with pytest.raises(ValueError):
        parse_int(text)
