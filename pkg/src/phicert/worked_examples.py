"""Regression table of worked examples, replayed by ``phicert verify-paper``.

Cases live in ``worked_examples.json`` next to this module.  Each has an
``id``, a list of ``tags`` (``thm9``, ``natural``, ...), a ``kind`` naming
the operation, its ``args`` and the ``expect``-ed outcome.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .criteria import (
    analyze,
    candidate_zero_one_moduli,
    check_gap,
    check_general_residue,
    check_plus_minus_residue,
    check_zero_one_residue,
)
from .oracle import count_solutions, verify_descent_step
from .phidiv import all_phi_divisors
from .reduction import Equation, Mode, is_standard, reduce_equation, reduce_rhs

__all__ = ["Case", "CaseResult", "load_cases", "run_case", "run_cases"]


@dataclass(frozen=True)
class Case:
    id: str
    kind: str
    args: dict
    expect: dict
    tags: tuple[str, ...] = ()


@dataclass(frozen=True)
class CaseResult:
    case: Case
    passed: bool
    observed: dict
    error: str | None = None


def load_cases(path: str | Path | None = None) -> list[Case]:
    if path is None:
        text = resources.files(__package__).joinpath("worked_examples.json").read_text()
    else:
        text = Path(path).read_text()
    return [
        Case(c["id"], c["kind"], c["args"], c["expect"], tuple(c.get("tags", ())))
        for c in json.loads(text)["cases"]
    ]


def _equation(args):
    mode = Mode.NATURAL if args.get("natural") else Mode.NONNEGATIVE
    if "rhs" in args:
        return Equation(args["n"], args["m"], args["rhs"], 1, mode)
    return Equation(args["n"], args["m"], args["b"], args.get("c", 1), mode)


def _observe(case: Case) -> dict:
    a = case.args
    kind = case.kind
    if kind == "analyze":
        v = analyze(_equation(a))
        root = v.root_certificate
        return {
            "verdict": v.status.value,
            "theorem": v.theorem,
            "root_theorem": None if root is None else root.theorem,
        }
    if kind == "count":
        mode = Mode.NATURAL if a.get("natural") else Mode.NONNEGATIVE
        return {"count": count_solutions(a["n"], a["m"], a["rhs"], mode).count}
    if kind == "reduce":
        return {"reduced": reduce_rhs(a["n"], a["m"], a["rhs"])[0]}
    if kind == "reduce_equation":
        t = reduce_equation(_equation(a))
        return {"b": t.reduced.b, "c": t.reduced.c}
    if kind == "phidiv":
        return {"divisors": [list(d.as_tuple()) for d in all_phi_divisors(a["n"])]}
    if kind == "standard":
        return {"standard": is_standard(_equation(a))}
    if kind == "zero_one_moduli":
        return {"moduli": candidate_zero_one_moduli(a["n"], a["m"])}
    if kind == "criterion":
        name = a["criterion"]
        n, m, b = a["n"], a["m"], a["rhs"]
        if name == "gap":
            cert = check_gap(n, m, b)
        elif name == "zero_one":
            cert = check_zero_one_residue(n, m, b, a["modulus"])
        elif name == "plus_minus":
            cert = check_plus_minus_residue(n, m, b, a["p"], a["k"])
        elif name == "general":
            cert = check_general_residue(n, m, b, a["modulus"])
        else:
            raise ValueError(f"unknown criterion {name!r}")
        return {"theorem": None if cert is None else cert.theorem}
    if kind == "descent":
        return {"holds": verify_descent_step(a["n"], a["m"], a["b"], a["p"], a["s"])}
    raise ValueError(f"unknown case kind {kind!r}")


def run_case(case: Case) -> CaseResult:
    try:
        observed = _observe(case)
    except Exception as exc:  # reported as a failing case, not a crash
        return CaseResult(case, False, {}, f"{type(exc).__name__}: {exc}")
    passed = all(observed.get(k) == v for k, v in case.expect.items())
    return CaseResult(case, passed, observed)


def run_cases(cases: list[Case], tag: str | None = None) -> list[CaseResult]:
    selected = [c for c in cases if tag is None or tag in c.tags or tag == c.id]
    return [run_case(c) for c in selected]
