"""Machine-readable reports and the integer expression syntax of the CLI."""

from __future__ import annotations

import ast
import json
import operator
from dataclasses import dataclass, field

from .certificates import Certificate, Verdict, certificate_from_dict

__all__ = ["Report", "parse_int", "verdict_report"]

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Pow: operator.pow}
_MAX_EXPONENT = 100_000


def parse_int(text: str) -> int:
    """Parse a decimal integer or a product/power expression such as
    ``2^5*3^2`` or ``4^3*(8*5+7)``.  Evaluated exactly; no names, no division."""
    source = text.strip().replace("^", "**")
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError:
        raise ValueError(f"not an integer expression: {text!r}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return node.value
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Pow) and not 0 <= right <= _MAX_EXPONENT:
                raise ValueError(f"exponent {right} out of range in {text!r}")
            return _BINOPS[type(node.op)](left, right)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        raise ValueError(f"not an integer expression: {text!r}")

    return ev(tree)


@dataclass
class Report:
    """One CLI result.  ``to_json``/``from_json`` round-trip exactly."""

    command: str
    input: dict
    verdict: str | None = None
    certificate: Certificate | None = None
    trace: dict | None = None
    count: int | None = None
    result: dict = field(default_factory=dict)
    timing: float = 0.0

    def to_dict(self) -> dict:
        out = {
            "command": self.command,
            "input": self.input,
            "verdict": self.verdict,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "trace": self.trace,
            "timing": self.timing,
        }
        if self.count is not None:
            out["count"] = self.count
        if self.result:
            out["result"] = self.result
        return out

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        cert = d.get("certificate")
        return cls(
            command=d["command"],
            input=d["input"],
            verdict=d.get("verdict"),
            certificate=None if cert is None else certificate_from_dict(cert),
            trace=d.get("trace"),
            count=d.get("count"),
            result=d.get("result", {}),
            timing=d.get("timing", 0.0),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> Report:
        return cls.from_dict(json.loads(line))


def verdict_report(command: str, inputs: dict, verdict: Verdict, timing: float) -> Report:
    trace = None
    if verdict.trace is not None:
        trace = {"equation": verdict.trace.to_dict(), "rhs": verdict.rhs_trace.to_dict()}
    return Report(
        command=command,
        input=inputs,
        verdict=verdict.status.value,
        certificate=verdict.certificate,
        trace=trace,
        count=verdict.count,
        timing=timing,
    )
