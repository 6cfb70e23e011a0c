"""Certified (in)solvability of x_1^n + ... + x_m^n = b * c^n.

Reductions through phi-divisors of the exponent, residue and interval
insolubility criteria, and an exact counting oracle to check them.
"""

from .certificates import Certificate, CertificateError, Status, Verdict
from .criteria import (
    analyze,
    analyze_natural,
    candidate_plus_minus_moduli,
    candidate_zero_one_moduli,
    check_gap,
    check_general_residue,
    check_plus_minus_residue,
    check_zero_one_residue,
    first_certificate,
)
from .numtheory import factorize, integer_nth_root, power_residues
from .oracle import OracleBudget, OracleBudgetExceeded, count_solutions, count_table
from .phidiv import PhiDivisor, all_phi_divisors, phi_divisor_degree
from .reduction import Equation, Mode, is_standard, reduce_equation, reduce_rhs

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CertificateError",
    "Equation",
    "Mode",
    "OracleBudget",
    "OracleBudgetExceeded",
    "PhiDivisor",
    "Status",
    "Verdict",
    "all_phi_divisors",
    "analyze",
    "analyze_natural",
    "candidate_plus_minus_moduli",
    "candidate_zero_one_moduli",
    "check_gap",
    "check_general_residue",
    "check_plus_minus_residue",
    "check_zero_one_residue",
    "count_solutions",
    "count_table",
    "factorize",
    "first_certificate",
    "integer_nth_root",
    "is_standard",
    "phi_divisor_degree",
    "power_residues",
    "reduce_equation",
    "reduce_rhs",
]
