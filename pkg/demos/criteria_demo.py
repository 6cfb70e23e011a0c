"""
Insolubility certificates
=========================

The analyzer reduces the right-hand side, then tries a gap between
consecutive n-th powers, residue classes where n-th powers are 0 or 1,
classes where they are 0 or +-1, and finally the full residue sumset.
The exact counter is the last resort.
"""

from phicert import Equation, analyze, count_solutions

examples = [
    (12, 14, 32015),
    (6, 7, 7028),
    (3, 3, 9005),
    (6, 2, 45399),
    (15, 127, 23607),
    (6, 3, 233280),
    (2, 3, 4**3 * (8 * 5 + 7)),
]

for n, m, rhs in examples:
    v = analyze(Equation(n, m, rhs))
    print(f"n={n:<3} m={m:<4} rhs={rhs:<8} {v.status.value:<10} {v.certificate.describe()}")

# a certificate is data: it serializes and re-validates on load
v = analyze(Equation(6, 3, 233280))
print()
print(v.certificate.to_dict())

# nothing in the residue table rules out 77 as a sum of two squares, so the
# exact count decides
v = analyze(Equation(2, 2, 77))
print()
print(v.status.value, v.theorem, "count:", count_solutions(2, 2, 77).count)
