"""
Positive solutions only
=======================

In natural mode zeros are not allowed.  Standard equations with b < m have
no positive solutions; x^n + y^n = c^n has none when c is a prime power
(n >= 3), or when n is even and c is a prime power times phi-divisor powers.
"""

from phicert import Equation, Mode, analyze_natural, count_solutions

cases = [
    Equation(2, 3, 2, 2, Mode.NATURAL),        # standard, b < m
    Equation(3, 2, 1, 25, Mode.NATURAL),       # x^3 + y^3 = (5^2)^3
    Equation(4, 2, 1, 2 * 3 * 7, Mode.NATURAL),
    Equation(2, 2, 1, 5, Mode.NATURAL),        # 3^2 + 4^2 = 5^2
    Equation(2, 2, 2, 5, Mode.NATURAL),        # b = m: (5, 5)
]

for eq in cases:
    v = analyze_natural(eq)
    how = v.certificate.describe() if v.certificate else f"count {v.count}"
    print(f"{str(eq):<45} {v.status.value:<10} {how}")

# the prime-power statement, checked by brute counting at desk scale
print()
for n in (3, 4, 5):
    for p in (2, 3, 5):
        for s in (1, 2):
            if p ** (s * n) <= 10**9:
                c = count_solutions(n, 2, p ** (s * n), Mode.NATURAL).count
                print(f"x^{n} + y^{n} = {p}^{s * n}: {c} positive solutions")
