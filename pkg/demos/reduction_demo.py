"""
Stripping phi-divisor powers from the right-hand side
=====================================================

A prime p is a phi-divisor of n when phi(p^k) divides n for some p^k >= 3.
If m <= p^k - 1 (k maximal), every solution of sum x_i^n = N with p^n | N
has all x_i divisible by p, so dividing N by p^n keeps the count.
"""

from phicert import Equation, all_phi_divisors, count_solutions, reduce_equation, reduce_rhs

# phi-divisors of a few exponents
for n in (2, 4, 6, 12, 120):
    print(n, [d.as_tuple() for d in all_phi_divisors(n)])

# 73728 = 18 * 2^12; for n = 4 the prime 2 has degree 3, so up to 7 terms
N, trace = reduce_rhs(4, 7, 73728)
print(f"\n73728 -> {N}")
for d, s in trace.steps:
    print(f"  removed ({d.p}^4)^{s}")
print("count at 73728:", count_solutions(4, 7, 73728).count)
print("count at 18:   ", count_solutions(4, 7, N).count)

# the b * c^n form: c = 6 with n = 2, m = 2 strips both 2 and 3
t = reduce_equation(Equation(2, 2, 3, 6))
print(f"\n{t.original} -> {t.reduced}")

# with m = 3 the prime 3 is no longer eligible (3^1 - 1 = 2 < 3), and the
# count really does change
print("\nm=3, n=2: P(9) =", count_solutions(2, 3, 9).count, " P(1) =", count_solutions(2, 3, 1).count)
