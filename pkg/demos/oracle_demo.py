"""
Exact counting
==============

Two engines count ordered solutions of sum x_i^n = d: a depth-first search
over non-increasing tuples weighted by multinomials, and a convolution
table giving every d at once.  A third, independent enumeration checks both.
"""

import time
from math import comb

from phicert import Mode, count_solutions, count_table
from phicert.oracle import enumerate_counts, iter_solutions

print(list(iter_solutions(2, 2, 25)))

t0 = time.perf_counter()
print("P_7(73728) for fourth powers:", count_solutions(4, 7, 73728, method="table").count,
      f"({time.perf_counter() - t0:.2f}s)")
t0 = time.perf_counter()
print("sums of three squares equal to 10^7:", count_solutions(2, 3, 10**7).count,
      f"({time.perf_counter() - t0:.2f}s)")

# agreement of the engines on a whole range
n, m, d_max = 3, 4, 10**4
table = count_table(n, m, d_max)
assert enumerate_counts(n, m, d_max) == table[m].tolist()
print(f"\nenumeration == table for n={n}, m={m}, d <= {d_max}")

# nonnegative counts split by the number of nonzero entries
nat = count_table(n, m, d_max, Mode.NATURAL)
assert all(table[m][d] == sum(comb(m, j) * nat[j][d] for j in range(m + 1)) for d in range(d_max + 1))
print("P_m(d) = sum_j C(m, j) P'_j(d) holds on the same range")

# how many d <= 10^4 are sums of four cubes
print("d <= 10^4 not a sum of four nonnegative cubes:", int((table[4] == 0).sum()))
