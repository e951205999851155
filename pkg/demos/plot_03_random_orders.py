"""
Antichains in random orders
===========================

Draw n points uniformly in the unit cube of dimension d + 1 and order them
coordinatewise.  The chance that no two are comparable equals the share of
d-tuples of permutations avoiding (12, ..., 12) in parallel.
"""

import math

from avoidance_lab import antichain_probability, count_tuple_avoiders, parse_tuple

for n in range(2, 6):
    exact = count_tuple_avoiders(parse_tuple("12|12"), n) / math.factorial(n) ** 2
    est = antichain_probability(2, n, 50_000, seed=1)
    print(f"n={n}: exact {exact:.5f}  estimate {est.estimate:.5f} +- {est.standard_error:.5f}")
