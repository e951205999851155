"""
Counting avoiders and reading off growth
========================================

B_n(123) counts partitions of [n] with every block of size at most two, so it
follows the involution numbers.  Their growth sits near n^(n/2), which is the
d = 2 regime.
"""

from avoidance_lab import classify_class, count_avoiders, growth_fit, parse_partition

pattern = parse_partition("123")
seq = [count_avoiders(pattern, n) for n in range(1, 12)]
print("B_n(123):", seq)

fit = growth_fit(seq)
print("raw alpha per n:", fit.per_n[-3:])
print("corrected alpha:", fit.corrected_final, "-> d_hint", fit.d_hint)
print("class of 123-avoiders:", classify_class(["123"]).to_dict())

###############################################################################
# Two blocks at most: the count doubles each step, so the hint is the
# exponential regime.

two = [count_avoiders(parse_partition("1/2/3"), n) for n in range(1, 12)]
print("B_n(1/2/3):", two, "d_hint", growth_fit(two).d_hint)
