"""
Set partitions and containment
==============================

A set partition of [n] is written block by block, blocks separated by ``/``.
One partition contains another when some subset of its ground set, relabelled
in order, carries the same block structure.
"""

from avoidance_lab import contains_partition, parse_partition, permutability, render, restrict

host = parse_partition("136/45/27")
print("host:", render(host))

# keep 2, 3, 6, 7 and relabel them 1..4
print("restricted to {2,3,6,7}:", render(restrict(host, [2, 3, 6, 7])))
print("contains 14/23:", contains_partition(host, parse_partition("14/23")))
print("contains 1/234:", contains_partition(host, parse_partition("1/234")))

###############################################################################
# Permutability counts how many permutations it takes to build a partition.
# Partitions made only of singletons need none; a block of size three needs two.

for text in ["1/2/3", "14/23", "13/24", "123", "1356/24"]:
    print(f"pm({text}) = {permutability(parse_partition(text))}")
