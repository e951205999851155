"""Brute-force reference implementations used only by the tests.

Nothing here imports the package's search code; each function restates a
definition directly and enumerates everything.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import comb


def partitions_of(elems):
    """All set partitions of a list, as lists of frozensets (recursive insertion)."""
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for part in partitions_of(rest):
        yield [frozenset({first})] + part
        for i in range(len(part)):
            yield part[:i] + [part[i] | {first}] + part[i + 1:]


def canon(blocks):
    """Canonical form of a partition given as an iterable of sets of integers."""
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def order_iso_restriction(blocks, subset):
    """Restrict a partition to ``subset`` and relabel order-isomorphically."""
    subset = sorted(subset)
    rank = {x: i + 1 for i, x in enumerate(subset)}
    out = []
    for b in blocks:
        kept = [rank[x] for x in b if x in rank]
        if kept:
            out.append(kept)
    return canon(out)


def brute_contains(host_blocks, pattern_blocks):
    n = sum(len(b) for b in host_blocks)
    k = sum(len(b) for b in pattern_blocks)
    target = canon(pattern_blocks)
    return any(order_iso_restriction(host_blocks, s) == target
               for s in combinations(range(1, n + 1), k))


def involutions(n):
    a, b = 1, 1  # I(0), I(1)
    if n == 0:
        return 1
    for m in range(2, n + 1):
        a, b = b, b + (m - 1) * a
    return b


def stirling2(n, k):
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k]


def order_pattern(values):
    s = sorted(values)
    return tuple(s.index(v) + 1 for v in values)


def classical_avoiders(pattern, n):
    """Permutations of [n] avoiding ``pattern`` by checking every index subset."""
    m = len(pattern)
    pattern = tuple(pattern)
    return sum(
        1
        for p in permutations(range(1, n + 1))
        if not any(order_pattern([p[i] for i in idx]) == pattern
                   for idx in combinations(range(n), m))
    )


def brute_parallel_contains(host, pattern):
    """host, pattern: tuples of one-line permutations (tuples of ints)."""
    n, m = len(host[0]), len(pattern[0])
    return any(
        all(order_pattern([h[i] for i in idx]) == tuple(p) for h, p in zip(host, pattern))
        for idx in combinations(range(n), m)
    )


def position_inversions(p):
    return {(i, j) for i, j in combinations(range(len(p)), 2) if p[i] > p[j]}


def weak_comparable_pairs(n):
    """Ordered pairs (a, b) of permutations of [n] with Inv(a) a subset of Inv(b)."""
    perms = list(permutations(range(1, n + 1)))
    invs = [position_inversions(p) for p in perms]
    return sum(1 for a in invs for b in invs if a <= b)


def min_cover_exhaustive(rgf):
    """Least number of consecutive intervals with no block repeated in an interval."""
    n = len(rgf)
    best = None
    for cuts in product((0, 1), repeat=max(n - 1, 0)):
        pieces, cur = [], [rgf[0]]
        for i, c in enumerate(cuts, start=1):
            if c:
                pieces.append(cur)
                cur = []
            cur.append(rgf[i])
        pieces.append(cur)
        if all(len(set(p)) == len(p) for p in pieces):
            best = len(pieces) if best is None else min(best, len(pieces))
    return best


def brute_hyper_contains(g_n, g_edges, h_n, h_edges):
    """Try every order-preserving vertex map and every edge injection."""
    g_edges = [frozenset(e) for e in g_edges]
    for image in combinations(range(1, g_n + 1), h_n):
        f = dict(zip(range(1, h_n + 1), image))
        mapped = [frozenset(f[v] for v in e) for e in h_edges]
        for target in permutations(range(len(g_edges)), len(mapped)):
            if all(m <= g_edges[t] for m, t in zip(mapped, target)):
                return True
    return False


def max_weight_exhaustive(h_n, h_edges, n):
    """Best weight over every edge subset of the nonempty subsets of [n]."""
    universe = [c for size in range(1, n + 1) for c in combinations(range(1, n + 1), size)]
    best = -1
    for mask in range(1 << len(universe)):
        edges = [universe[i] for i in range(len(universe)) if mask >> i & 1]
        w = sum(map(len, edges))
        if w > best and not brute_hyper_contains(n, edges, h_n, h_edges):
            best = w
    return best


def binomial(n, k):
    return comb(n, k)
