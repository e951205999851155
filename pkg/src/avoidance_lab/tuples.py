"""Parallel pattern avoidance for d-tuples of permutations.

A tuple (s_1, ..., s_d) of permutations of [n] contains a pattern tuple
(p_1, ..., p_d) of permutations of [m] when a single index set c_1 < ... < c_m
makes s_i(c_1) ... s_i(c_m) order-isomorphic to p_i in every coordinate at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

import numpy as np

from .core import Permutation, check_same_size, enumerate_permutations, parse_permutation
from .errors import ArityMismatch, BadParameter, IndexOutOfRange, MalformedText, ResourceLimit
from ._parallel import map_reduce

MAX_TUPLE_WORK = 10**8
MC_BLOCK = 4096


@dataclass(frozen=True)
class PermutationTuple:
    perms: tuple[Permutation, ...]

    def __post_init__(self):
        if len(self.perms) < 1:
            raise BadParameter("a permutation tuple needs d >= 1")
        check_same_size(self.perms)

    @classmethod
    def of(cls, *perms) -> PermutationTuple:
        return cls(tuple(p if isinstance(p, Permutation) else Permutation(tuple(p)) for p in perms))

    @property
    def d(self) -> int:
        return len(self.perms)

    @property
    def n(self) -> int:
        return self.perms[0].n

    def __iter__(self):
        return iter(self.perms)

    def __str__(self):
        return render_tuple(self)


@dataclass(frozen=True)
class MonteCarloEstimate:
    estimate: float
    samples: int
    hits: int
    standard_error: float
    seed: int


def parse_tuple(text: str) -> PermutationTuple:
    """Parse ``12|21``; each coordinate in digit-run or comma form."""
    parts = [p.strip() for p in text.strip().split("|")]
    if any(p == "" for p in parts):
        raise MalformedText(f"empty coordinate in {text!r}")
    return PermutationTuple(tuple(parse_permutation(p) for p in parts))


def render_tuple(t: PermutationTuple) -> str:
    return "|".join(str(p) for p in t.perms)


def _order_table(pattern: PermutationTuple) -> list[list[list[bool]]]:
    """less[i][a][b] is True when p_i(a) < p_i(b) (0-based positions)."""
    return [
        [[p.images[a] < p.images[b] for b in range(p.n)] for a in range(p.n)]
        for p in pattern.perms
    ]


def _consistent(rows: Sequence[Sequence[int]], less, a_host: int, b_host: int,
                a_pat: int, b_pat: int) -> bool:
    for row, lt in zip(rows, less):
        if (row[a_host] < row[b_host]) != lt[a_pat][b_pat]:
            return False
    return True


def _find_copy(rows: Sequence[Sequence[int]], length: int, less, m: int,
               last_at: int | None = None) -> bool:
    """Search indices c_1 < ... < c_m in the first ``length`` positions of ``rows``.

    With ``last_at`` the final index is pinned and the others precede it.
    """
    chosen: list[int] = []
    if last_at is not None:
        todo = m - 1
        limit = last_at
    else:
        todo = m
        limit = length

    def ok(pos: int, j: int) -> bool:
        for l, c in enumerate(chosen):
            if not _consistent(rows, less, c, pos, l, j):
                return False
        if last_at is not None and not _consistent(rows, less, pos, last_at, j, m - 1):
            return False
        return True

    def rec(j: int, start: int) -> bool:
        if j == todo:
            return True
        for pos in range(start, limit - (todo - j) + 1):
            if ok(pos, j):
                chosen.append(pos)
                if rec(j + 1, pos + 1):
                    return True
                chosen.pop()
        return False

    return rec(0, 0)


def contains_parallel(host: PermutationTuple, pattern: PermutationTuple) -> bool:
    if host.d != pattern.d:
        raise ArityMismatch(f"host arity {host.d} != pattern arity {pattern.d}")
    m = pattern.n
    if m > host.n:
        return False
    if m == 0:
        return True
    rows = [p.images for p in host.perms]
    return _find_copy(rows, host.n, _order_table(pattern), m)


# ---------------------------------------------------------------------------
# counting


def _count_from(task) -> int:
    """Count avoiding completions of a fixed tuple prefix.

    Positions are filled left to right in all coordinates at once; a branch is
    cut as soon as the newest position closes a parallel copy of the pattern,
    since any extension would still contain it.
    """
    pattern, n, prefix = task
    d = pattern.d
    m = pattern.n
    less = _order_table(pattern)
    rows = [list(col) + [0] * (n - len(col)) for col in prefix]
    used = [set(col) for col in prefix]

    def rec(j: int) -> int:
        if j == n:
            return 1
        total = 0
        choices = [[v for v in range(1, n + 1) if v not in used[i]] for i in range(d)]
        for combo in product(*choices):
            for i, v in enumerate(combo):
                rows[i][j] = v
            if j + 1 >= m and _find_copy(rows, j + 1, less, m, last_at=j):
                continue
            for i, v in enumerate(combo):
                used[i].add(v)
            total += rec(j + 1)
            for i, v in enumerate(combo):
                used[i].discard(v)
        return total

    start = len(prefix[0])
    # the fixed prefix was built by _tuple_prefixes and already avoids the pattern
    return rec(start)


def _tuple_prefixes(pattern: PermutationTuple, n: int, depth: int):
    """Avoiding prefixes over the first ``depth`` positions, in lexicographic order."""
    depth = min(depth, n)
    d = pattern.d
    m = pattern.n
    less = _order_table(pattern)
    out = []

    def rec(cols: list[list[int]]):
        j = len(cols[0])
        if j == depth:
            out.append(tuple(tuple(c) for c in cols))
            return
        choices = [[v for v in range(1, n + 1) if v not in c] for c in cols]
        for combo in product(*choices):
            nxt = [c + [v] for c, v in zip(cols, combo)]
            if j + 1 >= m and _find_copy(nxt, j + 1, less, m, last_at=j):
                continue
            rec(nxt)

    rec([[] for _ in range(d)])
    return out


def count_tuple_avoiders(pattern: PermutationTuple, n: int, threads: int = 1,
                         max_work: int = MAX_TUPLE_WORK) -> int:
    """S_n^d(pattern): d-tuples over S_n avoiding ``pattern`` in parallel."""
    if n < 0:
        raise BadParameter("n must be nonnegative")
    if math.factorial(n) ** pattern.d > max_work:
        raise ResourceLimit(f"n!^d = {math.factorial(n) ** pattern.d} exceeds {max_work}")
    if pattern.n == 0:
        return 0
    tasks = [(pattern, n, p) for p in _tuple_prefixes(pattern, n, 1 if pattern.d > 1 else 2)]
    return map_reduce(_count_from, tasks, threads, 0)


def iter_tuples(d: int, n: int) -> Iterator[PermutationTuple]:
    perms = list(enumerate_permutations(n))
    for combo in product(perms, repeat=d):
        yield PermutationTuple(combo)


def complement_at(t: PermutationTuple, i: int) -> PermutationTuple:
    """Replace coordinate ``i`` (1-based) by its complement v -> n+1-v."""
    if not 1 <= i <= t.d:
        raise IndexOutOfRange(f"coordinate {i} outside 1..{t.d}")
    perms = list(t.perms)
    perms[i - 1] = perms[i - 1].complement()
    return PermutationTuple(tuple(perms))


def inversion_set(p: Permutation) -> frozenset[tuple[int, int]]:
    """Position pairs (i, j), i < j, with p(i) > p(j)."""
    im = p.images
    return frozenset((i + 1, j + 1) for i, j in combinations(range(p.n), 2) if im[i] > im[j])


def weak_bruhat_leq(a: Permutation, b: Permutation) -> bool:
    """Weak order comparison by inclusion of inversion sets."""
    check_same_size([a, b])
    return inversion_set(a) <= inversion_set(b)


# ---------------------------------------------------------------------------
# Monte Carlo


def _block_rng(seed: int, block: int) -> np.random.Generator:
    # Philox is counter based: the (seed, block) key fixes the stream of each block
    key = seed % 2**64
    return np.random.Generator(np.random.Philox(key=key, counter=[0, 0, 0, block]))


def _antichain_hits(task) -> int:
    d, n, seed, block, size = task
    rng = _block_rng(seed, block)
    base = np.broadcast_to(np.arange(n), (size, d, n)).copy()
    perms = rng.permuted(base, axis=2)
    if n < 2:
        return size
    comparable = np.ones((size, n, n), dtype=bool)
    for c in range(d):
        row = perms[:, c, :]
        comparable &= row[:, :, None] < row[:, None, :]
    comparable &= np.triu(np.ones((n, n), dtype=bool), k=1)
    return int(np.count_nonzero(~comparable.any(axis=(1, 2))))


def antichain_probability(d: int, n: int, samples: int, seed: int,
                          threads: int = 1) -> MonteCarloEstimate:
    """Estimate q_d(n), the chance that d uniform permutations avoid (12, ..., 12).

    Sample j belongs to block j // 4096; each block draws from its own
    counter-based stream, so the estimate does not depend on ``threads``.
    """
    if d < 1 or n < 1 or samples < 1:
        raise BadParameter("d, n and samples must be positive")
    tasks = []
    for block, start in enumerate(range(0, samples, MC_BLOCK)):
        tasks.append((d, n, seed, block, min(MC_BLOCK, samples - start)))
    hits = map_reduce(_antichain_hits, tasks, threads, 0)
    p = hits / samples
    return MonteCarloEstimate(p, samples, hits, math.sqrt(p * (1 - p) / samples), seed)
