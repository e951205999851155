"""Permutability of set partitions and correspondent partitions of permutation tuples.

The permutability pm(pi) is the least d such that some correspondent partition
[s_1, ..., s_d] contains pi.  It is computed through interval covers: split [n]
into consecutive intervals so that no block has two elements in one interval.
pm(pi) + 1 is the least number of intervals in such a cover.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .core import (
    MAX_ENUM_N,
    Permutation,
    SetPartition,
    check_same_size,
    iter_rgfs,
    standardize,
)
from .errors import BadParameter, ResourceLimit
from ._parallel import map_reduce

ORACLE_MAX_N = 10


@dataclass(frozen=True)
class IntervalCover:
    """Consecutive intervals of [n]; ``boundaries`` holds the last element of each."""

    boundaries: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.boundaries)

    def intervals(self) -> list[tuple[int, int]]:
        out = []
        start = 1
        for end in self.boundaries:
            out.append((start, end))
            start = end + 1
        return out

    def is_valid_for(self, pi: SetPartition) -> bool:
        rgf = pi.rgf
        for lo, hi in self.intervals():
            blocks = rgf[lo - 1:hi]
            if len(set(blocks)) != len(blocks):
                return False
        return True

    def __str__(self):
        return "|".join(
            ",".join(str(x) for x in range(lo, hi + 1)) for lo, hi in self.intervals()
        )


def min_interval_cover(pi: SetPartition) -> tuple[int, IntervalCover]:
    """Greedy minimum valid interval cover, each interval extended as far as possible."""
    if pi.n == 0:
        return 0, IntervalCover(())
    ends = []
    current: set[int] = set()
    for pos, b in enumerate(pi.rgf, start=1):
        if b in current:
            ends.append(pos - 1)
            current = set()
        current.add(b)
    ends.append(pi.n)
    cover = IntervalCover(tuple(ends))
    return cover.count, cover


def permutability(pi: SetPartition) -> int:
    if pi.n == 0:
        return 0
    return min_interval_cover(pi)[0] - 1


def permutability_oracle(pi: SetPartition, max_n: int = ORACLE_MAX_N) -> int:
    """Exhaustive minimum over all 2^(n-1) interval compositions of [n]."""
    n = pi.n
    if n > max_n:
        raise ResourceLimit(f"oracle limited to n <= {max_n}")
    if n == 0:
        return 0
    best = n
    for cuts in product((False, True), repeat=n - 1):
        ends = tuple(i + 1 for i, c in enumerate(cuts) if c) + (n,)
        cover = IntervalCover(ends)
        if cover.count - 1 < best and cover.is_valid_for(pi):
            best = cover.count - 1
    return best


def correspondent_partition(perms: Sequence[Permutation]) -> SetPartition:
    """The partition [s_1, ..., s_d] of [(d+1)m] with blocks {i, m+s_1(i), ..., dm+s_d(i)}."""
    perms = list(getattr(perms, "perms", perms))
    if not perms:
        raise BadParameter("need at least one permutation")
    check_same_size(perms)
    m = perms[0].n
    blocks = [
        [i] + [j * m + p.images[i - 1] for j, p in enumerate(perms, start=1)]
        for i in range(1, m + 1)
    ]
    return standardize(blocks)


def is_srp(pi: SetPartition) -> bool:
    return permutability(pi) <= 1


def _pm_counts(task) -> Counter:
    n, prefix = task
    counts: Counter = Counter()
    for rgf in iter_rgfs(n, prefix):
        counts[permutability(SetPartition.from_rgf(rgf))] += 1
    return counts


def rgf_prefixes(n: int, depth: int) -> list[tuple[int, ...]]:
    """All RGF prefixes of length ``min(depth, n)``, in lex order."""
    return list(iter_rgfs(min(depth, n)))


def pm_distribution(n: int, threads: int = 1, max_n: int = MAX_ENUM_N) -> list[tuple[int, int]]:
    """Counts of partitions of [n] by permutability, sorted by d."""
    if n < 1:
        raise BadParameter("n must be positive")
    if n > max_n:
        raise ResourceLimit(f"n={n} exceeds the enumeration guard {max_n}")
    tasks = [(n, p) for p in rgf_prefixes(n, 4)]
    total = map_reduce(_pm_counts, tasks, threads, Counter())
    return sorted(total.items())
