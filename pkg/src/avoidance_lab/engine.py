"""Avoidance counts B_n(pi), growth diagnostics, lower-bound certificates, class regimes."""

from __future__ import annotations

import json
import math
import os
import random
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .core import (
    SetPartition,
    _embeds,
    bell,
    contains_partition,
    enumerate_partitions,
    iter_rgfs,
    parse_partition,
    render,
)
from .errors import BadParameter, NonPositiveTerm, ResourceLimit
from .permutability import correspondent_partition, permutability
from .tuples import iter_tuples, PermutationTuple
from .core import Permutation
from ._parallel import map_reduce

ENGINE_VERSION = "1"
MAX_COUNT_N = 12
NAIVE_MAX_N = 10
CACHE_ENV = "AVOIDANCE_LAB_CACHE"
KINDS = ("partition_avoiders", "partition_avoiders_no_singletons", "tuple_avoiders", "bell")


# ---------------------------------------------------------------------------
# exact counting


def _avoiding_completions(task) -> int:
    pat, n, no_singletons, prefix = task
    k = len(pat)
    rgf = list(prefix) + [0] * (n - len(prefix))
    sizes: list[int] = []
    for b in prefix:
        if b == len(sizes):
            sizes.append(0)
        sizes[b] += 1
    singles = sum(1 for s in sizes if s == 1)

    def rec(j: int, singles: int) -> int:
        if no_singletons and singles > n - j:
            return 0
        if j == n:
            return 1 if not (no_singletons and singles) else 0
        total = 0
        for b in range(len(sizes) + 1):
            rgf[j] = b
            if j + 1 >= k and _embeds(rgf, j + 1, pat, k, last_at=j):
                continue
            if b == len(sizes):
                sizes.append(1)
                total += rec(j + 1, singles + 1)
                sizes.pop()
            else:
                sizes[b] += 1
                total += rec(j + 1, singles - (sizes[b] == 2))
                sizes[b] -= 1
        return total

    return rec(len(prefix), singles)


def _avoiding_prefixes(pat: Sequence[int], n: int, depth: int) -> list[tuple[int, ...]]:
    k = len(pat)
    out = []
    for rgf in iter_rgfs(min(depth, n)):
        if not any(_embeds(rgf, j + 1, pat, k, last_at=j) for j in range(k - 1, len(rgf))):
            out.append(rgf)
    return out


def count_avoiders(pattern: SetPartition, n: int, no_singletons: bool = False,
                   threads: int = 1, max_n: int = MAX_COUNT_N) -> int:
    """B_n(pattern), or B'_n(pattern) when ``no_singletons`` is set.

    Restricted growth strings are extended one element at a time, and a prefix
    is abandoned as soon as its newest element completes a copy of the pattern.
    This is sound because a partition containing the pattern on its first m
    elements contains it on all n.
    """
    if n < 0:
        raise BadParameter("n must be nonnegative")
    if n > max_n:
        raise ResourceLimit(f"n={n} exceeds the counting guard {max_n}")
    if pattern.n == 0:
        return 0
    pat = pattern.rgf
    tasks = [(pat, n, no_singletons, p) for p in _avoiding_prefixes(pat, n, 5)]
    return map_reduce(_avoiding_completions, tasks, threads, 0)


def count_avoiders_naive(pattern: SetPartition, n: int, no_singletons: bool = False,
                         max_n: int = NAIVE_MAX_N) -> int:
    """Filter every partition of [n] through :func:`contains_partition`."""
    if n > max_n:
        raise ResourceLimit(f"naive count limited to n <= {max_n}")
    return sum(
        1
        for pi in enumerate_partitions(n)
        if not (no_singletons and 1 in pi.block_sizes()) and not contains_partition(pi, pattern)
    )


# ---------------------------------------------------------------------------
# records and cache


@dataclass(frozen=True)
class CountRecord:
    kind: str
    pattern: str
    n: int
    value: int
    engine_version: str = ENGINE_VERSION

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> CountRecord:
        return cls(**json.loads(line))


class CountCache:
    """Append-only JSON-lines store of :class:`CountRecord` values.

    Records written by another engine version are ignored on load.
    """

    filename = "counts.jsonl"

    def __init__(self, directory: str | os.PathLike):
        self.path = Path(directory) / self.filename
        self._entries: dict[tuple[str, str, int], int] = {}
        if self.path.exists():
            for line in self.path.read_text(encoding="utf-8").splitlines():
                if not line.strip():
                    continue
                try:
                    rec = CountRecord.from_json(line)
                except (ValueError, TypeError):
                    continue
                if rec.engine_version == ENGINE_VERSION:
                    self._entries[(rec.kind, rec.pattern, rec.n)] = rec.value

    @classmethod
    def from_env(cls, directory: str | None = None) -> CountCache | None:
        directory = directory or os.environ.get(CACHE_ENV)
        return cls(directory) if directory else None

    def get(self, kind: str, pattern: str, n: int) -> int | None:
        return self._entries.get((kind, pattern, n))

    def put(self, record: CountRecord):
        key = (record.kind, record.pattern, record.n)
        if key in self._entries:
            return
        self._entries[key] = record.value
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(record.to_json() + "\n")

    def __len__(self):
        return len(self._entries)


def cached_count(pattern: SetPartition, n: int, no_singletons: bool = False,
                 cache: CountCache | None = None, threads: int = 1) -> CountRecord:
    kind = "partition_avoiders_no_singletons" if no_singletons else "partition_avoiders"
    text = render(pattern)
    value = cache.get(kind, text, n) if cache is not None else None
    if value is None:
        value = count_avoiders(pattern, n, no_singletons=no_singletons, threads=threads)
    record = CountRecord(kind, text, n, value)
    if cache is not None:
        cache.put(record)
    return record


def avoidance_sequence(pattern: SetPartition, n_max: int, cache: CountCache | None = None,
                       no_singletons: bool = False, threads: int = 1) -> list[CountRecord]:
    """Records for n = 1..n_max."""
    return [cached_count(pattern, n, no_singletons, cache, threads) for n in range(1, n_max + 1)]


# ---------------------------------------------------------------------------
# growth diagnostics


def _step(n: int) -> float:
    """n ln n - (n-1) ln(n-1): the first difference of ln n^n."""
    return n * math.log(n) - ((n - 1) * math.log(n - 1) if n > 1 else 0.0)


def _corrected(logs: dict[int, float], n: int) -> float | None:
    """Exponent estimate from second differences, blind to any c^n factor."""
    if n - 2 not in logs or n < 3:
        return None
    second = logs[n] - 2 * logs[n - 1] + logs[n - 2]
    return second / (_step(n) - _step(n - 1))


@dataclass
class GrowthEstimate:
    """Per-n estimates of alpha in a_n ~ c^n n^(alpha n).

    ``per_n`` holds (ln a_n - ln a_(n-1)) / ln n.  That ratio still carries
    (ln c + alpha) / ln n from the exponential factor, so ``d_hint`` is taken
    from ``corrected``, the second-difference estimate in which ln c cancels.
    """

    per_n: list[tuple[int, float]]
    final: float
    corrected: list[tuple[int, float]] = field(default_factory=list)
    d_hint: int | str = 1

    @property
    def corrected_final(self) -> float | None:
        return self.corrected[-1][1] if self.corrected else None

    def to_dict(self) -> dict:
        return {
            "per_n": [[n, a] for n, a in self.per_n],
            "final": self.final,
            "corrected": [[n, a] for n, a in self.corrected],
            "d_hint": self.d_hint,
        }


def _bell_logs(n_max: int) -> dict[int, float]:
    return {n: math.log(bell(n)) for n in range(0, n_max + 1)}


def _hint(alpha: float, n: int) -> int | str:
    """Nearest of 1 - 1/d (d = 1..8), with the Bell regime as an extra candidate.

    The Bell candidate is the same estimator applied to the Bell numbers at the
    same n, because at desk scale Bell growth sits well below exponent 1.
    """
    bell_ref = _corrected(_bell_logs(n), n) if n >= 3 else 1.0
    if alpha > 1 - 1 / 8 or alpha >= bell_ref:
        return "bell"
    best_d, best_gap = 1, abs(alpha)
    for d in range(2, 9):
        gap = abs(alpha - (1 - 1 / d))
        if gap < best_gap:
            best_d, best_gap = d, gap
    if abs(alpha - bell_ref) < best_gap:
        return "bell"
    return best_d


def growth_fit(seq: Sequence[int], start: int = 1) -> GrowthEstimate:
    """Fit the super-exponential exponent of a counting sequence a_start, a_start+1, ..."""
    if len(seq) < 2:
        raise BadParameter("growth_fit needs at least two terms")
    if any(v <= 0 for v in seq):
        raise NonPositiveTerm("all terms must be positive")
    logs = {start + i: math.log(v) for i, v in enumerate(seq)}
    per_n = []
    corrected = []
    for n in sorted(logs):
        if n < 2 or n - 1 not in logs:
            continue
        per_n.append((n, round((logs[n] - logs[n - 1]) / math.log(n), 4)))
        c = _corrected(logs, n)
        if c is not None:
            corrected.append((n, round(c, 4)))
    if not per_n:
        raise BadParameter("need terms at n >= 2")
    top = max(logs)
    basis = _corrected(logs, top)
    if basis is None:
        basis = per_n[-1][1]
    return GrowthEstimate(per_n, per_n[-1][1], corrected, _hint(basis, top))


# ---------------------------------------------------------------------------
# lower bound certificate


@dataclass
class LowerBoundCertificate:
    pattern: str
    d: int
    m: int
    certified_count: int
    verified_samples: int
    exhaustive: bool

    def to_dict(self) -> dict:
        return asdict(self)


def lower_bound_certificate(pattern: SetPartition, n: int, seed: int = 0,
                            exhaustive_limit: int = 10**4,
                            samples: int = 10**3) -> LowerBoundCertificate:
    """Check that every [s_1, ..., s_(d-1)] over S_(n/d) avoids the pattern.

    Singleton blocks are stripped first; they do not change permutability.
    Each such correspondent partition is a partition of [n] with no singleton
    blocks, so (n/d)!^(d-1) bounds B'_n from below.
    """
    core = pattern.without_singletons()
    d = permutability(core)
    if d < 2:
        raise BadParameter(f"certificate needs permutability >= 2, got {d}")
    if n % d:
        raise BadParameter(f"d={d} does not divide n={n}")
    m = n // d
    total = math.factorial(m) ** (d - 1)
    if total <= exhaustive_limit:
        witnesses: Iterable[PermutationTuple] = iter_tuples(d - 1, m)
        exhaustive = True
    else:
        rng = random.Random(seed)

        def sampled():
            for _ in range(samples):
                yield PermutationTuple(tuple(
                    Permutation(tuple(rng.sample(range(1, m + 1), m))) for _ in range(d - 1)
                ))

        witnesses = sampled()
        exhaustive = False
    checked = 0
    for t in witnesses:
        host = correspondent_partition(t)
        if contains_partition(host, core):
            raise AssertionError(f"{render(host)} contains {render(core)}")
        checked += 1
    return LowerBoundCertificate(render(core), d, m, total, checked, exhaustive)


# ---------------------------------------------------------------------------
# pattern classes


@dataclass(frozen=True)
class Classification:
    regime: str
    d: int | None = None

    @property
    def exponent(self) -> float | None:
        return 1 - 1 / self.d if self.regime == "superexp" else None

    def to_dict(self) -> dict:
        return {"regime": self.regime, "d": self.d, "exponent": self.exponent}


def classify_class(basis: Iterable[SetPartition | str]) -> Classification:
    """Growth regime of the class of partitions avoiding every basis element."""
    basis = [parse_partition(b) if isinstance(b, str) else b for b in basis]
    if not basis:
        return Classification("bell")
    if any(b.n <= 1 for b in basis):
        return Classification("eventually_zero")
    d = min(permutability(b) for b in basis)
    if d <= 1:
        return Classification("exponential", d)
    return Classification("superexp", d)
