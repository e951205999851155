"""Set partitions and permutations, Klazar containment, and exhaustive generation.

A set partition of [n] is stored in standard form: every block is increasing and
blocks are ordered by their minima.  Alongside the blocks we keep the restricted
growth string (element i -> index of its block), which makes same-block queries
O(1) and gives a natural lexicographic enumeration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    MalformedText,
    NotAPartition,
    NotAPermutation,
    OutOfRange,
    ResourceLimit,
    SizeMismatch,
)

MAX_ENUM_N = 14


@dataclass(frozen=True)
class SetPartition:
    """A set partition of [n] in standard form.

    Use :func:`standardize`, :func:`parse_partition` or :meth:`from_rgf` to build
    one from arbitrary input; the constructor only validates.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = []
        prev_min = 0
        for block in self.blocks:
            if not block:
                raise NotAPartition("empty block")
            if any(a >= b for a, b in zip(block, block[1:])):
                raise NotAPartition(f"block {block} is not strictly increasing")
            if block[0] <= prev_min:
                raise NotAPartition("blocks are not ordered by their minima")
            prev_min = block[0]
            seen.extend(block)
        if sorted(seen) != list(range(1, self.n + 1)):
            raise NotAPartition(f"blocks do not cover 1..{self.n} exactly once")

    @classmethod
    def from_rgf(cls, rgf: Sequence[int]) -> SetPartition:
        """Build from a 0-based restricted growth string."""
        blocks: list[list[int]] = []
        for i, b in enumerate(rgf, start=1):
            if b == len(blocks):
                blocks.append([i])
            elif 0 <= b < len(blocks):
                blocks[b].append(i)
            else:
                raise NotAPartition(f"{list(rgf)} is not a restricted growth string")
        return cls(len(rgf), tuple(tuple(b) for b in blocks))

    @cached_property
    def rgf(self) -> tuple[int, ...]:
        out = [0] * self.n
        for idx, block in enumerate(self.blocks):
            for x in block:
                out[x - 1] = idx
        return tuple(out)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def without_singletons(self) -> SetPartition:
        """Drop one-element blocks and relabel the remaining elements."""
        keep = [x for b in self.blocks if len(b) > 1 for x in b]
        return restrict(self, sorted(keep))

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation (1-based images)."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise NotAPermutation(f"{self.images} is not a permutation")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self):
        return len(self.images)

    def inverse(self) -> Permutation:
        out = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            out[v - 1] = i
        return Permutation(tuple(out))

    def complement(self) -> Permutation:
        return Permutation(tuple(self.n + 1 - v for v in self.images))

    def __str__(self):
        return _render_ints(self.images, self.n)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))


# ---------------------------------------------------------------------------
# text formats


def _render_ints(values: Sequence[int], n: int) -> str:
    if n <= 9:
        return "".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


def render(pi: SetPartition) -> str:
    """Standard-form text: digit runs when n <= 9, comma lists otherwise."""
    return "/".join(_render_ints(b, pi.n) for b in pi.blocks)


def _parse_int(token: str, text: str) -> int:
    if not token.isdigit():
        raise MalformedText(f"bad element {token!r} in {text!r}")
    return int(token)


def _split_tokens(text: str, sep: str) -> list[str]:
    parts = [p.strip() for p in text.split(sep)]
    if any(p == "" for p in parts):
        raise MalformedText(f"empty component in {text!r}")
    return parts


def parse_partition(text: str) -> SetPartition:
    """Parse ``1356/24`` or ``1,10/2,3,4,5,6,7,8,9`` into standard form.

    Without any comma every block is read as a run of single digits, which is
    legal only for n <= 9.  A comma anywhere switches every block to comma form.
    The all-singletons partition with n >= 10 has no commas at all
    (``1/2/.../10``), so digit-run failure falls back to reading each block as
    one integer.
    """
    text = text.strip()
    if text == "":
        return SetPartition(0, ())
    if any(c not in "0123456789,/ " for c in text):
        raise MalformedText(f"unexpected character in {text!r}")
    parts = _split_tokens(text, "/")
    if "," in text:
        blocks = [[_parse_int(t, text) for t in _split_tokens(p, ",")] for p in parts]
        return standardize(blocks)
    digits = [[int(c) for c in p] for p in parts]
    n = sum(len(b) for b in digits)
    if n <= 9 and all(0 not in b for b in digits):
        return standardize(digits)
    # only the all-singletons partition can be written without commas at n >= 10
    return standardize([[_parse_int(p, text)] for p in parts])


def parse_permutation(text: str) -> Permutation:
    """Parse ``312`` (n <= 9) or ``3,1,2``."""
    text = text.strip()
    if text == "":
        return Permutation(())
    if "," in text:
        values = [_parse_int(t, text) for t in _split_tokens(text, ",")]
    else:
        if not text.isdigit():
            raise MalformedText(f"bad permutation {text!r}")
        values = [int(c) for c in text]
        if len(values) > 9:
            raise MalformedText(f"digit form needs n <= 9: {text!r}")
    return Permutation(tuple(values))


# ---------------------------------------------------------------------------
# construction and restriction


def standardize(blocks: Iterable[Iterable[int]]) -> SetPartition:
    """Sort each block, then order blocks by their minima."""
    sorted_blocks = [tuple(sorted(b)) for b in blocks]
    if any(len(b) == 0 for b in sorted_blocks):
        raise NotAPartition("empty block")
    sorted_blocks.sort(key=lambda b: b[0])
    n = sum(len(b) for b in sorted_blocks)
    return SetPartition(n, tuple(sorted_blocks))


def restrict(pi: SetPartition, subset: Iterable[int]) -> SetPartition:
    """Pullback of ``pi`` along the order-preserving injection onto ``subset``."""
    elems = sorted(set(subset))
    if any(x < 1 or x > pi.n for x in elems):
        raise OutOfRange(f"subset {elems} not inside [1..{pi.n}]")
    rgf = pi.rgf
    relabel: dict[int, int] = {}
    out = []
    for x in elems:
        b = rgf[x - 1]
        if b not in relabel:
            relabel[b] = len(relabel)
        out.append(relabel[b])
    return SetPartition.from_rgf(out)


def is_layered(pi: SetPartition) -> bool:
    return all(b[-1] - b[0] == len(b) - 1 for b in pi.blocks)


# ---------------------------------------------------------------------------
# containment


def _embeds(host: Sequence[int], n_host: int, pat: Sequence[int], k: int,
            last_at: int | None = None) -> bool:
    """Search for an order-preserving embedding of RGF ``pat`` into RGF ``host``.

    Pattern elements are placed left to right on increasing host positions
    while keeping the pattern-block -> host-block map injective.  With
    ``last_at`` set, the last pattern element is pinned to that host position
    and the rest must land strictly before it.
    """
    pmap: dict[int, int] = {}
    used: dict[int, int] = {}
    limit = n_host
    todo = k
    if last_at is not None:
        pmap[pat[k - 1]] = host[last_at]
        used[host[last_at]] = pat[k - 1]
        limit = last_at
        todo = k - 1

    def place(i: int, start: int) -> bool:
        if i == todo:
            return True
        pb = pat[i]
        target = pmap.get(pb)
        for pos in range(start, limit - (todo - i) + 1):
            hb = host[pos]
            if target is not None:
                if hb == target and place(i + 1, pos + 1):
                    return True
            elif hb not in used:
                pmap[pb] = hb
                used[hb] = pb
                if place(i + 1, pos + 1):
                    return True
                del pmap[pb]
                del used[hb]
        return False

    return place(0, 0)


def contains_partition(host: SetPartition, pattern: SetPartition) -> bool:
    """True iff some restriction of ``host`` standardizes to ``pattern``."""
    k = pattern.n
    if k > host.n:
        return False
    if k == 0:
        return True
    if pattern.num_blocks > host.num_blocks:
        return False
    if max(pattern.block_sizes()) > max(host.block_sizes()):
        return False
    return _embeds(host.rgf, host.n, pattern.rgf, k)


# ---------------------------------------------------------------------------
# enumeration


def _check_guard(n: int, max_n: int):
    if n < 0:
        raise OutOfRange(f"n must be nonnegative, got {n}")
    if n > max_n:
        raise ResourceLimit(f"n={n} exceeds the enumeration guard {max_n}")


def iter_rgfs(n: int, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``n`` extending ``prefix``, in lex order."""
    rgf = list(prefix)
    top = max(rgf, default=-1)

    def rec(top: int) -> Iterator[tuple[int, ...]]:
        if len(rgf) == n:
            yield tuple(rgf)
            return
        for b in range(top + 2):
            rgf.append(b)
            yield from rec(max(top, b))
            rgf.pop()

    yield from rec(top)


def enumerate_partitions(n: int, max_n: int = MAX_ENUM_N) -> Iterator[SetPartition]:
    """Every set partition of [n], ordered lexicographically by RGF."""
    _check_guard(n, max_n)
    for rgf in iter_rgfs(n):
        yield SetPartition.from_rgf(rgf)


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    from itertools import permutations

    for p in permutations(range(1, n + 1)):
        yield Permutation(p)


def bell(n: int) -> int:
    """Bell number via the Bell triangle."""
    if n < 0:
        raise OutOfRange(f"n must be nonnegative, got {n}")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def check_same_size(perms: Sequence[Permutation]):
    sizes = {p.n for p in perms}
    if len(sizes) > 1:
        raise SizeMismatch(f"permutations of unequal sizes {sorted(sizes)}")
