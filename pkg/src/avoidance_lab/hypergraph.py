"""Ordered hypergraphs: containment, projections, contraction and extremal search.

G contains H when there is an order-preserving injection V(H) -> V(G) together
with an injection E(H) -> E(G) such that every vertex of an H-edge lands in the
image edge.  The image edge may have extra vertices.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .core import SetPartition, enumerate_permutations
from .errors import BadIndexSet, BadParameter, MalformedText, NotUniform, ResourceLimit

MAX_PERM_HYPERGRAPHS = 10**6
MAX_SEARCH_N = 10


@dataclass(frozen=True)
class OrderedHypergraph:
    """Simple hypergraph on vertices 1..n with canonically sorted edges."""

    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for e in self.edges:
            if not e:
                raise BadParameter("edges must be nonempty")
            if any(a >= b for a, b in zip(e, e[1:])):
                raise BadParameter(f"edge {e} is not strictly increasing")
            if e[0] < 1 or e[-1] > self.n:
                raise BadParameter(f"edge {e} leaves [1..{self.n}]")
        if list(self.edges) != sorted(set(self.edges)):
            raise BadParameter("edges must be distinct and canonically sorted")

    @classmethod
    def make(cls, edges: Iterable[Iterable[int]], n: int | None = None) -> OrderedHypergraph:
        """Canonicalize arbitrary edge input; ``n`` defaults to the largest vertex."""
        canon = sorted({tuple(sorted(set(e))) for e in edges})
        if n is None:
            n = max((e[-1] for e in canon if e), default=0)
        return cls(n, tuple(canon))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def weight(self) -> int:
        return weight(self)

    def __str__(self):
        return render_hypergraph(self)


@dataclass
class MaxWeightResult:
    best: OrderedHypergraph
    weight: int
    exact: bool
    nodes: int = 0


def parse_hypergraph(text: str) -> OrderedHypergraph:
    """Parse ``1,4;2,5,6;3`` with an optional ``@n`` vertex-count suffix."""
    text = text.strip()
    n = None
    if "@" in text:
        text, _, tail = text.partition("@")
        if not tail.strip().isdigit():
            raise MalformedText(f"bad vertex count {tail!r}")
        n = int(tail)
    text = text.strip()
    edges = []
    if text:
        for part in text.split(";"):
            tokens = [t.strip() for t in part.split(",")]
            if any(not t.isdigit() for t in tokens):
                raise MalformedText(f"bad edge {part!r}")
            edges.append([int(t) for t in tokens])
    if any(v < 1 for e in edges for v in e):
        raise MalformedText("vertices are numbered from 1")
    top = max((v for e in edges for v in e), default=0)
    if n is not None and n < top:
        raise MalformedText(f"vertex count {n} is below the largest vertex {top}")
    return OrderedHypergraph.make(edges, n)


def render_hypergraph(g: OrderedHypergraph) -> str:
    body = ";".join(",".join(str(v) for v in e) for e in g.edges)
    top = max((e[-1] for e in g.edges), default=0)
    return body if g.n == top else f"{body}@{g.n}"


def weight(g: OrderedHypergraph) -> int:
    """Sum of edge sizes, i(G)."""
    return sum(len(e) for e in g.edges)


# ---------------------------------------------------------------------------
# containment


def _has_matching(cands: Sequence[int], n_right: int) -> bool:
    """Kuhn's augmenting paths on bitmask adjacency lists."""
    owner = [-1] * n_right

    def augment(u: int, seen: list[bool]) -> bool:
        mask = cands[u]
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            mask ^= low
            if seen[v]:
                continue
            seen[v] = True
            if owner[v] == -1 or augment(owner[v], seen):
                owner[v] = u
                return True
        return False

    return all(augment(u, [False] * n_right) for u in range(len(cands)))


def contains_hypergraph(g: OrderedHypergraph, h: OrderedHypergraph) -> bool:
    if h.n > g.n or h.num_edges > g.num_edges:
        return False
    if h.n == 0:
        return True
    if g.num_edges and h.num_edges and max(map(len, h.edges)) > max(map(len, g.edges)):
        return False
    gmask = [0] * (g.n + 1)
    for idx, e in enumerate(g.edges):
        for v in e:
            gmask[v] |= 1 << idx
    incident: list[list[int]] = [[] for _ in range(h.n + 1)]
    for idx, e in enumerate(h.edges):
        for u in e:
            incident[u].append(idx)
    full = (1 << g.num_edges) - 1
    n_h, n_g, m = h.n, g.n, g.num_edges
    if n_h == n_g:
        # the only order-preserving injection [n] -> [n] is the identity
        cands = []
        for e in h.edges:
            mask = full
            for v in e:
                mask &= gmask[v]
            if not mask:
                return False
            cands.append(mask)
        return _has_matching(cands, m)

    def rec(u: int, start: int, cands: list[int]) -> bool:
        if u > n_h:
            return True
        for v in range(start, n_g - (n_h - u) + 1):
            nxt = cands
            if incident[u]:
                nxt = list(cands)
                dead = False
                for e in incident[u]:
                    nxt[e] &= gmask[v]
                    if not nxt[e]:
                        dead = True
                        break
                if dead or not _has_matching(nxt, m):
                    continue
            if rec(u + 1, v + 1, nxt):
                return True
        return False

    start = [full] * h.num_edges
    if h.num_edges and not _has_matching(start, m):
        return False
    return rec(1, 1, start)


# ---------------------------------------------------------------------------
# constructions


def project(g: OrderedHypergraph, drop: Iterable[int], t: int | None = None) -> OrderedHypergraph:
    """Delete the positions in ``drop`` (1-based) from every edge of a t-uniform hypergraph."""
    sizes = {len(e) for e in g.edges}
    if len(sizes) > 1:
        raise NotUniform(f"edges have sizes {sorted(sizes)}")
    if sizes:
        size = sizes.pop()
        if t is not None and t != size:
            raise NotUniform(f"edges have size {size}, not {t}")
        t = size
    if t is None:
        raise BadParameter("uniformity t is required for an edgeless hypergraph")
    drop = set(drop)
    if any(i < 1 or i > t for i in drop) or len(drop) >= t:
        raise BadIndexSet(f"index set {sorted(drop)} invalid for t={t}")
    keep = [i for i in range(t) if i + 1 not in drop]
    return OrderedHypergraph.make(([e[i] for i in keep] for e in g.edges), g.n)


def enumerate_perm_hypergraphs(d: int, k: int,
                               max_count: int = MAX_PERM_HYPERGRAPHS) -> Iterator[OrderedHypergraph]:
    """Every d-permutation hypergraph on [kd]; there are (k!)^(d-1) of them."""
    if d < 1 or k < 1:
        raise BadParameter("d and k must be positive")
    if math.factorial(k) ** (d - 1) > max_count:
        raise ResourceLimit(f"(k!)^(d-1) exceeds {max_count}")
    perms = list(enumerate_permutations(k))
    for combo in product(perms, repeat=d - 1):
        edges = [[i] + [j * k + p.images[i - 1] for j, p in enumerate(combo, start=1)]
                 for i in range(1, k + 1)]
        yield OrderedHypergraph.make(edges, d * k)


def is_perm_hypergraph(g: OrderedHypergraph, d: int) -> bool:
    if g.n % d or g.num_edges * d != g.n:
        return False
    k = g.n // d
    covered = sorted(v for e in g.edges for v in e)
    if covered != list(range(1, g.n + 1)):
        return False
    return all(len(e) == d and all((v - 1) // k == j for j, v in enumerate(e)) for e in g.edges)


def partition_to_hypergraph(pi: SetPartition) -> OrderedHypergraph:
    return OrderedHypergraph(pi.n, tuple(sorted(pi.blocks)))


def _interval_index(n: int, s: int) -> list[int]:
    """Map vertex -> 1-based interval; the first n mod s intervals are one larger."""
    q, r = divmod(n, s)
    index = [0]
    for j in range(1, s + 1):
        index.extend([j] * (q + 1 if j <= r else q))
    return index


def contract_with_multiplicity(g: OrderedHypergraph, s: int) -> Counter:
    """Contracted edges with the number of original edges mapping to each."""
    if not 1 <= s <= g.n:
        raise BadParameter(f"need 1 <= s <= n, got s={s}, n={g.n}")
    index = _interval_index(g.n, s)
    return Counter(tuple(sorted({index[v] for v in e})) for e in g.edges)


def interval_contract(g: OrderedHypergraph, s: int) -> OrderedHypergraph:
    """Quotient by s consecutive intervals of near-equal size, duplicate edges removed."""
    return OrderedHypergraph.make(contract_with_multiplicity(g, s), s)


# ---------------------------------------------------------------------------
# extremal search


def candidate_edges(n: int, uniform: int | None = None) -> list[tuple[int, ...]]:
    """Nonempty subsets of [n], largest first, lexicographic within a size."""
    sizes = [uniform] if uniform else range(n, 0, -1)
    return [c for size in sizes for c in combinations(range(1, n + 1), size)]


def max_weight_avoiding(h: OrderedHypergraph, n: int, budget: int = 10**5,
                        uniform: int | None = None,
                        max_n: int = MAX_SEARCH_N) -> MaxWeightResult:
    """Branch and bound for a maximum-weight hypergraph on [n] avoiding ``h``.

    Candidate edges are tried in decreasing size; the include branch is explored
    before the exclude branch and a branch is dropped when its weight plus the
    sizes of all remaining candidates cannot beat the incumbent.  ``exact`` is
    True only if the tree was exhausted within ``budget`` node expansions.
    """
    if n < 0 or n > max_n:
        raise ResourceLimit(f"n={n} outside the search guard 0..{max_n}")
    if budget < 1:
        raise BadParameter("budget must be positive")
    empty = OrderedHypergraph(n, ())
    if contains_hypergraph(empty, h):
        raise BadParameter("every hypergraph on [n] contains the pattern")
    cands = candidate_edges(n, uniform) if n else []
    suffix = [0] * (len(cands) + 1)
    for i in range(len(cands) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + len(cands[i])

    def avoids(edges: list[tuple[int, ...]]) -> bool:
        return not contains_hypergraph(OrderedHypergraph.make(edges, n), h)

    # greedy seed
    chosen: list[tuple[int, ...]] = []
    for e in cands:
        if avoids(chosen + [e]):
            chosen.append(e)
    best_edges = list(chosen)
    best_weight = sum(map(len, chosen))

    nodes = 0
    exhausted = True
    current: list[tuple[int, ...]] = []

    def rec(i: int, w: int):
        nonlocal nodes, exhausted, best_edges, best_weight
        if not exhausted:
            return
        if w > best_weight:
            best_weight, best_edges = w, list(current)
        if i == len(cands) or w + suffix[i] <= best_weight:
            return
        nodes += 1
        if nodes > budget:
            exhausted = False
            return
        e = cands[i]
        current.append(e)
        if avoids(current):
            rec(i + 1, w + len(e))
        current.pop()
        rec(i + 1, w)

    rec(0, 0)
    best = OrderedHypergraph.make(best_edges, n)
    assert not contains_hypergraph(best, h)
    return MaxWeightResult(best, best_weight, exhausted, nodes)
