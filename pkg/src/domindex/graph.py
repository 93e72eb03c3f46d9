"""Immutable simple undirected graphs over dense 0-based vertex ids.

Adjacency is stored as one bitmask per vertex, so neighborhood algebra
(unions, private territories, coverage tests) reduces to integer bit
operations. Vertices carry string labels; all user-facing output speaks
labels, ids never leave the library.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    DisconnectedGraph,
    InvalidEdge,
    LabelConflict,
    NotAPermutation,
    SelfLoop,
    VertexOutOfRange,
)


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertices of a graph of order ``n``, held as a bitmask."""

    n: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise VertexOutOfRange(f"set contains vertices outside 0..{self.n - 1}")

    def members(self) -> tuple[int, ...]:
        return tuple(bits_of(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``n`` vertices, open-neighborhood bitmasks."""

    n: int
    labels: tuple[str, ...]
    open_adj: tuple[int, ...]
    m: int

    @cached_property
    def closed_adj(self) -> tuple[int, ...]:
        return tuple(self.open_adj[v] | (1 << v) for v in range(self.n))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _label_ids(self) -> dict[str, int]:
        return {lbl: i for i, lbl in enumerate(self.labels)}

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    def id_of(self, label: str) -> int:
        try:
            return self._label_ids[label]
        except KeyError:
            raise VertexOutOfRange(f"no vertex labeled {label!r}") from None

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.open_adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return (self.open_adj[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return tuple(bits_of(self.open_adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        out = []
        for u in range(self.n):
            rest = self.open_adj[u] >> (u + 1)
            for off in bits_of(rest):
                out.append((u, u + 1 + off))
        return out

    def labels_of(self, s: VertexSet | Iterable[int]) -> list[str]:
        ids = s.members() if isinstance(s, VertexSet) else tuple(s)
        return [self.labels[v] for v in ids]

    def vertex_set(self, ids: Iterable[int]) -> VertexSet:
        bits = 0
        for v in ids:
            self.check_vertex(v)
            bits |= 1 << v
        return VertexSet(self.n, bits)

    def vertex_set_from_labels(self, labels: Iterable[str]) -> VertexSet:
        return self.vertex_set(self.id_of(lbl) for lbl in labels)


def new_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Graph:
    """Build a graph from an edge list, deduplicating and symmetrising.

    Raises ``SelfLoop``/``InvalidEdge`` for loops, ``VertexOutOfRange`` for
    endpoints outside ``0..n-1`` and ``LabelConflict`` for repeated labels.
    """
    if n < 0:
        raise VertexOutOfRange("vertex count must be non-negative")
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    else:
        labels = tuple(labels)
        if len(labels) != n:
            raise LabelConflict(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            seen: set[str] = set()
            for lbl in labels:
                if lbl in seen:
                    raise LabelConflict(f"duplicate label {lbl!r}")
                seen.add(lbl)
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    m = sum(a.bit_count() for a in adj) // 2
    return Graph(n=n, labels=labels, open_adj=tuple(adj), m=m)


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    """N[v], the vertex together with its neighbors."""
    g.check_vertex(v)
    return VertexSet(g.n, g.closed_adj[v])


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise VertexOutOfRange("graph has no vertices")
    return max(a.bit_count() for a in g.open_adj)


def _reach_mask(g: Graph, start: int) -> int:
    seen = 1 << start
    frontier = deque([start])
    while frontier:
        v = frontier.popleft()
        fresh = g.open_adj[v] & ~seen
        seen |= fresh
        for u in bits_of(fresh):
            frontier.append(u)
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise VertexOutOfRange("graph has no vertices")
    return _reach_mask(g, 0) == g.full_mask


def distances_from(g: Graph, src: int) -> list[int]:
    """BFS distances from ``src``; unreachable vertices get -1."""
    g.check_vertex(src)
    dist = [-1] * g.n
    dist[src] = 0
    seen = 1 << src
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            fresh = g.open_adj[v] & ~seen
            seen |= fresh
            for u in bits_of(fresh):
                dist[u] = d
                nxt.append(u)
        frontier = nxt
    return dist


def wiener_index(g: Graph) -> int:
    """Sum of shortest-path distances over unordered vertex pairs."""
    if not is_connected(g):
        raise DisconnectedGraph("Wiener index needs a connected graph")
    total = 0
    for v in range(g.n):
        total += sum(distances_from(g, v))
    return total // 2


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertices: old id ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise NotAPermutation(f"{perm!r} is not a permutation of 0..{g.n - 1}")
    labels = [""] * g.n
    adj = [0] * g.n
    for v in range(g.n):
        labels[perm[v]] = g.labels[v]
        adj[perm[v]] = mask_of(perm[u] for u in bits_of(g.open_adj[v]))
    return Graph(n=g.n, labels=tuple(labels), open_adj=tuple(adj), m=g.m)


def is_spanning_subgraph(h: Graph, g: Graph) -> bool:
    """True iff ``h`` has the same vertex ids and every edge of ``h`` is in ``g``."""
    if h.n != g.n:
        return False
    return all(h.open_adj[v] & ~g.open_adj[v] == 0 for v in range(h.n))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise InvalidEdge(f"no edge ({u},{v}) to delete")
    adj = list(g.open_adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(n=g.n, labels=g.labels, open_adj=tuple(adj), m=g.m - 1)
