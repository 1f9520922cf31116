"""Immutable simple undirected graphs with bit-row adjacency."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is an integer whose bit ``u`` is set iff ``uv`` is an edge.
    Instances are hashable and never mutated after construction.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_adjacency_lists(cls, lists: Sequence[Iterable[int]]) -> Graph:
        n = len(lists)
        edges = [(u, v) for u, nbrs in enumerate(lists) for v in nbrs]
        g = cls.from_edges(n, edges)
        for u, nbrs in enumerate(lists):
            if to_mask(nbrs) != g.adj[u]:
                raise ValueError(f"adjacency list of vertex {u} is not symmetric")
        return g

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    # -- queries ----------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def adjacency_lists(self) -> list[list[int]]:
        return [self.neighbors(v) for v in range(self.n)]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all((self.adj[v] | 1 << v) & mask == mask for v in bits(mask))

    def is_stable(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all(not self.adj[v] & mask for v in bits(mask))

    def components(self, mask: int | None = None) -> list[int]:
        """Connected components of ``G[mask]`` as bitmasks, ordered by least vertex."""
        remaining = self.full_mask if mask is None else mask
        comps = []
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                new = self.adj[v] & remaining & ~comp
                comp |= new
                frontier |= new
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def complement(self) -> Graph:
        full = self.full_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def relabel(self, order: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is vertex ``order[i]`` of this graph."""
        if sorted(order) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertex set")
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        return Graph(self.n, tuple(to_mask(pos[u] for u in bits(self.adj[v])) for v in order))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(G[s], old_ids)`` where new vertex ``i`` is old vertex ``old_ids[i]``.

    New ids follow increasing old id order.
    """
    old_ids = tuple(sorted(set(s)))
    for v in old_ids:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    new_of = {v: i for i, v in enumerate(old_ids)}
    keep = to_mask(old_ids)
    adj = tuple(to_mask(new_of[u] for u in bits(g.adj[v] & keep)) for v in old_ids)
    return Graph(len(old_ids), adj), old_ids


def are_anticomplete(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff no edge of ``g`` joins ``a`` to ``b``; the sets must be disjoint."""
    ma, mb = to_mask(a), to_mask(b)
    if ma & mb:
        raise ValueError("vertex sets overlap")
    if (ma | mb) & ~g.full_mask:
        raise ValueError("vertex out of range")
    return all(not g.adj[v] & mb for v in bits(ma))
