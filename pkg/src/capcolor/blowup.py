"""Clique blowups: construction, recognition by twin contraction, cycle blowups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .graph import Graph, bits, induced_subgraph, to_mask
from .oracles import max_clique_size, true_twin_classes
from .structure import find_triangle


@dataclass(frozen=True)
class BlowupMap:
    """A skeleton, a clique size per skeleton vertex, and the fiber of each total vertex.

    ``assignment[v]`` is the skeleton vertex whose clique contains total-graph
    vertex ``v``.
    """

    skeleton: Graph
    multiplicity: tuple[int, ...]
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.multiplicity) != self.skeleton.n:
            raise ValueError("one multiplicity per skeleton vertex required")
        if any(m < 0 for m in self.multiplicity):
            raise ValueError("multiplicities must be nonnegative")
        if any(not 0 <= a < self.skeleton.n for a in self.assignment):
            raise ValueError("assignment refers to a missing skeleton vertex")
        counts = [0] * self.skeleton.n
        for a in self.assignment:
            counts[a] += 1
        if tuple(counts) != self.multiplicity:
            raise ValueError("fiber sizes disagree with the multiplicities")

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def nonempty(self) -> bool:
        return all(m >= 1 for m in self.multiplicity)

    def fibers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.skeleton.n)]
        for v, a in enumerate(self.assignment):
            out[a].append(v)
        return out

    def total_graph(self) -> Graph:
        fibers = [to_mask(f) for f in self.fibers()]
        adj = []
        for v, a in enumerate(self.assignment):
            row = fibers[a] & ~(1 << v)
            for b in bits(self.skeleton.adj[a]):
                row |= fibers[b]
            adj.append(row)
        return Graph(self.n, tuple(adj))

    def to_json(self) -> dict:
        return {
            "skeleton": self.skeleton.adjacency_lists(),
            "multiplicity": list(self.multiplicity),
            "assignment": list(self.assignment),
        }

    @classmethod
    def from_json(cls, d: dict) -> BlowupMap:
        return cls(
            Graph.from_adjacency_lists(d["skeleton"]),
            tuple(d["multiplicity"]),
            tuple(d["assignment"]),
        )


def build_blowup(skeleton: Graph, multiplicity: Sequence[int]) -> tuple[Graph, BlowupMap]:
    """Blow skeleton vertex ``v`` up into a clique of ``multiplicity[v]`` vertices.

    Fibers get contiguous ids in skeleton-vertex order.
    """
    if len(multiplicity) != skeleton.n:
        raise ValueError("one multiplicity per skeleton vertex required")
    if any(m < 0 for m in multiplicity):
        raise ValueError("multiplicities must be nonnegative")
    assignment = tuple(v for v, m in enumerate(multiplicity) for _ in range(m))
    b = BlowupMap(skeleton, tuple(multiplicity), assignment)
    return b.total_graph(), b


def recognize_blowup(g: Graph) -> BlowupMap:
    """Express ``g`` as a clique blowup of its true-twin quotient.

    Skeleton vertex ``i`` is the ``i``-th twin class ordered by least member,
    so ``g`` relabeled by :func:`fiber_order` equals ``build_blowup`` of the result.
    """
    classes = true_twin_classes(g)
    index = [0] * g.n
    for i, cls in enumerate(classes):
        for v in cls:
            index[v] = i
    edges = {
        (min(index[u], index[v]), max(index[u], index[v]))
        for u, v in g.edges()
        if index[u] != index[v]
    }
    skeleton = Graph.from_edges(len(classes), sorted(edges))
    return BlowupMap(skeleton, tuple(len(c) for c in classes), tuple(index))


def fiber_order(b: BlowupMap) -> list[int]:
    """Total vertices listed fiber by fiber, which is the id order ``build_blowup`` uses."""
    return [v for f in b.fibers() for v in f]


def cycle_blowup(length: int, multiplicity: Union[int, Sequence[int]]) -> tuple[Graph, BlowupMap]:
    if length < 5 or length % 2 == 0:
        raise ValueError("cycle blowups are defined here for odd length >= 5")
    if isinstance(multiplicity, int):
        multiplicity = [multiplicity] * length
    return build_blowup(Graph.cycle(length), multiplicity)


def restrict(b: BlowupMap, multiplicity: Sequence[int]) -> BlowupMap:
    """Same skeleton with new multiplicities; vertices are renumbered contiguously."""
    return build_blowup(b.skeleton, multiplicity)[1]


def blowup_omega(b: BlowupMap) -> int:
    """Clique number of the blowup.

    For a triangle-free skeleton every maximal clique is one fiber or the union
    of two fibers over an edge.  Otherwise the exact oracle is used.
    """
    sk, m = b.skeleton, b.multiplicity
    support = [v for v in range(sk.n) if m[v] > 0]
    if find_triangle(induced_subgraph(sk, support)[0]) is not None:
        return max_clique_size(b.total_graph()).value
    best = max(m, default=0)
    for u, v in sk.edges():
        best = max(best, m[u] + m[v])
    return best

