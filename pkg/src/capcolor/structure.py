"""Detection of triangles, holes, caps and wheels; good ear additions.

Holes are returned as cyclically ordered vertex tuples, normalized so the
least vertex comes first and the second vertex is smaller than the last.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .graph import Graph, bits, to_mask
from .oracles import canonical_form

Hole = tuple[int, ...]


def find_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    for u in range(g.n):
        higher = g.adj[u] >> (u + 1) << (u + 1)
        for v in bits(higher):
            common = g.adj[u] & g.adj[v] & ~((1 << (v + 1)) - 1)
            if common:
                return (u, v, (common & -common).bit_length() - 1)
    return None


def iter_holes(g: Graph, max_len: Optional[int] = None, min_len: int = 4) -> Iterator[Hole]:
    """Yield every hole of length ``min_len..max_len`` once, up to rotation and reflection.

    Depth-first search over induced paths that start at the hole's least vertex.
    """
    max_len = g.n if max_len is None else min(max_len, g.n)
    adj = g.adj
    for s in range(g.n):
        above = g.full_mask & ~((1 << (s + 1)) - 1)
        for v1 in bits(adj[s] & above):
            # blocked: path vertices plus neighbors of interior path vertices
            yield from _extend(adj, s, [s, v1], 1 << s | 1 << v1, 0, above, max_len, min_len)


def _extend(adj, s, path, on_path, interior_nbrs, above, max_len, min_len):
    last = path[-1]
    cand = adj[last] & above & ~on_path & ~interior_nbrs
    # interior vertices now include v_{k-1}, except s itself
    new_interior = interior_nbrs | (adj[path[-2]] if len(path) > 2 else 0)
    cand &= ~new_interior
    for w in bits(cand):
        if adj[w] >> s & 1:
            if len(path) + 1 >= min_len and path[1] < w:
                yield tuple(path) + (w,)
        elif len(path) + 1 < max_len:
            path.append(w)
            yield from _extend(adj, s, path, on_path | 1 << w, new_interior, above, max_len, min_len)
            path.pop()


def enumerate_holes(g: Graph, max_len: int) -> list[Hole]:
    if max_len < 4:
        raise ValueError("max_len must be at least 4")
    return list(iter_holes(g, max_len))


def is_hole(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` (cyclic order) is an induced cycle of length ≥ 4."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    mask = to_mask(cycle)
    for i, v in enumerate(cycle):
        expected = 1 << cycle[i - 1] | 1 << cycle[(i + 1) % k]
        if g.adj[v] & mask != expected:
            return False
    return True


def has_even_hole(g: Graph) -> Optional[Hole]:
    for h in iter_holes(g):
        if len(h) % 2 == 0:
            return h
    return None


def find_hole_of_length(g: Graph, length: int) -> Optional[Hole]:
    return next(iter_holes(g, length, min_len=length), None)


def has_cap(g: Graph) -> Optional[tuple[Hole, int]]:
    """A hole and an outside vertex whose only neighbors on it are two consecutive vertices."""
    for h in iter_holes(g):
        hmask = to_mask(h)
        for v in bits(g.full_mask & ~hmask):
            on = g.adj[v] & hmask
            if on.bit_count() == 2:
                a, b = bits(on)
                if g.has_edge(a, b):
                    return h, v
    return None


def find_wheel(
    g: Graph,
    hole_contains: Iterable[int] = (),
    center_adjacent_to: Iterable[int] = (),
    center: Optional[int] = None,
) -> Optional[tuple[Hole, int]]:
    """A wheel (hole, center) with the center having at least three neighbors on the hole.

    The hole must contain every vertex of ``hole_contains``; the center must be
    adjacent to every vertex of ``center_adjacent_to`` and equal ``center`` when given.
    """
    need = to_mask(hole_contains)
    near = to_mask(center_adjacent_to)
    if (need | near) & ~g.full_mask or (center is not None and not 0 <= center < g.n):
        raise ValueError("constraint vertex out of range")
    centers = g.full_mask if center is None else 1 << center
    for v in bits(near):
        centers &= g.adj[v]
    if not centers:
        return None
    for h in iter_holes(g):
        hmask = to_mask(h)
        if hmask & need != need:
            continue
        for v in bits(centers & ~hmask):
            if (g.adj[v] & hmask).bit_count() >= 3:
                return h, v
    return None


_CUBE = Graph.from_edges(8, [(i, 4 + j) for i in range(4) for j in range(4) if i != j])


def is_cube(g: Graph) -> bool:
    return g.n == 8 and g.m == 12 and canonical_form(g) == canonical_form(_CUBE)


@dataclass
class ClassReport:
    triangle_free: bool
    cap_free: bool
    even_hole_free: bool
    five_hole_free: bool
    is_cube: bool
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "triangle_free": self.triangle_free,
            "cap_free": self.cap_free,
            "even_hole_free": self.even_hole_free,
            "five_hole_free": self.five_hole_free,
            "is_cube": self.is_cube,
            "witnesses": {k: _jsonable(v) for k, v in self.witnesses.items()},
        }


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def classify(g: Graph) -> ClassReport:
    tri = find_triangle(g)
    cap = has_cap(g)
    even = has_even_hole(g)
    five = find_hole_of_length(g, 5)
    witnesses = {}
    if tri is not None:
        witnesses["triangle"] = tri
    if cap is not None:
        witnesses["cap"] = {"hole": list(cap[0]), "apex": cap[1]}
    if even is not None:
        witnesses["even_hole"] = even
    if five is not None:
        witnesses["five_hole"] = five
    return ClassReport(
        triangle_free=tri is None,
        cap_free=cap is None,
        even_hole_free=even is None,
        five_hole_free=five is None,
        is_cube=is_cube(g),
        witnesses=witnesses,
    )


# -- ear additions ------------------------------------------------------------


@dataclass(frozen=True)
class EarAdditionStep:
    """Add an induced x–z path with ``ear_internal_count`` new vertices.

    The new vertices are numbered after the existing ones in path order from
    ``x`` to ``z``; internal vertex ``i`` is also joined to ``y`` when ``i`` is
    in ``y_neighbor_positions``.
    """

    hole: tuple[int, ...]
    x: int
    y: int
    z: int
    ear_internal_count: int
    y_neighbor_positions: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "hole": list(self.hole),
            "x": self.x,
            "y": self.y,
            "z": self.z,
            "ear_internal_count": self.ear_internal_count,
            "y_neighbor_positions": list(self.y_neighbor_positions),
        }

    @classmethod
    def from_json(cls, d: dict) -> EarAdditionStep:
        return cls(
            hole=tuple(d["hole"]),
            x=d["x"],
            y=d["y"],
            z=d["z"],
            ear_internal_count=d["ear_internal_count"],
            y_neighbor_positions=tuple(d["y_neighbor_positions"]),
        )


@dataclass(frozen=True)
class EarVerdict:
    valid: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


class EarAdditionError(ValueError):
    def __init__(self, violations: Sequence[str]):
        super().__init__("invalid ear addition: " + "; ".join(violations))
        self.violations = tuple(violations)


def _check_step_shape(g: Graph, step: EarAdditionStep) -> None:
    h = step.hole
    k = len(h)
    if k < 4 or len(set(h)) != k or any(not 0 <= v < g.n for v in h):
        raise ValueError("hole must be at least 4 distinct vertices of the graph")
    for i in range(k):
        if not g.has_edge(h[i], h[(i + 1) % k]):
            raise ValueError(f"hole vertices {h[i]} and {h[(i + 1) % k]} are not adjacent")
    if step.y not in h:
        raise ValueError("y is not on the hole")
    i = h.index(step.y)
    if {step.x, step.z} != {h[i - 1], h[(i + 1) % k]} or step.x == step.z:
        raise ValueError("x, y, z are not consecutive on the hole")
    c = step.ear_internal_count
    if c < 1:
        raise ValueError("an ear needs at least one internal vertex")
    pos = step.y_neighbor_positions
    if len(set(pos)) != len(pos) or any(not 0 <= p < c for p in pos):
        raise ValueError("y neighbor positions must be distinct indices into the ear")


def _build_extended(g: Graph, step: EarAdditionStep) -> tuple[Graph, list[int]]:
    n, c = g.n, step.ear_internal_count
    internal = list(range(n, n + c))
    edges = g.edges()
    path = [step.x] + internal + [step.z]
    edges += list(zip(path, path[1:]))
    edges += [(step.y, internal[p]) for p in step.y_neighbor_positions]
    return Graph.from_edges(n + c, edges), path


def validate_good_ear(g: Graph, step: EarAdditionStep) -> EarVerdict:
    """Check that ``step`` is a good ear addition to ``g``.

    Violations are reported by name: ``hole_not_induced``, ``new_cycle_not_induced``,
    ``parity`` (y must have an odd number of neighbors on the ear, attachments
    included), ``wheel_through_xyz`` and ``wheel_centered_at_y``.  Malformed
    steps raise ValueError.
    """
    _check_step_shape(g, step)
    violations = []
    if not is_hole(g, step.hole):
        violations.append("hole_not_induced")
    ext, path = _build_extended(g, step)
    i = step.hole.index(step.y)
    around = list(step.hole[i + 1:] + step.hole[:i])  # H - y, attachment to attachment
    if around[0] == step.x:
        around.reverse()
    new_cycle = path + around[1:-1]
    if not is_hole(ext, new_cycle):
        violations.append("new_cycle_not_induced")
    if (2 + len(step.y_neighbor_positions)) % 2 == 0:
        violations.append("parity")
    if find_wheel(g, hole_contains=(step.x, step.y, step.z), center_adjacent_to=(step.y,)) is not None:
        violations.append("wheel_through_xyz")
    if find_wheel(g, hole_contains=(step.x, step.z), center=step.y) is not None:
        violations.append("wheel_centered_at_y")
    return EarVerdict(not violations, tuple(violations))


def apply_ear_addition(g: Graph, step: EarAdditionStep, check_class: bool = True) -> Graph:
    """Extend ``g`` by a validated good ear.

    With ``check_class``, a result that gains a triangle or an even hole the
    input did not have is rejected rather than returned.
    """
    verdict = validate_good_ear(g, step)
    if not verdict:
        raise EarAdditionError(verdict.violations)
    ext, _ = _build_extended(g, step)
    if check_class:
        problems = []
        if find_triangle(ext) is not None and find_triangle(g) is None:
            problems.append("result_has_triangle")
        if has_even_hole(ext) is not None and has_even_hole(g) is None:
            problems.append("result_has_even_hole")
        if problems:
            raise EarAdditionError(problems)
    return ext


def apply_ear_additions(g: Graph, steps: Iterable[EarAdditionStep]) -> Graph:
    for step in steps:
        g = apply_ear_addition(g, step)
    return g


# -- corpus -------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    initial_hole: int
    steps: tuple[EarAdditionStep, ...]
    graph: Graph

    def replay(self) -> Graph:
        return apply_ear_additions(Graph.cycle(self.initial_hole), self.steps)

    def to_json(self) -> dict:
        return {
            "initial_hole": self.initial_hole,
            "steps": [s.to_json() for s in self.steps],
            "graph": self.graph.adjacency_lists(),
        }

    @classmethod
    def from_json(cls, d: dict) -> CorpusEntry:
        return cls(
            initial_hole=d["initial_hole"],
            steps=tuple(EarAdditionStep.from_json(s) for s in d["steps"]),
            graph=Graph.from_adjacency_lists(d["graph"]),
        )


def _propose_step(
    rng: random.Random, g: Graph, holes: Sequence[Hole], room: int, min_hole: int = 5
) -> Optional[EarAdditionStep]:
    hole = rng.choice(holes)
    k = len(hole)
    i = rng.randrange(k)
    x, y, z = hole[i - 1], hole[i], hole[(i + 1) % k]
    if rng.random() < 0.5:
        x, z = z, x
    # new hole length is k - 1 + c; keep it odd
    seg = min_hole - 2
    lengths = [c for c in range(2 * seg - 1, room + 1) if (k - 1 + c) % 2 == 1]
    if not lengths:
        return None
    c = min(rng.choice(lengths), rng.choice(lengths))  # favor short ears, leaving room for more
    # y splits the x..z path (c + 1 edges) into an even number of segments;
    # each closes a hole through y, so every segment gets odd length >= seg
    parts = rng.choice([p for p in (2, 4) if seg * p <= c + 1])
    spare = (c + 1 - seg * parts) // 2
    cuts = sorted(rng.randint(0, spare) for _ in range(parts - 1))
    extra = [b - a for a, b in zip([0] + cuts, cuts + [spare])]
    pos, at = [], 0
    for e in extra[:-1]:
        at += seg + 2 * e
        pos.append(at - 1)  # path index at -> internal index at - 1
    return EarAdditionStep(hole, x, y, z, c, tuple(pos))


def generate_skeleton_corpus(
    seed: int,
    max_vertices: int,
    max_steps: int,
    target: int = 40,
    initial_lengths: Sequence[int] = (5, 7, 9),
    max_attempts: int = 2000,
    min_hole: int = 5,
) -> list[CorpusEntry]:
    """Triangle-free, even-hole-free skeletons built from odd holes by good ears.

    The odd holes themselves come first, then up to ``target`` further graphs
    (pairwise non-isomorphic) produced by random validated ear additions.  With
    ``min_hole`` > 5 only graphs whose holes all have at least that length are
    kept (``min_hole=7`` gives 5-hole-free skeletons).  The output is a
    deterministic function of the arguments.
    """
    if max_vertices < 5:
        raise ValueError("max_vertices must be at least 5")
    if min_hole < 5 or min_hole % 2 == 0:
        raise ValueError("min_hole must be an odd integer >= 5")
    rng = random.Random(seed)
    starts = [L for L in initial_lengths if min_hole <= L <= max_vertices]
    corpus = [CorpusEntry(L, (), Graph.cycle(L)) for L in starts]
    if max_steps == 0 or not starts:
        return corpus
    seen = {canonical_form(e.graph) for e in corpus}
    extra = 0
    for _ in range(max_attempts):
        if extra >= target:
            break
        L = rng.choice(starts)
        g = Graph.cycle(L)
        steps: list[EarAdditionStep] = []
        for _ in range(rng.randint(1, max_steps)):
            room = max_vertices - g.n
            holes = enumerate_holes(g, g.n)
            step = _propose_step(rng, g, holes, room, min_hole)
            if step is None:
                break
            try:
                h = apply_ear_addition(g, step)
            except EarAdditionError:
                continue
            if min_hole > 5 and next(iter_holes(h, min_hole - 1), None) is not None:
                continue
            g = h
            steps.append(step)
        if not steps:
            continue
        key = canonical_form(g)
        if key in seen:
            continue
        seen.add(key)
        corpus.append(CorpusEntry(L, tuple(steps), g))
        extra += 1
    return corpus
