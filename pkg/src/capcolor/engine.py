"""Coloring clique blowups of triangle-free skeletons within ⌈p·ω/(2q)⌉ colors.

The recursion removes a transversal ``T`` meeting every fiber in
``min(q, |Q_v|)`` vertices.  What is left splits into pairwise anticomplete
small cliques (``V1 - T``) and a blowup whose clique number dropped by ``2q``
(``V2 - T``); both share one recursive palette, and ``T`` gets at most ``p``
fresh colors from the base colorer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .blowup import BlowupMap, blowup_omega, build_blowup
from .graph import Graph, bits, induced_subgraph, to_mask
from .oracles import _k_coloring, dsatur_coloring, tabu_coloring, exact_chromatic
from .structure import find_triangle

BaseColorer = Callable[[Graph, int], Sequence[int]]


class StructuralViolation(RuntimeError):
    """A structural claim of the decomposition failed on an instance."""

    def __init__(self, claim: str, detail: str = ""):
        super().__init__(f"{claim}: {detail}" if detail else claim)
        self.claim = claim


@dataclass(frozen=True)
class BoundParams:
    p: int
    q: int

    def __post_init__(self):
        if self.q < 1 or self.p < 1:
            raise ValueError("p and q must be positive")
        if self.p <= 2 * self.q:
            raise ValueError(f"need p > 2q, got p={self.p}, q={self.q}")


def compute_bound(params: BoundParams, omega: int) -> int:
    """⌈p·ω/(2q)⌉ in exact integer arithmetic."""
    if omega < 0:
        raise ValueError("omega must be nonnegative")
    return -(-params.p * omega // (2 * params.q))


def base_threshold(params: BoundParams) -> Fraction:
    """max{2q(p-q-2)/(p-2q), 2q} as an exact rational.

    Blowups with clique number at most this value go to the base colorer.
    """
    p, q = params.p, params.q
    return max(Fraction(2 * q * (p - q - 2), p - 2 * q), Fraction(2 * q))


# -- transversal and partition ------------------------------------------------


@dataclass(frozen=True)
class TransversalPartition:
    t_set: frozenset[int]
    v1: frozenset[int]
    v2: frozenset[int]
    v1_cliques: tuple[frozenset[int], ...]


def select_transversal(b: BlowupMap, params: BoundParams) -> frozenset[int]:
    """The first ``min(q, |Q_v|)`` vertices (by id) of every fiber."""
    return frozenset(v for f in b.fibers() for v in f[: params.q])


def _check_hypotheses(b: BlowupMap) -> None:
    support = [v for v in range(b.skeleton.n) if b.multiplicity[v] > 0]
    sk, _ = induced_subgraph(b.skeleton, support)
    if find_triangle(sk) is not None:
        raise ValueError("skeleton has a triangle")
    if not sk.is_connected():
        raise ValueError("skeleton support is disconnected")


def partition_v1_v2(b: BlowupMap, params: BoundParams, omega: int) -> TransversalPartition:
    """Split the vertices into ``V1`` (fiber pairs over lopsided edges) and ``V2``.

    An edge ``uv`` is lopsided when its smaller fiber has at most ``q-1`` vertices
    and its larger one at least ``ω-q+1``.  The structural consequences are
    checked and a :class:`StructuralViolation` names the first one that fails.
    """
    _check_hypotheses(b)
    if omega <= base_threshold(params):
        raise ValueError(f"omega={omega} is not above the base threshold {base_threshold(params)}")
    p, q = params.p, params.q
    m = b.multiplicity
    fibers = b.fibers()
    g = b.total_graph()
    t_set = select_transversal(b, params)
    v1_vertices: set[int] = set()
    for u, v in b.skeleton.edges():
        if min(m[u], m[v]) <= q - 1 and max(m[u], m[v]) >= omega - q + 1:
            v1_vertices.update(fibers[u])
            v1_vertices.update(fibers[v])
    v1 = frozenset(v1_vertices)
    v2 = frozenset(range(b.n)) - v1

    rest1 = to_mask(v1 - t_set)
    cliques = tuple(frozenset(bits(c)) for c in g.components(rest1))
    for k in cliques:
        if not g.is_clique(k):
            raise StructuralViolation("v1_minus_t_cliques", f"component {sorted(k)} is not a clique")
        if len(k) > omega - 1 - q:
            raise StructuralViolation("v1_clique_size", f"|K|={len(k)} > ω-1-q={omega - 1 - q}")
    rest2 = to_mask(v2 - t_set)
    if any(g.adj[v] & rest2 for v in bits(rest1)):
        raise StructuralViolation("v1_v2_anticomplete", "an edge joins V1-T to V2-T")
    return TransversalPartition(t_set, v1, v2, cliques)


# -- certificates -------------------------------------------------------------


@dataclass
class Certificate:
    """A coloring (``colors[v]`` in ``1..palette``) with the bound it witnesses."""

    coloring: tuple[int, ...]
    palette: int
    used: int
    omega: int
    params: BoundParams
    bound: int
    trace: list[dict] = field(default_factory=list)
    base_bound_exceeded: bool = False

    def to_json(self) -> dict:
        return {
            "colors": list(self.coloring),
            "palette": self.palette,
            "used": self.used,
            "omega": self.omega,
            "p": self.params.p,
            "q": self.params.q,
            "bound": self.bound,
            "base_bound_exceeded": self.base_bound_exceeded,
            "trace": self.trace,
        }

    @classmethod
    def from_json(cls, d: dict) -> Certificate:
        return cls(
            coloring=tuple(d["colors"]),
            palette=d["palette"],
            used=d["used"],
            omega=d["omega"],
            params=BoundParams(d["p"], d["q"]),
            bound=d["bound"],
            trace=list(d.get("trace", [])),
            base_bound_exceeded=d.get("base_bound_exceeded", False),
        )


def exact_base_colorer(g: Graph, budget: int) -> Sequence[int]:
    """A coloring within ``budget`` whenever one exists.

    DSATUR first, then tabu search and a complete search at the budget.  The
    optimum is only computed when all of these fail, so a coloring over budget
    means no coloring within budget exists.
    """
    greedy = dsatur_coloring(g)
    if max(greedy, default=0) <= budget:
        return greedy
    if budget >= 1:
        found = tabu_coloring(g, budget) or _k_coloring(g, budget)
        if found is not None:
            return found
    return exact_chromatic(g).witness


def _sub_blowup(b: BlowupMap, keep: Sequence[Sequence[int]]) -> tuple[BlowupMap, list[int]]:
    """Blowup over the support of ``keep`` (per-fiber vertex lists) with ids mapped back."""
    support = [v for v in range(b.skeleton.n) if keep[v]]
    sk, _ = induced_subgraph(b.skeleton, support)
    _, sub = build_blowup(sk, [len(keep[v]) for v in support])
    back = [u for v in support for u in keep[v]]
    return sub, back


def _proper(g: Graph, coloring: Sequence[int]) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edges())


def bipartition(g: Graph) -> Optional[tuple[int, int]]:
    """Two color classes of a proper 2-coloring as bitmasks, or None for non-bipartite graphs."""
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    return to_mask(v for v in range(g.n) if side[v] == 0), to_mask(v for v in range(g.n) if side[v] == 1)


def perfect_blowup_coloring(b: BlowupMap, sides: tuple[int, int], omega: int) -> list[int]:
    """ω-coloring of a blowup of a bipartite skeleton.

    Fibers on one side count colors up from 1, on the other side down from ω;
    adjacent fibers have at most ω vertices between them, so they never meet.
    """
    coloring = [0] * b.n
    for v, fiber in enumerate(b.fibers()):
        up = bool(sides[0] >> v & 1)
        for i, u in enumerate(fiber):
            coloring[u] = 1 + i if up else omega - i
    return coloring


class _Run:
    def __init__(self, params: BoundParams, base_colorer: BaseColorer):
        self.params = params
        self.base_colorer = base_colorer
        self.threshold = base_threshold(params)
        self.trace: list[dict] = []
        self.exceeded = False

    def color(self, b: BlowupMap, depth: int) -> list[int]:
        coloring = [0] * b.n
        fibers = b.fibers()
        support = to_mask(v for v in range(b.skeleton.n) if b.multiplicity[v] > 0)
        for comp in b.skeleton.components(support):
            keep = [fibers[v] if comp >> v & 1 else [] for v in range(b.skeleton.n)]
            sub, back = _sub_blowup(b, keep)
            for v, c in zip(back, self.color_connected(sub, depth)):
                coloring[v] = c
        return coloring

    def base(self, b: BlowupMap, omega: int, depth: int, role: str) -> list[int]:
        g = b.total_graph()
        budget = compute_bound(self.params, omega)
        coloring = list(self.base_colorer(g, budget))
        if len(coloring) != g.n or any(c < 1 for c in coloring) or not _proper(g, coloring):
            raise RuntimeError("base colorer returned an improper coloring")
        used = len(set(coloring))
        top = max(coloring, default=0)
        exceeded = top > budget
        self.exceeded |= exceeded
        self.trace.append(
            {"depth": depth, "kind": "base", "role": role, "omega": omega, "n": g.n,
             "colors": used, "budget": budget, "exceeded": exceeded}
        )
        return coloring

    def color_connected(self, b: BlowupMap, depth: int) -> list[int]:
        p, q = self.params.p, self.params.q
        omega = blowup_omega(b)
        sides = bipartition(b.skeleton)
        if sides is not None:
            self.trace.append(
                {"depth": depth, "kind": "perfect", "omega": omega, "n": b.n,
                 "colors": omega, "budget": compute_bound(self.params, omega)}
            )
            return perfect_blowup_coloring(b, sides, omega)
        if omega <= self.threshold:
            return self.base(b, omega, depth, "component")

        fibers = b.fibers()
        part = partition_v1_v2(b, self.params, omega)
        t_keep = [f[:q] for f in fibers]
        checks = {
            "transversal_sizes": all(
                len(part.t_set & set(f)) == min(q, len(f)) for f in fibers
            ),
        }
        t_blowup, t_back = _sub_blowup(b, t_keep)
        t_omega = blowup_omega(t_blowup)
        checks["transversal_omega"] = t_omega <= 2 * q
        if not checks["transversal_omega"]:
            raise StructuralViolation("transversal_omega", f"ω(G[T])={t_omega} > 2q={2 * q}")
        if not checks["transversal_sizes"]:
            raise StructuralViolation("transversal_sizes")

        v2_keep = [[u for u in f[q:] if u in part.v2] for f in fibers]
        rec_budget = -(-p * (omega - 2 * q) // (2 * q))
        rest_omega = 0
        rec_coloring: list[int] = []
        v2_back: list[int] = []
        if any(v2_keep):
            v2_blowup, v2_back = _sub_blowup(b, v2_keep)
            rest_omega = blowup_omega(v2_blowup)
        checks["v2_omega_drop"] = rest_omega <= omega - 2 * q
        if not checks["v2_omega_drop"]:
            raise StructuralViolation("v2_omega_drop", f"ω(G[V2-T])={rest_omega} > ω-2q={omega - 2 * q}")
        checks["v1_cliques_fit"] = omega - 1 - q <= rec_budget
        if not checks["v1_cliques_fit"]:
            raise StructuralViolation("v1_cliques_fit", f"ω-1-q={omega - 1 - q} > {rec_budget}")
        checks["v1_cliques"] = True
        checks["v1_v2_anticomplete"] = True

        level = {
            "depth": depth, "kind": "split", "omega": omega, "n": b.n,
            "t_size": len(part.t_set), "v1_size": len(part.v1), "v2_size": len(part.v2),
            "v1_clique_count": len(part.v1_cliques), "v2_rest_omega": rest_omega,
            "recursive_budget": rec_budget, "budget": compute_bound(self.params, omega),
            "checks": checks,
        }
        self.trace.append(level)

        coloring = [0] * b.n
        if v2_back:
            rec_coloring = self.color(v2_blowup, depth + 1)
            for v, c in zip(v2_back, rec_coloring):
                coloring[v] = c
        for k in part.v1_cliques:
            for c, v in enumerate(sorted(k), start=1):
                coloring[v] = c
        offset = max([rec_budget, *rec_coloring])
        t_coloring = self.base(t_blowup, t_omega, depth, "transversal")
        for v, c in zip(t_back, t_coloring):
            coloring[v] = offset + c
        level["transversal_colors"] = len(set(t_coloring))
        return coloring


def color_blowup(
    b: BlowupMap, params: BoundParams, base_colorer: Optional[BaseColorer] = None
) -> Certificate:
    """Color the blowup with at most ⌈p·ω/(2q)⌉ colors when the base colorer keeps its bound.

    ``base_colorer(graph, budget)`` must return a proper coloring with colors
    starting at 1; the default is the exact chromatic solver.  If a base
    instance needs more than its budget the certificate is still proper but is
    flagged ``base_bound_exceeded``.
    """
    support = [v for v in range(b.skeleton.n) if b.multiplicity[v] > 0]
    if find_triangle(induced_subgraph(b.skeleton, support)[0]) is not None:
        raise ValueError("skeleton has a triangle")
    run = _Run(params, base_colorer or exact_base_colorer)
    coloring = run.color(b, 0)
    omega = blowup_omega(b)
    bound = compute_bound(params, omega)
    return Certificate(
        coloring=tuple(coloring),
        palette=bound,
        used=len(set(coloring)),
        omega=omega,
        params=params,
        bound=bound,
        trace=run.trace,
        base_bound_exceeded=run.exceeded,
    )


# -- path extension -----------------------------------------------------------


@dataclass(frozen=True)
class PathBlowup:
    """Cliques ``V_0..V_n`` along a path, ``V_i`` complete to ``V_{i+1}``, with palette ``r``."""

    multiplicity: tuple[int, ...]
    r: int

    def __post_init__(self):
        n = len(self.multiplicity) - 1
        if n < 3 or n % 2 == 0:
            raise ValueError("path length n must be odd and at least 3")
        if any(m < 1 for m in self.multiplicity):
            raise ValueError("every clique must be nonempty")
        if self.r < self.omega:
            raise ValueError(f"r={self.r} is below the clique number {self.omega}")

    @property
    def n(self) -> int:
        return len(self.multiplicity) - 1

    @property
    def omega(self) -> int:
        m = self.multiplicity
        return max(a + b for a, b in zip(m, m[1:]))

    def graph(self) -> tuple[Graph, list[list[int]]]:
        """The blowup as a graph plus the vertex ids of each clique."""
        g, b = build_blowup(Graph.path(self.n + 1), self.multiplicity)
        return g, b.fibers()


Coloring = dict[int, frozenset]


@dataclass(frozen=True)
class ChainResult:
    coloring: Coloring
    stuck_at: Optional[int] = None

    @property
    def feasible(self) -> bool:
        return self.stuck_at is None


def greedy_chain_extension(
    pb: PathBlowup,
    fixed: Mapping[int, Iterable[int]],
    order: Optional[Sequence[int]] = None,
    reserved: Iterable[int] = (),
    reserved_parity: Optional[int] = None,
    descending: Optional[bool] = None,
) -> ChainResult:
    """Color the cliques of ``order`` one at a time, keeping what ``fixed`` gives.

    A clique may arrive partially colored; it is filled up to its size.  On
    positions of ``reserved_parity`` the ``reserved`` colors go in first.  Free
    slots take the colors shared with the clique two steps back in the sweep,
    then the smallest ids.  ``descending`` sets the sweep direction (inferred
    from ``order`` when omitted).  An unfillable clique is reported in
    ``stuck_at``.
    """
    m = pb.multiplicity
    col: dict[int, set[int]] = {i: set(c) for i, c in fixed.items()}
    if order is None:
        order = [i for i in range(pb.n + 1) if len(col.get(i, ())) < m[i]]
    reserved = sorted(set(reserved))
    palette = range(1, pb.r + 1)
    prev = None
    for i in order:
        down = descending if descending is not None else (prev is not None and i < prev)
        prev = i
        have = col.setdefault(i, set())
        blocked = col.get(i - 1, set()) | col.get(i + 1, set())
        if reserved_parity is not None and i % 2 == reserved_parity:
            for c in reserved:
                if c in have:
                    continue
                if c in blocked or len(have) >= m[i]:
                    return ChainResult(_freeze(col), i)
                have.add(c)
        need = m[i] - len(have)
        if need <= 0:
            continue
        back = col.get(i + 2 if down else i - 2, set())
        avail = [c for c in palette if c not in blocked and c not in have]
        avail.sort(key=lambda c: (c not in back, c))
        if len(avail) < need:
            return ChainResult(_freeze(col), i)
        have.update(avail[:need])
    return ChainResult(_freeze(col))


def _freeze(col: Mapping[int, set]) -> Coloring:
    return {i: frozenset(c) for i, c in sorted(col.items()) if c}


class PathExtensionBug(RuntimeError):
    """The greedy extension got stuck although its preconditions held."""


def path_extension(
    pb: PathBlowup, endpoint_coloring: Mapping[int, Iterable[int]], s: Iterable[int], j: int
) -> Coloring:
    """Extend a coloring of ``V_0`` and ``V_n`` to every clique except ``V_j``.

    Every color of ``s`` ends up on each even-indexed clique.  Requirements:
    ``j`` odd in ``1..n-1``; ``s`` drawn from the colors of ``V_0`` but not
    ``V_n``; ``|s|`` no larger than any even clique.
    """
    n, m, r = pb.n, pb.multiplicity, pb.r
    if set(endpoint_coloring) != {0, n}:
        raise ValueError("endpoint coloring must cover exactly V_0 and V_n")
    first, last = set(endpoint_coloring[0]), set(endpoint_coloring[n])
    if len(first) != m[0] or len(last) != m[n]:
        raise ValueError("endpoint cliques must receive distinct colors, one per vertex")
    if not (first | last) <= set(range(1, r + 1)):
        raise ValueError(f"endpoint colors must lie in 1..{r}")
    if j % 2 == 0 or not 1 <= j <= n - 1:
        raise ValueError("j must be an odd index in 1..n-1")
    s = set(s)
    if not s <= first - last:
        raise ValueError("s must be a subset of colors(V_0) - colors(V_n)")
    if len(s) > min(m[0::2]):
        raise ValueError("|s| exceeds the smallest even-indexed clique")

    fixed: dict[int, set[int]] = {0: first, n: last}
    for i in range(2, n, 2):
        fixed[i] = set(s)
    left = greedy_chain_extension(pb, fixed, order=range(1, j), descending=False)
    if not left.feasible:
        raise PathExtensionBug(f"stuck at V_{left.stuck_at}")
    right = greedy_chain_extension(pb, left.coloring, order=range(n - 1, j, -1), descending=True)
    if not right.feasible:
        raise PathExtensionBug(f"stuck at V_{right.stuck_at}")
    return dict(right.coloring)


def check_path_coloring(pb: PathBlowup, coloring: Mapping[int, Iterable[int]], skip: int) -> bool:
    """Properness of a clique-level coloring of the path blowup minus ``V_skip``."""
    m = pb.multiplicity
    cols = {i: set(c) for i, c in coloring.items()}
    for i in range(pb.n + 1):
        if i == skip:
            if i in cols:
                return False
            continue
        if len(cols.get(i, ())) != m[i] or not cols[i] <= set(range(1, pb.r + 1)):
            return False
        if i + 1 != skip and i + 1 <= pb.n and cols[i] & cols[i + 1]:
            return False
    return True
