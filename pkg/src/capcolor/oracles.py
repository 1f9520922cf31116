"""Exact combinatorial oracles: clique number, stability number, chromatic number.

Also true-twin classes, clique cutsets and a small-n canonical form.  All
solvers are exact and deterministic; they work on integer bitsets and are
meant for desk-scale instances (tens of vertices).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graph import Graph, bits, to_mask

CLIQUE_CUTSET_CAP = 24


class NotComputedError(RuntimeError):
    """Raised when an instance is beyond a solver's declared size cap."""


@dataclass(frozen=True)
class OracleResult:
    """An exact value together with a replayable witness.

    For ω and α the witness is a sorted vertex tuple; for χ it is a coloring
    ``witness[v] in 1..value``.
    """

    value: int
    witness: tuple[int, ...]


# -- cliques ------------------------------------------------------------------


def _color_sort(cand: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    # greedy sequential coloring of cand; vertices listed with nondecreasing color
    order: list[int] = []
    colors: list[int] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append(v)
            colors.append(color)
            rest ^= low
            avail &= ~low & ~adj[v]
    return order, colors


def _max_clique_mask(adj: Sequence[int], cand: int) -> int:
    best = [0, 0]  # [size, mask]

    def expand(r: int, rsize: int, p: int) -> None:
        order, colors = _color_sort(p, adj)
        for i in range(len(order) - 1, -1, -1):
            if rsize + colors[i] <= best[0]:
                return
            v = order[i]
            np_ = p & adj[v]
            if np_:
                expand(r | 1 << v, rsize + 1, np_)
            elif rsize + 1 > best[0]:
                best[0], best[1] = rsize + 1, r | 1 << v
            p &= ~(1 << v)

    if cand:
        expand(0, 0, cand)
    return best[1]


def max_clique_size(g: Graph) -> OracleResult:
    """Clique number with a maximum clique as witness (branch and bound)."""
    mask = _max_clique_mask(g.adj, g.full_mask)
    return OracleResult(mask.bit_count(), tuple(bits(mask)))


def max_stable_set_size(g: Graph) -> OracleResult:
    """Stability number, computed on the true-twin quotient of the complement.

    A stable set meets every true-twin class at most once, so α is unchanged by
    contracting twins; blowups shrink to their skeleton before the search.
    """
    if g.n == 0:
        return OracleResult(0, ())
    classes = true_twin_classes(g)
    reps = [c[0] for c in classes]
    q = len(reps)
    comp_adj = []
    for i, u in enumerate(reps):
        row = 0
        for j, v in enumerate(reps):
            if i != j and not g.adj[u] >> v & 1:
                row |= 1 << j
        comp_adj.append(row)
    mask = _max_clique_mask(comp_adj, (1 << q) - 1)
    witness = tuple(sorted(reps[j] for j in bits(mask)))
    return OracleResult(len(witness), witness)


# -- coloring -----------------------------------------------------------------


def dsatur_coloring(g: Graph) -> list[int]:
    """Heuristic DSATUR coloring with colors starting at 1."""
    n = g.n
    color = [0] * n
    seen = [0] * n  # bitmask of neighbor colors
    for _ in range(n):
        v = max(
            (u for u in range(n) if not color[u]),
            key=lambda u: (seen[u].bit_count(), g.degree(u), -u),
        )
        c = 1
        while seen[v] >> c & 1:
            c += 1
        color[v] = c
        for u in bits(g.adj[v]):
            seen[u] |= 1 << c
    return color


def tabu_coloring(g: Graph, k: int, seed: int = 0, max_iters: int = 20000) -> Optional[list[int]]:
    """Tabu local search for a proper k-coloring; None when the iteration budget runs out.

    Deterministic for a fixed seed.  A None result proves nothing.
    """
    n = g.n
    if n == 0:
        return []
    if k < 1:
        return None
    rng = random.Random(seed)
    nbrs = g.adjacency_lists()
    color = [c - 1 if c <= k else rng.randrange(k) for c in dsatur_coloring(g)]
    # gamma[v][c]: neighbours of v currently colored c
    gamma = [[0] * k for _ in range(n)]
    for v in range(n):
        for u in nbrs[v]:
            gamma[v][color[u]] += 1
    conflicts = sum(gamma[v][color[v]] for v in range(n)) // 2
    tabu = [[0] * k for _ in range(n)]
    best = conflicts
    for it in range(1, max_iters + 1):
        if conflicts == 0:
            return [c + 1 for c in color]
        move, move_delta, ties = None, None, 0
        for v in range(n):
            cv = color[v]
            if not gamma[v][cv]:
                continue
            row = gamma[v]
            for c in range(k):
                if c == cv:
                    continue
                delta = row[c] - row[cv]
                if tabu[v][c] >= it and conflicts + delta >= best:
                    continue
                if move_delta is None or delta < move_delta:
                    move, move_delta, ties = (v, c), delta, 1
                elif delta == move_delta:
                    ties += 1
                    if rng.randrange(ties) == 0:
                        move = (v, c)
        if move is None:
            continue
        v, c = move
        old = color[v]
        color[v] = c
        for u in nbrs[v]:
            gamma[u][old] -= 1
            gamma[u][c] += 1
        conflicts += move_delta
        best = min(best, conflicts)
        tabu[v][old] = it + rng.randrange(10) + int(0.6 * conflicts)
    return [c + 1 for c in color] if conflicts == 0 else None


def _k_coloring(g: Graph, k: int) -> Optional[list[int]]:
    """A proper k-coloring, or None if none exists.

    The search runs on the true-twin quotient: each class of ``m`` twins takes
    a set of ``m`` colors, disjoint from the sets of adjacent classes.  Classes
    are chosen fail-first (least slack), fresh colors are always the lowest
    unused ones, and every uncolored neighbour is forward-checked.
    """
    classes = true_twin_classes(g)
    nq = len(classes)
    index = [0] * g.n
    for i, cls in enumerate(classes):
        for v in cls:
            index[v] = i
    qadj = [to_mask(index[u] for u in bits(g.adj[cls[0]]) if index[u] != i) for i, cls in enumerate(classes)]
    size = [len(c) for c in classes]
    if max(size, default=0) > k:
        return None
    sets = [0] * nq
    forbidden = [0] * nq  # union of the sets on colored neighbours

    def pick(unc: int) -> int:
        best_v, best_key = -1, None
        for v in bits(unc):
            key = (k - forbidden[v].bit_count() - size[v], -(qadj[v] & unc).bit_count(), -size[v])
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        return best_v

    def choices(v: int, used: int, unc: int):
        free = [c for c in range(used) if not forbidden[v] >> c & 1]
        # least constraining first: colors already blocked at other open classes
        free.sort(key=lambda c: -sum(forbidden[w] >> c & 1 for w in bits(unc)))
        m = size[v]
        for r in range(max(0, m - len(free)), min(m, k - used) + 1):
            fresh = ((1 << r) - 1) << used
            for combo in combinations(free, m - r):
                yield to_mask(combo) | fresh, used + r

    def solve(unc: int, used: int) -> bool:
        if not unc:
            return True
        v = pick(unc)
        rest = unc & ~(1 << v)
        nbrs = qadj[v] & rest
        for chosen, nxt in choices(v, used, rest):
            saved = [(w, forbidden[w]) for w in bits(nbrs)]
            ok = True
            for w, f in saved:
                forbidden[w] = f | chosen
                if k - forbidden[w].bit_count() < size[w]:
                    ok = False
            if ok:
                sets[v] = chosen
                if solve(rest, nxt):
                    return True
            for w, f in saved:
                forbidden[w] = f
        return False

    if not solve((1 << nq) - 1, 0):
        return None
    color = [0] * g.n
    for i, cls in enumerate(classes):
        for v, c in zip(cls, bits(sets[i])):
            color[v] = c + 1
    return color


def _feasible(g: Graph, k: int) -> Optional[list[int]]:
    # a short local search finds most feasible k; the complete search decides the rest
    return tabu_coloring(g, k, max_iters=2000) or _k_coloring(g, k)


def chromatic_lower_bound(g: Graph) -> int:
    if g.n == 0:
        return 0
    omega = max_clique_size(g).value
    alpha = max_stable_set_size(g).value
    return max(omega, -(-g.n // alpha))


def exact_chromatic(g: Graph, upper_hint: Optional[int] = None) -> OracleResult:
    """Chromatic number with an optimal coloring (colors ``1..χ``).

    Iterative deepening on k from max(ω, ⌈n/α⌉).  ``upper_hint`` is tried
    first to tighten the incumbent; it never changes the returned value.
    Each k gets a short tabu run before the complete search.
    """
    if g.n == 0:
        return OracleResult(0, ())
    best = dsatur_coloring(g)
    ub = max(best)
    lb = chromatic_lower_bound(g)
    if upper_hint is not None and lb <= upper_hint < ub:
        found = _feasible(g, upper_hint)
        if found is not None:
            best, ub = found, upper_hint
    for k in range(lb, ub):
        found = _feasible(g, k)
        if found is not None:
            best, ub = found, k
            break
    return OracleResult(ub, tuple(_normalize(best)))


def _normalize(coloring: Sequence[int]) -> list[int]:
    # relabel colors by first appearance so the palette is exactly 1..k
    relabel: dict[int, int] = {}
    return [relabel.setdefault(c, len(relabel) + 1) for c in coloring]


# -- twins, cutsets, canonical form ----------------------------------------


def true_twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """Maximal classes of vertices with equal closed neighborhoods, ordered by least member."""
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v] | 1 << v, []).append(v)
    return sorted((tuple(c) for c in groups.values()), key=lambda c: c[0])


def minimal_separators(g: Graph, mask: Optional[int] = None) -> list[int]:
    """All minimal separators of ``G[mask]`` as bitmasks (Berry, Bordat and Cogis closure)."""
    mask = g.full_mask if mask is None else mask

    def border(comp: int) -> int:
        nb = 0
        for v in bits(comp):
            nb |= g.adj[v]
        return nb & mask & ~comp

    found: set[int] = set()
    queue: list[int] = []

    def add(s: int) -> None:
        if s and s not in found:
            found.add(s)
            queue.append(s)

    for v in bits(mask):
        for comp in g.components(mask & ~(g.adj[v] | 1 << v)):
            add(border(comp))
    while queue:
        s = queue.pop()
        for x in bits(s):
            for comp in g.components(mask & ~(s | g.adj[x])):
                add(border(comp))
    return sorted(found, key=lambda s: (s.bit_count(), s))


def has_clique_cutset(g: Graph) -> Optional[tuple[int, ...]]:
    """A clique ``K`` with more components in ``G - K`` than in ``G``, or None.

    Disconnected graphs are searched component by component.  Raises
    NotComputedError above ``CLIQUE_CUTSET_CAP`` vertices.
    """
    if g.n > CLIQUE_CUTSET_CAP:
        raise NotComputedError(f"clique cutset search capped at n={CLIQUE_CUTSET_CAP}")
    for comp in g.components():
        for s in minimal_separators(g, comp):
            if g.is_clique(bits(s)):
                return tuple(bits(s))
    return None


def _refine(cells: list[list[int]], adj: Sequence[int]) -> list[list[int]]:
    while True:
        masks = [to_mask(c) for c in cells]
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            new.extend(groups[s] for s in sorted(groups))
        if len(new) == len(cells):
            return new
        cells = new


def _canonical_weighted(adj: Sequence[int], weights: Sequence[int]):
    n = len(adj)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(weights[v], []).append(v)
    start = [groups[w] for w in sorted(groups)]
    best = [None]

    def certificate(order: list[int]):
        pos = {v: i for i, v in enumerate(order)}
        rows = tuple(to_mask(pos[u] for u in bits(adj[v])) for v in order)
        return (tuple(weights[v] for v in order), rows)

    def search(cells: list[list[int]]) -> None:
        cells = _refine(cells, adj)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            cert = certificate([c[0] for c in cells])
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        cell = cells[target]
        for v in cell:
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(start)
    return best[0]


def canonical_form(g: Graph):
    """Isomorphism-invariant hashable form, for small graphs in tests.

    The graph is reduced to its true-twin quotient with class sizes as vertex
    weights (which determines the graph up to isomorphism), and the quotient is
    canonized by individualization and refinement.
    """
    classes = true_twin_classes(g)
    reps = [c[0] for c in classes]
    index = {v: i for i, c in enumerate(classes) for v in c}
    qadj = [to_mask(index[u] for u in bits(g.adj[r]) if index[u] != i) for i, r in enumerate(reps)]
    weights = [len(c) for c in classes]
    return (g.n, _canonical_weighted(qadj, weights))


def is_proper_coloring(g: Graph, coloring: Sequence[int]) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edges())

