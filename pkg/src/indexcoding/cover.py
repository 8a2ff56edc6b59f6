"""Minimum clique cover of the cross-neighbor graph.

A clique cover of g is a proper coloring of g's complement, so the exact
solver runs a DSATUR-ordered branch-and-bound coloring on the complement of
each connected component (cliques never span components).  Everything is
deterministic: ties break on ascending vertex index and parts are emitted
sorted by smallest member, so covers can be asserted exactly in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceeded
from .graph import DerivedGraph, _bits, connected_components

DEFAULT_EXACT_CAP = 40


@dataclass(frozen=True)
class CliqueCover:
    """A partition of graph vertices into cliques; len(parts) is the rate."""

    parts: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.parts)

    def assignment(self, vertex_count: int) -> list[int]:
        """Map each vertex to the index of its part."""
        out = [-1] * vertex_count
        for t, part in enumerate(self.parts):
            for v in part:
                out[v] = t
        return out


def _canonical(parts: Sequence[Sequence[int]]) -> CliqueCover:
    ordered = sorted((tuple(sorted(p)) for p in parts), key=lambda p: p[0])
    return CliqueCover(tuple(ordered))


def verify_cover(g: DerivedGraph, c: CliqueCover) -> str | None:
    """Return None when c is a partition into cliques, else a diagnostic."""
    seen: set[int] = set()
    for t, part in enumerate(c.parts):
        if not part:
            return f"part {t} is empty"
        for v in part:
            if not 0 <= v < g.vertex_count:
                return f"part {t}: vertex {v} does not exist"
            if v in seen:
                return f"not a partition: vertex {v} appears twice"
            seen.add(v)
        for i, p in enumerate(part):
            for q in part[i + 1 :]:
                if not g.has_edge(p, q):
                    return f"part {t} is not a clique: missing edge ({p}, {q})"
    if len(seen) != g.vertex_count:
        missing = sorted(set(range(g.vertex_count)) - seen)
        return f"not a partition: vertices {missing} uncovered"
    return None


def greedy_cover(g: DerivedGraph) -> CliqueCover:
    """First-fit cover: scan vertices ascending, join the first part whose
    every member is adjacent, else open a new part."""
    parts: list[list[int]] = []
    masks: list[int] = []  # intersection of members' adjacency rows
    for v in range(g.vertex_count):
        for i, mask in enumerate(masks):
            if (mask >> v) & 1:
                parts[i].append(v)
                masks[i] = mask & g.adjacency[v]
                break
        else:
            parts.append([v])
            masks.append(g.adjacency[v])
    return _canonical(parts)


def exact_min_cover(g: DerivedGraph, cap: int = DEFAULT_EXACT_CAP) -> CliqueCover:
    """Minimum clique cover via exact coloring of the complement graph.

    Solved per connected component.  Raises CapExceeded above ``cap``
    vertices; use :func:`greedy_cover` instead for large graphs.
    """
    if g.vertex_count > cap:
        raise CapExceeded(
            f"exact cover cap exceeded ({g.vertex_count} vertices > {cap}); "
            "use greedy_cover"
        )
    parts: list[tuple[int, ...]] = []
    for comp in connected_components(g):
        sub = g.induced_subgraph(comp)
        colors = _exact_coloring_of_complement(sub)
        classes: dict[int, list[int]] = {}
        for local, color in enumerate(colors):
            classes.setdefault(color, []).append(comp[local])
        parts.extend(tuple(vs) for vs in classes.values())
    return _canonical(parts)


def _complement_rows(g: DerivedGraph) -> list[int]:
    full = (1 << g.vertex_count) - 1
    return [full & ~g.adjacency[v] & ~(1 << v) for v in range(g.vertex_count)]


def _exact_coloring_of_complement(g: DerivedGraph) -> list[int]:
    return _exact_coloring(g.vertex_count, _complement_rows(g))


def _dsatur_greedy(n: int, adj: list[int]) -> list[int]:
    colors = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    degrees = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (len(neighbor_colors[u]), degrees[u], -u),
        )
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        for u in _bits(adj[v]):
            if colors[u] < 0:
                neighbor_colors[u].add(c)
    return colors


def _greedy_clique(n: int, adj: list[int]) -> list[int]:
    if n == 0:
        return []
    degrees = [adj[v].bit_count() for v in range(n)]
    start = max(range(n), key=lambda v: (degrees[v], -v))
    clique = [start]
    candidates = adj[start]
    while candidates:
        v = max(_bits(candidates), key=lambda u: ((candidates & adj[u]).bit_count(), -u))
        clique.append(v)
        candidates &= adj[v]
    return sorted(clique)


def _exact_coloring(n: int, adj: list[int]) -> list[int]:
    """Minimum proper coloring of the graph given as bitmask adjacency rows.

    DSATUR-ordered branch and bound: greedy DSATUR supplies the initial upper
    bound, a greedy maximal clique the lower bound, and the clique is
    pre-colored to break color symmetry.  Deterministic tie-breaks throughout
    (saturation, then degree, then ascending index).
    """
    if n == 0:
        return []
    greedy = _dsatur_greedy(n, adj)
    best_k = max(greedy) + 1
    best = list(greedy)
    clique = _greedy_clique(n, adj)
    lower = len(clique)
    if lower == best_k:
        return best

    colors = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    degrees = [adj[v].bit_count() for v in range(n)]
    for c, v in enumerate(clique):
        colors[v] = c
        for u in _bits(adj[v]):
            if colors[u] < 0:
                neighbor_colors[u].add(c)

    uncolored = [v for v in range(n) if colors[v] < 0]

    def search(num_colored: int, used: int) -> None:
        nonlocal best_k, best
        if used >= best_k:
            return
        if num_colored == n:
            best_k = used
            best = colors[:]
            return
        v = max(
            (u for u in uncolored if colors[u] < 0),
            key=lambda u: (len(neighbor_colors[u]), degrees[u], -u),
        )
        limit = min(used + 1, best_k - 1)
        for c in range(limit):
            if c in neighbor_colors[v]:
                continue
            colors[v] = c
            touched = []
            for u in _bits(adj[v]):
                if colors[u] < 0 and c not in neighbor_colors[u]:
                    neighbor_colors[u].add(c)
                    touched.append(u)
            search(num_colored + 1, max(used, c + 1))
            colors[v] = -1
            for u in touched:
                neighbor_colors[u].discard(c)
            if best_k == lower:
                return

    search(n - len(uncolored), len(clique))
    return best
