"""Distances, diameters, non-revisiting paths, and monotone paths.

Distances and diameters are plain BFS on the skeleton graph.  The
non-revisiting search asks for an edge path that never re-enters a facet it
previously left; such paths are never longer than n - d (each step must
enter a facet never seen before, and the d facets of the start vertex do
not count), so the backtracking search is cut off at that depth and is
therefore complete: if it fails, no non-revisiting path exists at all.

Search state is (current vertex, set of facets left so far); the set of
facets merely visited does not constrain future moves, so memoizing on the
left-set is sound.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from math import inf

from .polyhedron import (
    Disconnected,
    GeometryError,
    HPolyhedron,
    Incidence,
    PolyGraph,
    Unbounded,
    VPolyhedron,
    facet_row_indices,
)
from .ratlin import dot


@dataclass(frozen=True)
class PathReport:
    source: str
    target: str
    length: int
    path: tuple[str, ...]
    kind: str  # shortest | non-revisiting | monotone

    def to_json(self) -> str:
        return json.dumps(
            {
                "source": self.source,
                "target": self.target,
                "length": self.length,
                "path": list(self.path),
                "kind": self.kind,
            }
        )


@dataclass(frozen=True)
class PropertyResult:
    """Outcome of an exhaustive all-pairs check.

    `holds` is None when the search budget ran out before an answer was
    proven (never reported as a silent False).
    """

    holds: bool | None
    witness: tuple[str, str] | None = None


@dataclass(frozen=True)
class MonotoneReport:
    optimum: str
    worst_length: int
    unreachable: tuple[str, ...] = ()


def bfs_distances(graph: PolyGraph, source: str) -> dict[str, int | float]:
    """Exact shortest-path distances from `source`; unreachable nodes get inf."""
    if source not in graph.nodes:
        raise ValueError(f"unknown source node {source!r}")
    adj = graph.adjacency()
    dist: dict[str, int | float] = {v: inf for v in graph.nodes}
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in sorted(adj[u]):
            if dist[w] is inf:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(graph: PolyGraph) -> tuple[int, tuple[str, str]]:
    """Maximum pairwise distance plus one witness pair.

    Ties are broken by node order, so the witness is reproducible.
    """
    best = -1
    witness: tuple[str, str] | None = None
    for source in graph.nodes:
        dist = bfs_distances(graph, source)
        far = max(dist.values())
        if far is inf:
            raise Disconnected("graph is disconnected: diameter undefined")
        if far > best:
            best = int(far)
            witness = (source, next(v for v in graph.nodes if dist[v] == far))
    if witness is None:
        raise ValueError("diameter of an empty graph is undefined")
    return best, witness


class SearchBudget:
    """Shared node-expansion counter for the backtracking searches."""

    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def spend(self) -> bool:
        self.used += 1
        return self.limit is None or self.used <= self.limit


def nonrevisiting_dfs(
    adjacency: dict[int, list[int]],
    masks: list[int],
    source: int,
    target: int,
    cap: int,
    budget: SearchBudget,
) -> list[int] | None:
    """Bounded-depth search for a non-revisiting walk in mask space.

    `masks[i]` is the bitmask of facets (or, dually, vertex stars) the node
    is on.  A move into `w` is allowed when w's mask avoids everything
    already left; proven-failed (node, left-set, depth) states are memoized.
    Returns the node path, or None when no path of length <= cap exists.
    Raises TimeoutError when the budget is exhausted.
    """
    memo: dict[tuple[int, int], int] = {}

    def dfs(node: int, left: int, remaining: int) -> list[int] | None:
        if node == target:
            return [node]
        if remaining == 0:
            return None
        key = (node, left)
        if memo.get(key, -1) >= remaining:
            return None
        if not budget.spend():
            raise TimeoutError("search budget exhausted")
        here = masks[node]
        for nxt in adjacency[node]:
            if masks[nxt] & left:
                continue
            tail = dfs(nxt, left | (here & ~masks[nxt]), remaining - 1)
            if tail is not None:
                return [node] + tail
        memo[key] = remaining
        return None

    for depth in range(cap + 1):
        found = dfs(source, 0, depth)
        if found is not None:
            return found
    return None


def _facet_masks(
    h: HPolyhedron, v: VPolyhedron, inc: Incidence
) -> tuple[list[int], int]:
    """Per-vertex bitmasks over the irredundant facet rows, plus facet count."""
    facets = facet_row_indices(h, v, inc)
    masks = []
    for m in inc.masks:
        compact = 0
        for pos, row in enumerate(facets):
            if m >> row & 1:
                compact |= 1 << pos
        masks.append(compact)
    return masks, len(facets)


def _index_adjacency(graph: PolyGraph, v: VPolyhedron) -> dict[int, list[int]]:
    where = {label: i for i, label in enumerate(v.all_labels())}
    adj: dict[int, list[int]] = {i: [] for i in range(len(v.vertices))}
    for a, b in sorted(graph.edges):
        adj[where[a]].append(where[b])
        adj[where[b]].append(where[a])
    return {i: sorted(neigh) for i, neigh in adj.items()}


def nonrevisiting_path(
    h: HPolyhedron,
    v: VPolyhedron,
    inc: Incidence,
    graph: PolyGraph,
    source: str,
    target: str,
    budget: int | None = None,
) -> PathReport | None:
    """A path from source to target that never re-enters an abandoned facet.

    Returns None when exhaustive backtracking proves no such path exists.
    The returned path is a shortest non-revisiting one and its length is
    guaranteed (and asserted) to be at most n - d.
    """
    if v.rays:
        raise Unbounded("non-revisiting search requires a bounded polytope")
    if source == target:
        raise ValueError("source and target must differ")
    labels = list(v.all_labels())
    for name in (source, target):
        if name not in labels:
            raise ValueError(f"unknown vertex {name!r}")
    masks, nfacets = _facet_masks(h, v, inc)
    cap = nfacets - h.d
    adj = _index_adjacency(graph, v)
    found = nonrevisiting_dfs(
        adj, masks, labels.index(source), labels.index(target), cap, SearchBudget(budget)
    )
    if found is None:
        return None
    assert len(found) - 1 <= cap
    return PathReport(
        source=source,
        target=target,
        length=len(found) - 1,
        path=tuple(labels[i] for i in found),
        kind="non-revisiting",
    )


def nonrevisiting_property(
    h: HPolyhedron,
    v: VPolyhedron,
    inc: Incidence,
    graph: PolyGraph,
    budget: int | None = 20_000_000,
) -> PropertyResult:
    """Whether every vertex pair admits a non-revisiting path.

    Non-revisiting is symmetric under path reversal (each facet's tight
    stretch must be one interval), so unordered pairs suffice.  Budget
    exhaustion gives holds=None, never a silent False.
    """
    if v.rays:
        raise Unbounded("non-revisiting search requires a bounded polytope")
    masks, nfacets = _facet_masks(h, v, inc)
    cap = nfacets - h.d
    adj = _index_adjacency(graph, v)
    labels = v.all_labels()
    shared = SearchBudget(budget)
    m = len(labels)
    try:
        for i in range(m):
            for j in range(i + 1, m):
                if nonrevisiting_dfs(adj, masks, i, j, cap, shared) is None:
                    return PropertyResult(holds=False, witness=(labels[i], labels[j]))
    except TimeoutError:
        return PropertyResult(holds=None, witness=None)
    return PropertyResult(holds=True, witness=None)


def monotone_eccentricity(
    h: HPolyhedron,
    v: VPolyhedron,
    inc: Incidence,
    graph: PolyGraph,
    c,
) -> MonotoneReport:
    """Worst monotone path length toward the unique c-maximal vertex.

    Each edge is directed toward strictly larger c-value; a functional that
    ties on any edge is rejected (callers perturb, we do not).  For every
    source the shortest strictly-increasing path to the optimum is taken;
    sources with no monotone route are reported, not silently dropped.
    """
    if v.rays:
        raise Unbounded("monotone analysis requires a bounded polytope")
    values = [dot(c, p) for p in v.vertices]
    labels = v.all_labels()
    top = max(values)
    winners = [i for i, val in enumerate(values) if val == top]
    if len(winners) > 1:
        raise GeometryError(
            f"non-unique optimum: {labels[winners[0]]} and {labels[winners[1]]} tie"
        )
    opt = winners[0]
    where = {label: i for i, label in enumerate(labels)}
    into: dict[int, list[int]] = {i: [] for i in range(len(labels))}
    for a, b in graph.edges:
        ia, ib = where[a], where[b]
        if values[ia] == values[ib]:
            raise GeometryError(f"tie on edge {a}-{b}: perturb the functional")
        lo, hi = (ia, ib) if values[ia] < values[ib] else (ib, ia)
        into[hi].append(lo)
    dist = {opt: 0}
    queue = deque([opt])
    while queue:
        u = queue.popleft()
        for w in into[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    unreachable = tuple(labels[i] for i in range(len(labels)) if i not in dist)
    worst = max(dist.values())
    return MonotoneReport(
        optimum=labels[opt], worst_length=worst, unreachable=unreachable
    )
