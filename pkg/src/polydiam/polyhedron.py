"""H- and V-representations, incidence, and the combinatorial face tests.

An `HPolyhedron` is a list of closed half-spaces ``b + a.x >= 0`` (rows),
optionally with some rows marked as equalities ("linearity").  A
`VPolyhedron` is a list of vertices plus extreme-ray directions; rays are
empty exactly when the polyhedron is bounded.  `Incidence` records which
vertex is tight on which row; every graph and classification question in
this package is answered from that tightness data, never from floating
point.

The skeleton-graph edge test is the combinatorial minimal-face test (the set
of vertices tight on T(u) & T(v) must be exactly {u, v}, and no ray may be
tight on that row set), which stays correct for degenerate, non-simple
inputs where a rank shortcut would lie.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .ratlin import Vector, dot, matrix_rank, primitive

Row = tuple[Fraction, Vector]  # (b, a) meaning b + a.x >= 0
Point = Vector


class GeometryError(Exception):
    """Base class for domain errors (reported, never a stack trace)."""


class Infeasible(GeometryError):
    """The feasible set is empty."""


class NotPointed(GeometryError):
    """The feasible set contains a line, so it has no vertices."""


class Unbounded(GeometryError):
    """Operation requires a bounded polytope."""


class Disconnected(GeometryError):
    """Graph diameter undefined: some pair is unreachable."""


def make_row(b, a: Sequence) -> Row:
    return (Fraction(b), tuple(Fraction(x) for x in a))


def canonical_row(row: Row) -> Row:
    """Positive-scale a row to primitive integer coefficients.

    Only positive scaling is applied: flipping an inequality's sign would
    change the half-space.  Equality rows get their sign fixed separately
    (see `canonical_equality_row`).
    """
    b, a = row
    prim = primitive((b,) + tuple(a))
    return (Fraction(prim[0]), tuple(Fraction(x) for x in prim[1:]))


def canonical_equality_row(row: Row) -> Row:
    """Like `canonical_row` but with the first nonzero coefficient positive."""
    b, a = canonical_row(row)
    for x in (b, *a):
        if x != 0:
            if x < 0:
                return (-b, tuple(-y for y in a))
            break
    return (b, a)


@dataclass(frozen=True)
class HPolyhedron:
    """Inequality description: rows ``b + a.x >= 0`` in R^d.

    `linearity` holds 0-based indices of rows that are equalities.
    """

    d: int
    rows: tuple[Row, ...]
    linearity: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for b, a in self.rows:
            if len(a) != self.d:
                raise ValueError("row coefficient count must equal d")
        if any(not 0 <= i < len(self.rows) for i in self.linearity):
            raise ValueError("linearity index out of range")

    @classmethod
    def from_rows(cls, d: int, rows: Iterable[Sequence], linearity=()) -> "HPolyhedron":
        made = tuple(make_row(r[0], r[1:]) for r in rows)
        return cls(d, made, frozenset(linearity))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def inequality_indices(self) -> list[int]:
        return [i for i in range(len(self.rows)) if i not in self.linearity]

    def value(self, i: int, x: Sequence) -> Fraction:
        b, a = self.rows[i]
        return b + dot(a, x)

    def contains(self, x: Sequence) -> bool:
        for i in range(len(self.rows)):
            v = self.value(i, x)
            if i in self.linearity:
                if v != 0:
                    return False
            elif v < 0:
                return False
        return True


@dataclass(frozen=True)
class VPolyhedron:
    """Vertex + ray description.  `rays` empty iff the polyhedron is bounded.

    `labels` optionally names the vertices (defaults to v0, v1, ...); the
    Klee-Walkup data uses the letters a..h, w.
    """

    d: int
    vertices: tuple[Point, ...]
    rays: tuple[Vector, ...] = ()
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        for p in self.vertices:
            if len(p) != self.d:
                raise ValueError("vertex dimension mismatch")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertices must be pairwise distinct")
        for r in self.rays:
            if len(r) != self.d or all(x == 0 for x in r):
                raise ValueError("rays must be nonzero of dimension d")
        prims = [primitive(r) for r in self.rays]
        if len(set(prims)) != len(prims):
            raise ValueError("ray directions must be pairwise non-parallel")
        if self.labels is not None and len(self.labels) != len(self.vertices):
            raise ValueError("one label per vertex required")

    @classmethod
    def from_points(cls, points: Iterable[Sequence], rays=(), labels=None) -> "VPolyhedron":
        vs = tuple(tuple(Fraction(x) for x in p) for p in points)
        rs = tuple(tuple(Fraction(x) for x in r) for r in rays)
        d = len(vs[0]) if vs else (len(rs[0]) if rs else 0)
        return cls(d, vs, rs, tuple(labels) if labels is not None else None)

    @property
    def bounded(self) -> bool:
        return not self.rays

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else f"v{i}"

    def all_labels(self) -> tuple[str, ...]:
        return tuple(self.label(i) for i in range(len(self.vertices)))


class Incidence:
    """Vertex/row tightness matrix, stored as one bitmask per vertex."""

    def __init__(self, nrows: int, masks: Sequence[int]):
        self.nrows = nrows
        self.masks = tuple(masks)

    def tight(self, v: int, i: int) -> bool:
        return bool(self.masks[v] >> i & 1)

    def tight_rows(self, v: int) -> frozenset[int]:
        return frozenset(i for i in range(self.nrows) if self.masks[v] >> i & 1)

    def tight_count(self, v: int) -> int:
        return self.masks[v].bit_count()

    def vertices_on_row(self, i: int) -> list[int]:
        return [v for v in range(len(self.masks)) if self.masks[v] >> i & 1]


@dataclass(frozen=True)
class PolyGraph:
    """Simple undirected graph with opaque string node labels."""

    nodes: tuple[str, ...]
    edges: frozenset[tuple[str, str]]  # each pair stored sorted

    def __post_init__(self) -> None:
        known = set(self.nodes)
        if len(known) != len(self.nodes):
            raise ValueError("duplicate node labels")
        for u, v in self.edges:
            if u == v:
                raise ValueError("loops not allowed")
            if u > v:
                raise ValueError("edges must be stored sorted")
            if u not in known or v not in known:
                raise ValueError("edge endpoint not a node")

    @classmethod
    def from_edges(cls, nodes: Iterable[str], edges: Iterable[tuple[str, str]]) -> "PolyGraph":
        norm = frozenset(tuple(sorted(e)) for e in edges)
        return cls(tuple(nodes), norm)

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.nodes}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, node: str) -> int:
        return sum(1 for e in self.edges if node in e)


def incidence(h: HPolyhedron, v: VPolyhedron) -> Incidence:
    """Exact tightness matrix of the pair; errors if some vertex violates a row."""
    masks = []
    for k, p in enumerate(v.vertices):
        m = 0
        for i in range(h.nrows):
            val = h.value(i, p)
            if val == 0:
                m |= 1 << i
            elif val < 0 or (i in h.linearity and val != 0):
                raise ValueError(
                    f"vertex {v.label(k)} violates row {i + 1}: H and V are inconsistent"
                )
        masks.append(m)
    return Incidence(h.nrows, masks)


def _ray_masks(h: HPolyhedron, v: VPolyhedron) -> list[int]:
    masks = []
    for r in v.rays:
        m = 0
        for i, (_, a) in enumerate(h.rows):
            if dot(a, r) == 0:
                m |= 1 << i
        masks.append(m)
    return masks


def skeleton_graph(h: HPolyhedron, v: VPolyhedron, inc: Incidence) -> PolyGraph:
    """Graph of the polyhedron: vertices plus bounded edges.

    Edge test: the minimal face containing {u, v} is the set of points tight
    on T(u) & T(v); it is the segment uv exactly when its vertex set is
    {u, v} and no extreme ray is tight on all those rows.
    """
    n = len(v.vertices)
    tmasks = inc.masks
    rmasks = _ray_masks(h, v)
    labels = v.all_labels()
    edges = []
    for i in range(n):
        ti = tmasks[i]
        for j in range(i + 1, n):
            z = ti & tmasks[j]
            if any(tmasks[k] & z == z for k in range(n) if k != i and k != j):
                continue
            if any(rm & z == z for rm in rmasks):
                continue  # minimal face is unbounded, not an edge
            edges.append((labels[i], labels[j]))
    return PolyGraph.from_edges(labels, edges)


def facet_row_indices(h: HPolyhedron, v: VPolyhedron, inc: Incidence) -> list[int]:
    """Indices of irredundant, deduplicated facet rows.

    A row is facet-defining when its tight vertex set (plus tight rays) has
    affine dimension d - 1 inside the polyhedron's affine hull; duplicated
    rows are reported once.  This is the `n` of every Hirsch quantity.
    """
    rmasks = _ray_masks(h, v)
    seen: set[Row] = set()
    out = []
    for i in h.inequality_indices():
        canon = canonical_row(h.rows[i])
        if canon in seen:
            continue
        pts = [v.vertices[k] for k in inc.vertices_on_row(i)]
        dirs = [v.rays[k] for k in range(len(v.rays)) if rmasks[k] >> i & 1]
        if not pts:
            continue
        p0 = pts[0]
        span = [[x - y for x, y in zip(p, p0)] for p in pts[1:]]
        span += [list(r) for r in dirs]
        if matrix_rank(span) == affine_dim(v) - 1:
            seen.add(canon)
            out.append(i)
    return out


def affine_dim(v: VPolyhedron) -> int:
    if not v.vertices:
        return -1
    p0 = v.vertices[0]
    span = [[x - y for x, y in zip(p, p0)] for p in v.vertices[1:]]
    span += [list(r) for r in v.rays]
    return matrix_rank(span)


def dual_graph(h: HPolyhedron, v: VPolyhedron, inc: Incidence) -> PolyGraph:
    """Facet-adjacency graph: facets joined when they meet in a ridge.

    Two facet rows are adjacent iff their shared tight vertices span an
    affine space of dimension d - 2.  Only bounded polytopes: with rays the
    vertex-only test would be wrong.
    """
    if v.rays:
        raise Unbounded("dual graph requires a bounded polytope")
    d = h.d
    facets = facet_row_indices(h, v, inc)
    labels = {i: f"f{i + 1}" for i in facets}
    edges = []
    for x in range(len(facets)):
        i = facets[x]
        for y in range(x + 1, len(facets)):
            j = facets[y]
            shared = [v.vertices[k] for k in range(len(v.vertices))
                      if inc.masks[k] >> i & 1 and inc.masks[k] >> j & 1]
            if len(shared) < d - 1:
                continue
            p0 = shared[0]
            span = [[a - b for a, b in zip(p, p0)] for p in shared[1:]]
            if matrix_rank(span) == d - 2:
                edges.append((labels[i], labels[j]))
    return PolyGraph.from_edges([labels[i] for i in facets], edges)


def classify(h: HPolyhedron, v: VPolyhedron, inc: Incidence) -> tuple[bool, bool]:
    """(simple, simplicial) for a bounded full-dimensional polytope.

    Simple: every vertex tight on exactly d irredundant facet rows.
    Simplicial: every facet has exactly d tight vertices.
    """
    if v.rays:
        raise Unbounded("classification requires a bounded polytope")
    d = h.d
    if affine_dim(v) != d:
        raise GeometryError("classification requires a full-dimensional polytope")
    facets = facet_row_indices(h, v, inc)
    fmask = 0
    for i in facets:
        fmask |= 1 << i
    simple = all((m & fmask).bit_count() == d for m in inc.masks)
    simplicial = all(len(inc.vertices_on_row(i)) == d for i in facets)
    return simple, simplicial


def polar(v: VPolyhedron) -> tuple[HPolyhedron, Vector]:
    """Polar polytope of a full-dimensional bounded V-polytope.

    Translates by the negated vertex centroid so the origin is interior,
    then emits one row ``1 - p.x >= 0`` per translated vertex p.  Returns
    the H-description whose vertex set is the polar, and the translation
    that was applied to the input points.
    """
    if v.rays:
        raise Unbounded("polar requires a bounded polytope")
    if affine_dim(v) != v.d:
        raise GeometryError("polar requires a full-dimensional polytope")
    m = len(v.vertices)
    centroid = tuple(sum(p[j] for p in v.vertices) / m for j in range(v.d))
    shift = tuple(-c for c in centroid)
    rows = tuple(
        (Fraction(1), tuple(-(p[j] + shift[j]) for j in range(v.d)))
        for p in v.vertices
    )
    return HPolyhedron(v.d, rows), shift
