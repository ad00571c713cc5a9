"""Exact conversion between H- and V-descriptions via double description.

Both directions run on a homogenization cone with primitive-integer
arithmetic throughout:

* H -> V: the polyhedron {x : b + a.x >= 0} lifts to the pointed cone
  {(t, x) : t >= 0, b t + a.x >= 0}; extreme rays with t > 0 are vertices,
  rays with t = 0 are extreme directions.  Equality rows are eliminated
  first by exact substitution, so the cone step only ever sees
  inequalities.
* V -> H: the facet inequalities (b, a) of conv(V) + cone(R) form the cone
  {(b, a) : b + a.v >= 0 for all vertices, a.r >= 0 for all rays}; its
  extreme rays with a nonzero linear part are exactly the facet rows when
  the input is full-dimensional.  Lower-dimensional input is projected onto
  the free coordinates of its affine hull first and the facets lifted back.

Ray insertion order is deterministic (rows sorted lexicographically after
canonical scaling) and ray adjacency uses the combinatorial zero-set test,
which is correct for degenerate inputs where a rank shortcut is not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyhedron import (
    HPolyhedron,
    Infeasible,
    NotPointed,
    Row,
    VPolyhedron,
    canonical_equality_row,
    canonical_row,
)
from .ratlin import Vector, dot, invert, matrix_rank, nullspace, primitive, row_echelon


def _cone_extreme_rays(rows: list[tuple[int, ...]], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {y : r.y >= 0 for r in rows}.

    `rows` must be primitive integer vectors whose rank is `dim`; they are
    deduplicated and processed in sorted order.  Returns primitive integer
    rays; returns [] when the cone is the origin alone.
    """
    rows = sorted(set(rows))
    if matrix_rank(rows) < dim:
        raise NotPointed("cone has a nonzero lineality space")

    # Greedy initial basis in insertion order, then its inverse columns are
    # the extreme rays of the simplicial start cone.
    basis: list[tuple[int, ...]] = []
    basis_idx: list[int] = []
    ech: list[list[Fraction]] = []
    for idx, row in enumerate(rows):
        trial = ech + [[Fraction(x) for x in row]]
        if len(row_echelon(trial)) > len(ech):
            ech = trial
            basis.append(row)
            basis_idx.append(idx)
            if len(basis) == dim:
                break
    inv = invert(basis)
    assert inv is not None
    rays = [primitive([inv[i][j] for i in range(dim)]) for j in range(dim)]
    # zero-set bitmasks are indexed by processed-row position
    masks = [(1 << dim) - 1 ^ (1 << j) for j in range(dim)]

    processed = len(basis)
    remaining = [rows[i] for i in range(len(rows)) if i not in set(basis_idx)]
    for row in remaining:
        vals = [dot(row, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        if not neg:
            for k in zero:
                masks[k] |= 1 << processed
            processed += 1
            continue

        new_rays: list[tuple[int, ...]] = []
        new_masks: list[int] = []
        for p in pos:
            for q in neg:
                z = masks[p] & masks[q]
                if z.bit_count() < dim - 2:
                    continue
                if any(
                    masks[r] & z == z for r in range(len(rays)) if r != p and r != q
                ):
                    continue  # not adjacent: some third ray is tight on z
                combo = tuple(
                    vals[p] * rays[q][i] - vals[q] * rays[p][i]
                    for i in range(dim)
                )
                new_rays.append(primitive(combo))
                new_masks.append(z | 1 << processed)

        keep_rays = [rays[k] for k in pos + zero]
        keep_masks = [
            masks[k] | (1 << processed if k in zero else 0) for k in pos + zero
        ]
        rays = keep_rays + new_rays
        masks = keep_masks + new_masks
        processed += 1
    return rays


def _eliminate_equalities(
    h: HPolyhedron,
) -> tuple[Vector, list[Vector], list[Row]] | None:
    """Solve the linearity rows exactly.

    Returns (particular point, nullspace basis, reduced inequality rows) or
    None when the equality system is inconsistent.  Without equalities this
    is the identity parametrization.
    """
    d = h.d
    if not h.linearity:
        x0 = tuple(Fraction(0) for _ in range(d))
        basis = [
            tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d)
        ]
        return x0, basis, [h.rows[i] for i in h.inequality_indices()]

    aug = [
        [*h.rows[i][1], -h.rows[i][0]] for i in sorted(h.linearity)
    ]  # a.x = -b
    pivots = row_echelon(aug)
    if d in pivots:
        return None
    x0_list = [Fraction(0)] * d
    for r, c in enumerate(pivots):
        x0_list[c] = aug[r][d]
    x0 = tuple(x0_list)
    basis = nullspace([row[:d] for row in aug])
    reduced = []
    for i in h.inequality_indices():
        b, a = h.rows[i]
        b2 = b + dot(a, x0)
        a2 = tuple(dot(a, n) for n in basis)
        reduced.append((b2, a2))
    return x0, basis, reduced


def hrep_to_vrep(h: HPolyhedron) -> VPolyhedron:
    """All vertices and one representative per extreme ray, exactly.

    Empty output signals infeasibility.  Raises NotPointed when the
    feasible set contains a line (it then has no vertices at all).
    """
    elim = _eliminate_equalities(h)
    if elim is None:
        return VPolyhedron(h.d, (), ())
    x0, basis, reduced = elim
    k = len(basis)

    if k == 0:
        feasible = all(b >= 0 for b, _ in reduced)
        return VPolyhedron(h.d, (x0,) if feasible else (), ())

    if matrix_rank([a for _, a in reduced]) < k:
        raise NotPointed("feasible set contains a line: no vertices exist")

    cone_rows = {primitive((1,) + (0,) * k)}
    for b, a in reduced:
        cone_rows.add(primitive((b, *a)))
    rays = _cone_extreme_rays(sorted(cone_rows), k + 1)

    verts: list[Vector] = []
    dirs: list[Vector] = []
    for ray in rays:
        t, y = ray[0], ray[1:]
        if t > 0:
            red = [Fraction(c, t) for c in y]
            verts.append(
                tuple(
                    x0[j] + sum(red[i] * basis[i][j] for i in range(k))
                    for j in range(h.d)
                )
            )
        else:
            amb = tuple(
                sum(y[i] * basis[i][j] for i in range(k)) for j in range(h.d)
            )
            dirs.append(tuple(Fraction(z) for z in primitive(amb)))
    if not verts:
        return VPolyhedron(h.d, (), ())  # pointed and vertex-free: infeasible
    return VPolyhedron(h.d, tuple(sorted(verts)), tuple(sorted(dirs)))


@dataclass(frozen=True)
class AffineMap:
    """x = offset + matrix . y, mapping reduced coordinates back to ambient."""

    offset: Vector
    columns: tuple[Vector, ...]  # one ambient vector per reduced coordinate

    def apply(self, y: Vector) -> Vector:
        return tuple(
            self.offset[j] + sum(c * col[j] for c, col in zip(y, self.columns))
            for j in range(len(self.offset))
        )


def _affine_hull(h: HPolyhedron) -> tuple[Vector, list[Vector]]:
    """A point of the polyhedron and a direction basis of its affine hull.

    Works for non-pointed input by first slicing away the lineality space
    (adding u.x = 0 for a lineality basis u keeps the set nonempty and cuts
    its dimension by exactly the lineality dimension).
    """
    lin_dirs = nullspace([a for _, a in h.rows])
    if lin_dirs:
        extra = tuple((Fraction(0), u) for u in lin_dirs)
        sliced = HPolyhedron(
            h.d,
            h.rows + extra,
            h.linearity | frozenset(range(h.nrows, h.nrows + len(extra))),
        )
        v = hrep_to_vrep(sliced)
    else:
        v = hrep_to_vrep(h)
    if not v.vertices:
        raise Infeasible("infeasible")
    p0 = v.vertices[0]
    span = [tuple(x - y for x, y in zip(p, p0)) for p in v.vertices[1:]]
    span += [tuple(r) for r in v.rays]
    span += [tuple(u) for u in lin_dirs]
    rows = [list(s) for s in span]
    pivots_keep: list[Vector] = []
    ech: list[list[Fraction]] = []
    for s in rows:
        trial = ech + [[Fraction(x) for x in s]]
        if len(row_echelon(trial)) > len(ech):
            ech = trial
            pivots_keep.append(tuple(Fraction(x) for x in s))
    return p0, pivots_keep


def dimension(h: HPolyhedron) -> int:
    """Dimension of the affine hull of the feasible set."""
    _, basis = _affine_hull(h)
    return len(basis)


def reduce_to_full_dim(h: HPolyhedron) -> tuple[HPolyhedron, AffineMap]:
    """Rewrite `h` in coordinates of its own affine hull.

    The reduced polyhedron is full-dimensional; the returned map
    reconstructs ambient points exactly.  Rows that become identically
    satisfied (equalities of the hull, constant-true inequalities) are
    dropped.
    """
    x0, basis = _affine_hull(h)
    k = len(basis)
    if k == h.d:
        identity = AffineMap(
            tuple(Fraction(0) for _ in range(h.d)),
            tuple(
                tuple(Fraction(int(i == j)) for j in range(h.d)) for i in range(h.d)
            ),
        )
        if not h.linearity:
            return h, identity
        kept = tuple(h.rows[i] for i in h.inequality_indices())
        return HPolyhedron(h.d, kept), identity
    back = AffineMap(x0, tuple(basis))
    rows: list[Row] = []
    for i in h.inequality_indices():
        b, a = h.rows[i]
        b2 = b + dot(a, x0)
        a2 = tuple(dot(a, n) for n in basis)
        if all(x == 0 for x in a2):
            continue  # constant on the hull; feasibility makes it vacuous
        rows.append((b2, a2))
    return HPolyhedron(k, tuple(rows)), back


def _vrep_to_hrep_fulldim(v: VPolyhedron) -> HPolyhedron:
    cone_rows = set()
    for p in v.vertices:
        cone_rows.add(primitive((1, *p)))
    for r in v.rays:
        cone_rows.add(primitive((0, *r)))
    rays = _cone_extreme_rays(sorted(cone_rows), v.d + 1)
    rows = []
    for ray in rays:
        b, a = ray[0], ray[1:]
        if all(x == 0 for x in a):
            continue  # the artifact row "1 >= 0" of unbounded input
        rows.append(canonical_row((Fraction(b), tuple(Fraction(x) for x in a))))
    return HPolyhedron(v.d, tuple(sorted(rows)))


def vrep_to_hrep(v: VPolyhedron) -> HPolyhedron:
    """Irredundant inequality description of conv(vertices) + cone(rays).

    Facet rows come out canonically scaled (primitive integers) and sorted.
    Lower-dimensional input additionally gets linearity rows cutting out its
    affine hull.
    """
    if not v.vertices:
        raise ValueError("V-representation needs at least one vertex")
    p0 = v.vertices[0]
    span = [[x - y for x, y in zip(p, p0)] for p in v.vertices[1:]]
    span += [list(r) for r in v.rays]
    normals = nullspace(span) if span else [
        tuple(Fraction(int(i == j)) for j in range(v.d)) for i in range(v.d)
    ]
    if not normals:
        return _vrep_to_hrep_fulldim(v)

    # Affine hull equations e.x = e.p0, one per normal direction.
    eq_rows = [
        canonical_equality_row((-dot(e, p0), tuple(e))) for e in normals
    ]
    eq_coeffs = [[*a] for _, a in eq_rows]
    pivots = row_echelon(eq_coeffs)
    free = [c for c in range(v.d) if c not in pivots]
    if not free:
        return HPolyhedron(v.d, tuple(sorted(eq_rows)), frozenset(range(len(eq_rows))))

    proj = VPolyhedron(
        len(free),
        tuple(tuple(p[j] for j in free) for p in v.vertices),
        tuple(tuple(r[j] for j in free) for r in v.rays),
    )
    reduced = _vrep_to_hrep_fulldim(proj)
    lifted: list[Row] = []
    for b, a in reduced.rows:
        amb = [Fraction(0)] * v.d
        for coef, j in zip(a, free):
            amb[j] = coef
        lifted.append((b, tuple(amb)))
    all_rows = tuple(sorted(eq_rows)) + tuple(sorted(lifted))
    return HPolyhedron(v.d, all_rows, frozenset(range(len(eq_rows))))
