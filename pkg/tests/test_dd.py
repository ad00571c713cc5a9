"""Conversion engine tests: H <-> V, dimension, reduction, degeneracies."""

from fractions import Fraction
from itertools import product as iproduct

import pytest
from hypothesis import given, settings, strategies as st

from polydiam import (
    HPolyhedron,
    Infeasible,
    NotPointed,
    VPolyhedron,
    dimension,
    hrep_to_vrep,
    reduce_to_full_dim,
    vrep_to_hrep,
)
from polydiam.constructions import cube, klee_walkup, simplex, transportation
from polydiam.polyhedron import affine_dim, canonical_row

from oracles import brute_force_vertices

# Vertex count of the Klee-Walkup polytope; the value is not part of the
# published description, so it is frozen here from the brute-force oracle.
KLEE_WALKUP_VERTEX_COUNT = 27


def test_cube_vertices_are_sign_vectors():
    for d in (1, 2, 3, 4):
        v = hrep_to_vrep(cube(d))
        expected = {tuple(map(Fraction, signs)) for signs in iproduct((-1, 1), repeat=d)}
        assert set(v.vertices) == expected
        assert v.rays == ()


def test_redundant_row_ignored():
    square = cube(2)
    with_extra = HPolyhedron.from_rows(2, [(1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1),
                                           (3, -1, 0)])
    assert set(hrep_to_vrep(with_extra).vertices) == set(hrep_to_vrep(square).vertices)


def test_klee_walkup_vertex_count_matches_oracle():
    _, q4 = klee_walkup()
    oracle = brute_force_vertices(q4)
    assert len(oracle) == KLEE_WALKUP_VERTEX_COUNT
    assert list(hrep_to_vrep(q4).vertices) == oracle


def test_vrep_segment():
    h = vrep_to_hrep(VPolyhedron.from_points([(0,), (1,)]))
    assert set(h.rows) == {(Fraction(0), (Fraction(1),)),
                           (Fraction(1), (Fraction(-1),))}


def test_vrep_klee_walkup_simplicial():
    vstar, _ = klee_walkup()
    h = vrep_to_hrep(vstar)
    assert h.d == 4
    for b, a in h.rows:
        tight = [p for p in vstar.vertices
                 if b + sum(x * y for x, y in zip(a, p)) == 0]
        assert len(tight) == 4


def test_vrep_crosspolytope_row_count():
    for d in (2, 3, 4):
        pts = []
        for i in range(d):
            e = [0] * d
            e[i] = 1
            pts.append(tuple(e))
            pts.append(tuple(-x for x in e))
        h = vrep_to_hrep(VPolyhedron.from_points(pts))
        assert h.nrows == 2**d


def test_infeasible_is_empty_output():
    h = HPolyhedron.from_rows(1, [(-1, 1), (0, -1)])  # x >= 1 and x <= 0
    v = hrep_to_vrep(h)
    assert v.vertices == () and v.rays == ()


def test_infeasible_with_free_direction_is_still_empty():
    h = HPolyhedron.from_rows(2, [(-1, 1, 0), (0, -1, 0), (0, 0, 1)])
    v = hrep_to_vrep(h)
    assert v.vertices == () and v.rays == ()


def test_not_pointed_raises():
    with pytest.raises(NotPointed):
        hrep_to_vrep(HPolyhedron.from_rows(2, [(0, 1, 0)]))


def test_unbounded_half_strip():
    h = HPolyhedron.from_rows(2, [(0, 1, 0), (0, 0, 1), (1, 0, -1)])
    v = hrep_to_vrep(h)
    assert set(v.vertices) == {(0, 0), (0, 1)}
    assert [tuple(map(int, r)) for r in v.rays] == [(1, 0)]


def test_dimension_square_is_ambient():
    assert dimension(cube(2)) == 2
    h, back = reduce_to_full_dim(cube(2))
    assert h.d == 2
    assert back.apply((Fraction(1), Fraction(-1))) == (Fraction(1), Fraction(-1))


def test_dimension_transportation_segment():
    assert transportation([1, 1], [1, 1]).d == 1


def test_dimension_point():
    h = HPolyhedron.from_rows(1, [(0, 1), (0, -1)])
    assert dimension(h) == 0


def test_dimension_infeasible_raises():
    with pytest.raises(Infeasible):
        dimension(HPolyhedron.from_rows(1, [(-1, 1), (0, -1)]))


def test_dimension_of_line_is_defined():
    # not pointed, still has an affine hull
    assert dimension(HPolyhedron.from_rows(2, [(0, 1, 0), (0, -1, 0)])) == 1


def test_reduce_transportation_birkhoff2():
    h, back = reduce_to_full_dim(
        _raw_transportation([1, 1], [1, 1])
    )
    assert h.d == 1
    v = hrep_to_vrep(h)
    ambient = {back.apply(p) for p in v.vertices}
    # the two permutation matrices, flattened row-major
    assert ambient == {
        (1, 0, 0, 1),
        (0, 1, 1, 0),
    }


def _raw_transportation(a, b):
    p, q = len(a), len(b)
    d = p * q
    rows = []
    for idx in range(d):
        e = [0] * d
        e[idx] = 1
        rows.append((0, *e))
    for i in range(p):
        coeff = [0] * d
        for j in range(q):
            coeff[i * q + j] = 1
        rows.append((-a[i], *coeff))
    for j in range(q):
        coeff = [0] * d
        for i in range(p):
            coeff[i * q + j] = 1
        rows.append((-b[j], *coeff))
    return HPolyhedron.from_rows(d, rows, linearity=range(d, d + p + q))


def test_vrep_lower_dimensional_input():
    # a segment embedded in the plane gets one linearity row and two facets
    h = vrep_to_hrep(VPolyhedron.from_points([(0, 0), (1, 1)]))
    assert len(h.linearity) == 1
    v = hrep_to_vrep(h)
    assert set(v.vertices) == {(0, 0), (1, 1)}


def test_vrep_single_point():
    h = vrep_to_hrep(VPolyhedron.from_points([(2, 3)]))
    assert set(hrep_to_vrep(h).vertices) == {(2, 3)}


def _row_strategy(d):
    coef = st.integers(min_value=-3, max_value=3)
    return st.tuples(st.integers(min_value=0, max_value=3),
                     *[coef for _ in range(d)])


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=3).flatmap(
    lambda d: st.tuples(st.just(d),
                        st.lists(_row_strategy(d), min_size=0, max_size=4)))
)
def test_round_trip_on_boxed_random_rows(data):
    # random rows intersected with the box [-2, 2]^d: bounded, nonempty,
    # full-dimensional is not guaranteed, so compare vertex sets both ways
    d, extra = data
    rows = list(extra)
    for i in range(d):
        e = [0] * d
        e[i] = 1
        rows.append((2, *e))
        rows.append((2, *[-x for x in e]))
    h = HPolyhedron.from_rows(d, rows)
    v = hrep_to_vrep(h)
    assert v.vertices, "box intersection cannot be empty"
    assert set(v.vertices) == set(brute_force_vertices(h))
    if affine_dim(v) == d:  # full-dimensional: round trip is canonical
        h2 = vrep_to_hrep(v)
        v2 = hrep_to_vrep(h2)
        assert set(v2.vertices) == set(v.vertices)
        canon1 = {canonical_row(r) for r in h2.rows}
        h3 = vrep_to_hrep(v2)
        assert {canonical_row(r) for r in h3.rows} == canon1


def test_vrep_quadrant_from_rays():
    q = VPolyhedron.from_points([(0, 0)], rays=[(1, 0), (0, 1)])
    h = vrep_to_hrep(q)
    assert set(h.rows) == {
        (Fraction(0), (Fraction(1), Fraction(0))),
        (Fraction(0), (Fraction(0), Fraction(1))),
    }


def test_vrep_halfline_gets_linearity():
    hl = VPolyhedron.from_points([(0, 0)], rays=[(1, 1)])
    h = vrep_to_hrep(hl)
    assert len(h.linearity) == 1
    v = hrep_to_vrep(h)
    assert v.vertices == ((0, 0),) and v.rays == ((1, 1),)


def test_half_strip_round_trip():
    strip = HPolyhedron.from_rows(2, [(0, 1, 0), (0, 0, 1), (1, 0, -1)])
    v = hrep_to_vrep(strip)
    h2 = vrep_to_hrep(v)
    v2 = hrep_to_vrep(h2)
    assert set(v2.vertices) == set(v.vertices)
    assert set(v2.rays) == set(v.rays)
    assert {canonical_row(r) for r in h2.rows} == {
        canonical_row(r) for r in strip.rows
    }


@settings(max_examples=40, deadline=None)
@given(st.lists(_row_strategy(3), min_size=4, max_size=7))
def test_pointed_unbounded_vertices_match_oracle(rows):
    # no box this time: skip non-pointed draws, compare vertex sets; the
    # oracle enumerates vertices regardless of rays
    from polydiam.ratlin import matrix_rank

    h = HPolyhedron.from_rows(3, rows)
    if matrix_rank([r[1] for r in h.rows]) < 3:
        return  # not pointed: out of scope for vertex enumeration
    v = hrep_to_vrep(h)
    assert sorted(v.vertices) == brute_force_vertices(h)


def test_round_trip_canonical_generators():
    for h in (simplex(3), cube(3), klee_walkup()[1]):
        v = hrep_to_vrep(h)
        h2 = vrep_to_hrep(v)
        assert {canonical_row(r) for r in h2.rows} == {canonical_row(r) for r in h.rows}
        assert set(hrep_to_vrep(h2).vertices) == set(v.vertices)
