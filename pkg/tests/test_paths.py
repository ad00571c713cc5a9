"""BFS, diameters, non-revisiting searches, monotone paths."""

from fractions import Fraction
from itertools import combinations
from math import inf

import pytest

from polydiam import (
    Disconnected,
    GeometryError,
    PolyGraph,
    hrep_to_vrep,
    incidence,
    skeleton_graph,
)
from polydiam.constructions import crosspolytope, cube, klee_walkup, ngon, simplex
from polydiam.paths import (
    bfs_distances,
    diameter,
    monotone_eccentricity,
    nonrevisiting_path,
    nonrevisiting_property,
)
from polydiam.polyhedron import facet_row_indices

from corpus import converted, corpus
from oracles import nonrevisiting_exists_naive, path_is_nonrevisiting, pentagon_monotone_worst


def _pipeline(h):
    v = hrep_to_vrep(h)
    inc = incidence(h, v)
    return h, v, inc, skeleton_graph(h, v, inc)


def test_bfs_cube_hamming():
    h, v, inc, g = _pipeline(cube(3))
    labels = v.all_labels()
    src = labels[0]
    dist = bfs_distances(g, src)
    p0 = v.vertices[0]
    for k, p in enumerate(v.vertices):
        assert dist[labels[k]] == sum(1 for a, b in zip(p0, p) if a != b)


def test_bfs_complete_graph():
    _, v, _, g = _pipeline(simplex(4))
    src = v.label(0)
    dist = bfs_distances(g, src)
    assert dist[src] == 0
    assert all(dist[v.label(k)] == 1 for k in range(1, len(v.vertices)))


def test_bfs_two_node_path():
    g = PolyGraph.from_edges(["a", "b"], [("a", "b")])
    assert bfs_distances(g, "a") == {"a": 0, "b": 1}


def test_bfs_unknown_source():
    g = PolyGraph.from_edges(["a"], [])
    with pytest.raises(ValueError):
        bfs_distances(g, "zz")


def test_bfs_unreachable_marked_infinite():
    g = PolyGraph.from_edges(["a", "b", "c"], [("a", "b")])
    assert bfs_distances(g, "a")["c"] == inf


def test_diameter_examples():
    for d in (2, 3, 4):
        assert diameter(_pipeline(cube(d))[3])[0] == d
        assert diameter(_pipeline(crosspolytope(d))[3])[0] == 2
        assert diameter(_pipeline(simplex(d))[3])[0] == 1
    _, q4 = klee_walkup()
    assert diameter(_pipeline(q4)[3])[0] == 5


def test_diameter_disconnected_raises():
    g = PolyGraph.from_edges(["a", "b", "c"], [("a", "b")])
    with pytest.raises(Disconnected):
        diameter(g)


def test_diameter_witness_reproducible():
    h, v, inc, g = _pipeline(cube(3))
    assert diameter(g) == diameter(g)


def test_diameter_is_max_of_bfs():
    for name, _ in corpus():
        h, v, inc, g, diam, _ = converted(name)
        assert diam == max(
            max(bfs_distances(g, s).values()) for s in g.nodes
        )


def test_nonrevisiting_cube_antipodal():
    h, v, inc, g = _pipeline(cube(3))
    labels = v.all_labels()
    i = list(v.vertices).index((-1, -1, -1))
    j = list(v.vertices).index((1, 1, 1))
    report = nonrevisiting_path(h, v, inc, g, labels[i], labels[j])
    assert report is not None and report.length == 3
    assert report.kind == "non-revisiting"


def test_nonrevisiting_klee_walkup_witness_pair():
    _, q4 = klee_walkup()
    h, v, inc, g = _pipeline(q4)
    _, (a, b) = diameter(g)
    report = nonrevisiting_path(h, v, inc, g, a, b)
    assert report is not None and report.length == 5  # 5 = 9 - 4


def test_nonrevisiting_simplex_edge():
    h, v, inc, g = _pipeline(simplex(3))
    report = nonrevisiting_path(h, v, inc, g, v.label(0), v.label(1))
    assert report is not None and report.length == 1


def test_nonrevisiting_path_consecutive_edges_and_cap():
    for name in ("cube3", "q4", "ngon7"):
        h, v, inc, g, _, _ = converted(name)
        labels = v.all_labels()
        nfacets = len(facet_row_indices(h, v, inc))
        for a, b in list(combinations(labels, 2))[:40]:
            report = nonrevisiting_path(h, v, inc, g, a, b)
            assert report is not None
            assert report.length <= nfacets - h.d
            for u, w in zip(report.path, report.path[1:]):
                assert tuple(sorted((u, w))) in g.edges


def test_nonrevisiting_path_matches_interval_definition():
    h, v, inc, g = _pipeline(cube(3))
    labels = v.all_labels()
    tight = {lab: inc.tight_rows(k) for k, lab in enumerate(labels)}
    report = nonrevisiting_path(h, v, inc, g, labels[0], labels[-1])
    assert path_is_nonrevisiting([tight[lab] for lab in report.path])


def test_nonrevisiting_search_agrees_with_naive_enumeration():
    for name in ("cube3", "cross3", "orthant32"):
        h, v, inc, g, _, _ = converted(name)
        labels = list(v.all_labels())
        adj = {lab: sorted(x for x in g.adjacency()[lab]) for lab in labels}
        tight = {lab: inc.tight_rows(k) for k, lab in enumerate(labels)}
        nfacets = len(facet_row_indices(h, v, inc))
        for a, b in combinations(labels, 2):
            got = nonrevisiting_path(h, v, inc, g, a, b) is not None
            expected = nonrevisiting_exists_naive(adj, tight, a, b, nfacets - h.d)
            assert got == expected


def test_path_report_json_fields():
    import json

    h, v, inc, g = _pipeline(cube(2))
    labels = v.all_labels()
    report = nonrevisiting_path(h, v, inc, g, labels[0], labels[3])
    data = json.loads(report.to_json())
    assert set(data) == {"source", "target", "length", "path", "kind"}
    assert data["kind"] == "non-revisiting"
    assert data["length"] == len(data["path"]) - 1


def test_nonrevisiting_property_holds_on_cubes_and_q4():
    for d in (2, 3, 4):
        h, v, inc, g = _pipeline(cube(d))
        assert nonrevisiting_property(h, v, inc, g).holds is True
    _, q4 = klee_walkup()
    h, v, inc, g = _pipeline(q4)
    assert nonrevisiting_property(h, v, inc, g).holds is True


def test_nonrevisiting_property_simplex_trivial():
    h, v, inc, g = _pipeline(simplex(4))
    assert nonrevisiting_property(h, v, inc, g).holds is True


def test_nonrevisiting_property_budget_inconclusive():
    _, q4 = klee_walkup()
    h, v, inc, g = _pipeline(q4)
    result = nonrevisiting_property(h, v, inc, g, budget=5)
    assert result.holds is None
    assert result.witness is None


def test_monotone_cube_all_ones():
    h, v, inc, g = _pipeline(cube(3))
    report = monotone_eccentricity(h, v, inc, g, (1, 1, 1))
    assert v.vertices[v.all_labels().index(report.optimum)] == (1, 1, 1)
    assert report.worst_length == 3
    assert report.unreachable == ()


def test_monotone_simplex_generic():
    h, v, inc, g = _pipeline(simplex(3))
    report = monotone_eccentricity(h, v, inc, g, (1, 2, 4))
    assert report.worst_length == 1


@pytest.mark.parametrize("c,expected_worst", [((1, 0), 3), ((2, 7), 2)])
def test_monotone_pentagon_against_hand_oracle(c, expected_worst):
    h, v, inc, g = _pipeline(ngon(5))
    report = monotone_eccentricity(h, v, inc, g, c)
    # oracle works on the explicit cycle
    labels = list(v.all_labels())
    index = {lab: i for i, lab in enumerate(labels)}
    edges = [(index[a], index[b]) for a, b in g.edges]
    opt, worst = pentagon_monotone_worst(list(v.vertices), edges, c)
    assert report.worst_length == worst == expected_worst
    assert index[report.optimum] == opt


def test_monotone_rejects_tie_on_edge():
    # (11, -7) ties exactly on one pentagon edge away from the unique maximum
    h, v, inc, g = _pipeline(ngon(5))
    with pytest.raises(GeometryError, match="tie on edge"):
        monotone_eccentricity(h, v, inc, g, (11, -7))


def test_monotone_rejects_non_unique_optimum():
    h, v, inc, g = _pipeline(ngon(4))
    # functional constant zero ties everywhere
    with pytest.raises(GeometryError):
        monotone_eccentricity(h, v, inc, g, (0, 0))


def test_monotone_at_least_bfs_eccentricity():
    # monotone distance to the optimum dominates the plain BFS distance for
    # every source, so the worst monotone length dominates the optimum's
    # eccentricity whenever every source is monotonically reachable
    checked = 0
    for name in ("cube3", "q4", "ngon5"):
        h, v, inc, g, _, _ = converted(name)
        c = tuple(Fraction(3**i, 7) for i in range(h.d))  # generically skewed
        try:
            report = monotone_eccentricity(h, v, inc, g, c)
        except GeometryError:
            continue
        assert report.unreachable == ()
        ecc = max(bfs_distances(g, report.optimum).values())
        assert report.worst_length >= ecc
        checked += 1
    assert checked >= 2
