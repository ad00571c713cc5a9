"""Independent oracles the tests check the library against.

Everything here is deliberately written from scratch against the
definitions, not by calling the library: brute-force vertex enumeration
over row subsets, forward-elimination rank counting, simple-path
enumeration for the non-revisiting property, and a literal interval check
of what "never revisits a facet" means.
"""

from fractions import Fraction
from itertools import combinations


def solve_square(rows, rhs):
    """Solve a square rational system by textbook elimination; None if singular."""
    n = len(rows)
    m = [list(map(Fraction, rows[i])) + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[i][n] for i in range(n))


def brute_force_vertices(h):
    """All vertices of an inequality-only H-polyhedron by d-subset enumeration.

    Solves every d-row subsystem exactly and keeps solutions satisfying all
    rows.  Exponential and proud of it; the point is independence.
    """
    assert not h.linearity
    d = h.d
    found = set()
    for subset in combinations(range(h.nrows), d):
        a = [h.rows[i][1] for i in subset]
        b = [-h.rows[i][0] for i in subset]
        x = solve_square(a, b)
        if x is None:
            continue
        if all(h.rows[i][0] + sum(c * xi for c, xi in zip(h.rows[i][1], x)) >= 0
               for i in range(h.nrows)):
            found.add(x)
    return sorted(found)


def echelon_rank(rows):
    """Rank as the count of nonzero rows after plain forward elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return sum(1 for row in m if any(x != 0 for x in row))


def path_is_nonrevisiting(tight_sets):
    """Literal definition: every facet's tight stretch is one interval."""
    facets = set().union(*tight_sets)
    for f in facets:
        hits = [i for i, t in enumerate(tight_sets) if f in t]
        if hits and hits[-1] - hits[0] + 1 != len(hits):
            return False
    return True


def nonrevisiting_exists_naive(adjacency, tight, source, target, max_len):
    """Enumerate all simple paths up to max_len, re-testing the definition."""

    def extend(path):
        if path[-1] == target:
            return path_is_nonrevisiting([tight[v] for v in path])
        if len(path) > max_len:
            return False
        for nxt in adjacency[path[-1]]:
            if nxt in path:
                continue
            if not path_is_nonrevisiting([tight[v] for v in path] + [tight[nxt]]):
                continue
            if extend(path + [nxt]):
                return True
        return False

    return extend([source])


def pentagon_monotone_worst(points, edges, c):
    """Hand-rolled monotone eccentricity on an explicit polygon."""
    vals = [sum(ci * pi for ci, pi in zip(c, p)) for p in points]
    assert len(set(vals)) == len(vals), "tied functional in oracle input"
    opt = vals.index(max(vals))
    succ = {i: [] for i in range(len(points))}
    for i, j in edges:
        if vals[i] < vals[j]:
            succ[i].append(j)
        else:
            succ[j].append(i)
    worst = 0
    for s in range(len(points)):
        frontier = {s}
        seen = {s}
        steps = 0
        while opt not in seen and frontier:
            steps += 1
            frontier = {w for u in frontier for w in succ[u]} - seen
            seen |= frontier
        assert opt in seen, "monotone sink other than the maximum"
        worst = max(worst, steps if s != opt else 0)
    return opt, worst
