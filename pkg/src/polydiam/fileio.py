"""Text formats: H-files, V-files, complex files, subset-graph files.

All formats are whitespace-separated UTF-8 with exact rational literals
(optional sign, integer, optional "/denominator"; decimals rejected) and
allow full-line `#` comments.  Generated files carry their construction
recipe in a leading `# recipe {json}` comment so byte-identical replay is
possible.

H-file:                         V-file:
    H-representation                V-representation
    linearity k i1 ... ik           begin
    begin                           m d+1 rational
    m d+1 rational                  1 x1 ... xd   (vertex)
    b a1 ... ad                     0 z1 ... zd   (ray)
    end                             end
"""

from __future__ import annotations

import json
from fractions import Fraction

from .abstraction import SubsetFamilyGraph
from .constructions import ConstructionRecipe
from .polyhedron import HPolyhedron, VPolyhedron
from .ratlin import format_rational, parse_rational
from .simplicial import SimplicialComplex

RECIPE_PREFIX = "# recipe "


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def read_recipe(text: str) -> ConstructionRecipe | None:
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith(RECIPE_PREFIX):
            return ConstructionRecipe.from_dict(json.loads(line[len(RECIPE_PREFIX):]))
    return None


def _recipe_comment(recipe: ConstructionRecipe | None) -> list[str]:
    if recipe is None:
        return []
    return [
        RECIPE_PREFIX + json.dumps(recipe.to_dict(), separators=(",", ":")),
        f"# provenance: {recipe.provenance}",
    ]


def _parse_matrix_block(lines: list[str], start: int) -> tuple[int, int, list[list[Fraction]]]:
    if lines[start] != "begin":
        raise ValueError(f"expected 'begin', found {lines[start]!r}")
    header = lines[start + 1].split()
    if len(header) != 3 or header[2] != "rational":
        raise ValueError(f"expected 'm d+1 rational', found {lines[start + 1]!r}")
    m, cols = int(header[0]), int(header[1])
    rows = []
    for i in range(m):
        parts = lines[start + 2 + i].split()
        if len(parts) != cols:
            raise ValueError(f"row {i + 1}: expected {cols} entries, got {len(parts)}")
        rows.append([parse_rational(p) for p in parts])
    if lines[start + 2 + m] != "end":
        raise ValueError("expected 'end' after matrix rows")
    return m, cols, rows


def read_hfile(text: str) -> HPolyhedron:
    lines = _content_lines(text)
    if not lines or lines[0] != "H-representation":
        raise ValueError("not an H-file: missing 'H-representation' header")
    pos = 1
    linearity: set[int] = set()
    if lines[pos].startswith("linearity"):
        parts = lines[pos].split()
        count = int(parts[1])
        if len(parts) != 2 + count:
            raise ValueError("malformed linearity line")
        linearity = {int(x) - 1 for x in parts[2:]}
        pos += 1
    m, cols, rows = _parse_matrix_block(lines, pos)
    d = cols - 1
    if any(not 0 <= i < m for i in linearity):
        raise ValueError("linearity index out of range")
    return HPolyhedron(
        d,
        tuple((row[0], tuple(row[1:])) for row in rows),
        frozenset(linearity),
    )


def read_vfile(text: str) -> VPolyhedron:
    lines = _content_lines(text)
    if not lines or lines[0] != "V-representation":
        raise ValueError("not a V-file: missing 'V-representation' header")
    _, cols, rows = _parse_matrix_block(lines, 1)
    d = cols - 1
    vertices = []
    rays = []
    for row in rows:
        if row[0] == 1:
            vertices.append(tuple(row[1:]))
        elif row[0] == 0:
            rays.append(tuple(row[1:]))
        else:
            raise ValueError("V-file rows must start with 1 (vertex) or 0 (ray)")
    return VPolyhedron(d, tuple(vertices), tuple(rays))


def read_polyfile(text: str) -> HPolyhedron | VPolyhedron:
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty input")
    if lines[0] == "H-representation":
        return read_hfile(text)
    if lines[0] == "V-representation":
        return read_vfile(text)
    raise ValueError(f"unknown file header {lines[0]!r}")


def write_hfile(h: HPolyhedron, recipe: ConstructionRecipe | None = None) -> str:
    lines = _recipe_comment(recipe)
    lines.append("H-representation")
    if h.linearity:
        idx = " ".join(str(i + 1) for i in sorted(h.linearity))
        lines.append(f"linearity {len(h.linearity)} {idx}")
    lines.append("begin")
    lines.append(f"{h.nrows} {h.d + 1} rational")
    for b, a in h.rows:
        lines.append(" ".join(format_rational(x) for x in (b, *a)))
    lines.append("end")
    return "\n".join(lines) + "\n"


def write_vfile(v: VPolyhedron, recipe: ConstructionRecipe | None = None) -> str:
    lines = _recipe_comment(recipe)
    lines.append("V-representation")
    lines.append("begin")
    lines.append(f"{len(v.vertices) + len(v.rays)} {v.d + 1} rational")
    for p in v.vertices:
        lines.append("1 " + " ".join(format_rational(x) for x in p))
    for r in v.rays:
        lines.append("0 " + " ".join(format_rational(x) for x in r))
    lines.append("end")
    return "\n".join(lines) + "\n"


def read_complex(text: str) -> SimplicialComplex:
    """One facet per line, space-separated labels; `#` comments allowed."""
    facets = [line.split() for line in _content_lines(text)]
    if not facets:
        raise ValueError("empty complex file")
    return SimplicialComplex.from_facets(facets)


def write_complex(k: SimplicialComplex) -> str:
    lines = [" ".join(sorted(f)) for f in k.sorted_facets()]
    return "\n".join(lines) + "\n"


def read_subset_graph(text: str) -> SubsetFamilyGraph:
    """Header 'n d', one node per line as sorted indices, 'edges:', index pairs.

    Edge lines refer to nodes by 1-based position in the node list.
    """
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty subset-graph file")
    n, d = (int(x) for x in lines[0].split())
    nodes: list[tuple[int, ...]] = []
    pos = 1
    while pos < len(lines) and lines[pos] != "edges:":
        nodes.append(tuple(int(x) for x in lines[pos].split()))
        pos += 1
    if pos == len(lines):
        raise ValueError("missing 'edges:' separator")
    edges = []
    for line in lines[pos + 1 :]:
        i, j = (int(x) for x in line.split())
        edges.append((nodes[i - 1], nodes[j - 1]))
    return SubsetFamilyGraph.make(n, d, nodes, edges)


def write_subset_graph(g: SubsetFamilyGraph, header_comment: str | None = None) -> str:
    lines = [] if header_comment is None else [f"# {header_comment}"]
    lines.append(f"{g.n} {g.d}")
    index = {node: i + 1 for i, node in enumerate(g.nodes)}
    for node in g.nodes:
        lines.append(" ".join(str(x) for x in node))
    lines.append("edges:")
    for u, v in sorted(g.edges):
        lines.append(f"{index[u]} {index[v]}")
    return "\n".join(lines) + "\n"
