"""Text formats for graphs and labelings.

Graph files::

    p tlabel <n> <m>
    e <u> <v>            one line per edge
    r <v> <w1> ... <wk>  clockwise neighbor order (optional, all or none)

Lines starting with ``c`` are comments.  Vertex labels in a file may be any
non-negative integers; they are mapped to dense ids 0..n-1 in ascending
label order on load.  The serializer always writes dense ids with edges and
rotations sorted, so serialize(parse(serialize(g))) is byte-identical.

Labeling files::

    v <id> <color>
    e <u> <v> <color>

Partial labelings are fine: absent elements are simply unassigned.
"""

from __future__ import annotations

from typing import Union

from .graphs import Graph, GraphError, PlaneGraph, edge_key
from .labeling import PartialLabeling


class FormatError(ValueError):
    """A file does not conform to the expected record grammar."""


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def parse_graph(text: str) -> Union[Graph, PlaneGraph]:
    """Parse a graph file; returns a PlaneGraph when rotations are present."""
    header = None
    edges: list[tuple[int, int]] = []
    rotations: dict[int, list[int]] = {}
    for lineno, toks in _tokens(text):
        kind = toks[0]
        if kind == "p":
            if header is not None:
                raise FormatError("line %d: duplicate header" % lineno)
            if len(toks) != 4 or toks[1] != "tlabel":
                raise FormatError("line %d: header must be 'p tlabel <n> <m>'" % lineno)
            header = (int(toks[2]), int(toks[3]))
        elif kind == "e":
            if len(toks) != 3:
                raise FormatError("line %d: edge line must be 'e <u> <v>'" % lineno)
            edges.append((int(toks[1]), int(toks[2])))
        elif kind == "r":
            if len(toks) < 2:
                raise FormatError("line %d: rotation line needs a vertex" % lineno)
            v = int(toks[1])
            if v in rotations:
                raise FormatError("line %d: duplicate rotation for %d" % (lineno, v))
            rotations[v] = [int(t) for t in toks[2:]]
        else:
            raise FormatError("line %d: unknown record %r" % (lineno, kind))
    if header is None:
        raise FormatError("missing 'p tlabel' header")
    n, m = header
    if m != len(edges):
        raise FormatError("header says %d edges, file has %d" % (m, len(edges)))

    labels = set()
    for u, v in edges:
        labels.add(u)
        labels.add(v)
    labels |= set(rotations)
    for v, order in rotations.items():
        labels |= set(order)
    if any(lab < 0 for lab in labels):
        raise FormatError("vertex labels must be non-negative")
    if not labels or max(labels) < n:
        labels |= set(range(n))  # dense convention: missing ids are isolated
    if len(labels) != n:
        raise FormatError(
            "header says %d vertices, file uses %d distinct labels" % (n, len(labels))
        )
    remap = {lab: i for i, lab in enumerate(sorted(labels))}

    dense_edges = [edge_key(remap[u], remap[v]) for u, v in edges]
    if not rotations:
        return Graph.from_edges(dense_edges, vertices=range(n))
    rot = {remap[v]: [remap[w] for w in order] for v, order in rotations.items()}
    missing = set(range(n)) - set(rot)
    # vertices of degree zero may omit their (empty) rotation line
    for v in missing:
        rot[v] = []
    try:
        return PlaneGraph.from_edges_rotation(dense_edges, rot, vertices=range(n))
    except GraphError as exc:
        raise FormatError("bad rotation system: %s" % exc) from None


def serialize_graph(g: Graph) -> str:
    """Serialize a graph (with rotations when it is a PlaneGraph)."""
    verts = g.vertices
    remap = {v: i for i, v in enumerate(verts)}
    lines = ["p tlabel %d %d" % (g.n, g.m)]
    for u, v in sorted(edge_key(remap[a], remap[b]) for a, b in g.edges()):
        lines.append("e %d %d" % (u, v))
    if isinstance(g, PlaneGraph):
        for v in verts:
            order = " ".join(str(remap[w]) for w in g.rotation(v))
            lines.append(("r %d %s" % (remap[v], order)).rstrip())
    return "\n".join(lines) + "\n"


def parse_labeling(text: str, g: Graph) -> PartialLabeling:
    """Parse a labeling file against a graph; unknown elements are errors."""
    out: dict = {}
    for lineno, toks in _tokens(text):
        kind = toks[0]
        if kind == "v":
            if len(toks) != 3:
                raise FormatError("line %d: vertex line must be 'v <id> <color>'" % lineno)
            v, c = int(toks[1]), int(toks[2])
            if v not in g:
                raise FormatError("line %d: vertex %d is not in the graph" % (lineno, v))
            if v in out:
                raise FormatError("line %d: vertex %d labeled twice" % (lineno, v))
            out[v] = c
        elif kind == "e":
            if len(toks) != 4:
                raise FormatError("line %d: edge line must be 'e <u> <v> <color>'" % lineno)
            u, v, c = int(toks[1]), int(toks[2]), int(toks[3])
            if not g.has_edge(u, v):
                raise FormatError("line %d: edge (%d, %d) is not in the graph" % (lineno, u, v))
            e = edge_key(u, v)
            if e in out:
                raise FormatError("line %d: edge (%d, %d) labeled twice" % (lineno, u, v))
            out[e] = c
        else:
            raise FormatError("line %d: unknown record %r" % (lineno, kind))
    return PartialLabeling(out)


def serialize_labeling(phi: PartialLabeling) -> str:
    lines = []
    for el in phi.elements():
        if isinstance(el, tuple):
            lines.append("e %d %d %d" % (el[0], el[1], phi.color(el)))
        else:
            lines.append("v %d %d" % (el, phi.color(el)))
    return "\n".join(lines) + "\n" if lines else ""
