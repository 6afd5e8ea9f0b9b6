"""Simple undirected graphs with optional combinatorial plane embeddings.

A plane embedding is carried as a rotation system: the cyclic order of the
neighbors around each vertex.  Faces are never stored; they are derived by
tracing dart orbits and validated against Euler's formula, so a rotation
system that does not describe a plane embedding is always caught at trace
time rather than silently accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class GraphError(ValueError):
    """A construction or query violated a graph invariant."""


class DisconnectedError(GraphError):
    def __init__(self, components: Sequence[frozenset[int]]):
        self.components = tuple(components)
        sizes = sorted((len(c) for c in self.components), reverse=True)
        super().__init__(
            "graph is disconnected: %d components with sizes %s"
            % (len(self.components), sizes)
        )


class EmbeddingError(GraphError):
    """The rotation system does not describe a plane embedding."""


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Normalize an undirected edge to (min, max) form."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on integer vertex ids.

    Vertex ids need not be contiguous: subgraph operations preserve the ids
    of the vertices they keep, which lets partial labelings transfer between
    a graph and its reductions without any translation step.
    """

    __slots__ = ("_adj",)

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        adj: dict[int, frozenset[int]] = {}
        for v, nbrs in adjacency.items():
            ns = frozenset(int(w) for w in nbrs)
            v = int(v)
            if v in ns:
                raise GraphError("self-loop at vertex %d" % v)
            adj[v] = ns
        for v, ns in adj.items():
            for w in ns:
                if w not in adj or v not in adj[w]:
                    raise GraphError("asymmetric adjacency on edge (%d, %d)" % (v, w))
        self._adj = adj

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError("self-loop (%d, %d)" % (u, v))
            k = edge_key(u, v)
            if k in seen:
                raise GraphError("duplicate edge (%d, %d)" % k)
            seen.add(k)
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return cls(adj)

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError("unknown vertex %r" % (v,)) from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for v, ns in self._adj.items():
            for w in ns:
                if v < w:
                    out.append((v, w))
        return tuple(sorted(out))

    @property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(ns) for ns in self._adj.values()), default=0)

    # -- connectivity ------------------------------------------------------

    def components(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        comps = []
        for start in sorted(self._adj):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self._adj[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- derived graphs ----------------------------------------------------

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError("no edge (%d, %d) to delete" % (u, v))
        adj = {x: set(ns) for x, ns in self._adj.items()}
        adj[u].discard(v)
        adj[v].discard(u)
        return Graph(adj)

    def without_vertices(self, drop: Iterable[int]) -> "Graph":
        gone = set(drop)
        adj = {v: ns - gone for v, ns in self._adj.items() if v not in gone}
        return Graph(adj)

    def induced(self, keep: Iterable[int]) -> "Graph":
        keep = set(keep)
        return self.without_vertices(set(self._adj) - keep)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):  # immutable by convention
        return hash(tuple(sorted((v, ns) for v, ns in self._adj.items())))

    def __repr__(self) -> str:
        return "Graph(n=%d, m=%d)" % (self.n, self.m)


@dataclass(frozen=True)
class Face:
    """A face boundary walk, one entry per dart on the boundary.

    The walk lists the tail of every dart in traversal order, so its length
    equals the face degree.  A cut edge contributes both of its darts to the
    same face and is therefore counted twice, e.g. the single face of the
    path a-b-c has boundary (a, b, c, b) and degree 4.
    """

    boundary: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.boundary)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.boundary)

    def __repr__(self) -> str:
        return "Face%r" % (self.boundary,)


class PlaneGraph(Graph):
    """A graph together with a rotation system describing its embedding.

    The rotation at a vertex is the cyclic sequence of its neighbors.  The
    constructor checks that each rotation lists exactly the incident edges;
    the Euler check is deferred to :func:`trace_faces` so that intermediate
    (possibly disconnected) graphs produced while reducing can still be
    represented.
    """

    __slots__ = ("_rot", "_faces")

    def __init__(self, adjacency, rotation: Mapping[int, Sequence[int]]):
        super().__init__(adjacency)
        rot: dict[int, tuple[int, ...]] = {}
        for v in self._adj:
            try:
                order = tuple(int(w) for w in rotation[v])
            except KeyError:
                raise GraphError("vertex %d has no rotation" % v) from None
            if len(set(order)) != len(order):
                raise GraphError("rotation at %d repeats a neighbor" % v)
            extra = set(order) - self._adj[v]
            missing = self._adj[v] - set(order)
            if extra:
                raise GraphError("rotation at %d lists non-edges %s" % (v, sorted(extra)))
            if missing:
                raise GraphError("rotation at %d misses neighbors %s" % (v, sorted(missing)))
            rot[v] = order
        for v in rotation:
            if int(v) not in self._adj:
                raise GraphError("rotation for unknown vertex %r" % (v,))
        self._rot = rot
        self._faces = None

    @classmethod
    def from_edges_rotation(cls, edges, rotation, vertices=()) -> "PlaneGraph":
        g = Graph.from_edges(edges, vertices)
        return cls(g._adj, rotation)

    def rotation(self, v: int) -> tuple[int, ...]:
        try:
            return self._rot[v]
        except KeyError:
            raise GraphError("unknown vertex %r" % (v,)) from None

    def faces(self) -> tuple[Face, ...]:
        if self._faces is None:
            self._faces = trace_faces(self)
        return self._faces

    # -- derived plane graphs (rotation order is preserved) ----------------

    def delete_edge(self, u: int, v: int) -> "PlaneGraph":
        return self.delete_edges([(u, v)])

    def delete_edges(self, pairs: Iterable[tuple[int, int]]) -> "PlaneGraph":
        gone = {edge_key(u, v) for u, v in pairs}
        for u, v in gone:
            if not self.has_edge(u, v):
                raise GraphError("no edge (%d, %d) to delete" % (u, v))
        adj = {x: set(ns) for x, ns in self._adj.items()}
        rot = dict(self._rot)
        for u, v in gone:
            adj[u].discard(v)
            adj[v].discard(u)
            rot[u] = tuple(w for w in rot[u] if w != v)
            rot[v] = tuple(w for w in rot[v] if w != u)
        return PlaneGraph(adj, rot)

    def without_vertices(self, drop: Iterable[int]) -> "PlaneGraph":
        gone = set(drop)
        adj = {v: ns - gone for v, ns in self._adj.items() if v not in gone}
        rot = {
            v: tuple(w for w in self._rot[v] if w not in gone)
            for v in self._adj
            if v not in gone
        }
        return PlaneGraph(adj, rot)

    def induced(self, keep: Iterable[int]) -> "PlaneGraph":
        keep = set(keep)
        return self.without_vertices(set(self._adj) - keep)

    def plane_components(self) -> list["PlaneGraph"]:
        comps = self.components()
        if len(comps) <= 1:
            return [self]
        return [self.induced(c) for c in comps]

    def __repr__(self) -> str:
        return "PlaneGraph(n=%d, m=%d)" % (self.n, self.m)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PlaneGraph)
            and self._adj == other._adj
            and self._rot == other._rot
        )

    def __hash__(self):
        return hash((super().__hash__(), tuple(sorted(self._rot.items()))))


def build_plane_graph(edges: Iterable[tuple[int, int]],
                      rotation: Mapping[int, Sequence[int]],
                      vertices: Iterable[int] = ()) -> PlaneGraph:
    """Build a plane graph from an edge list and a rotation system."""
    return PlaneGraph.from_edges_rotation(edges, rotation, vertices)


def trace_faces(g: PlaneGraph) -> tuple[Face, ...]:
    """Partition the darts of ``g`` into face boundary walks.

    Requires a connected graph.  After tracing, the face count is checked
    against Euler's formula |V| - |E| + |F| = 2; a mismatch means the
    rotation system embeds the graph on a higher-genus surface and raises
    :class:`EmbeddingError`.
    """
    comps = g.components()
    if len(comps) > 1:
        raise DisconnectedError(comps)

    succ: dict[int, dict[int, int]] = {}
    for v in g.vertices:
        order = g.rotation(v)
        k = len(order)
        succ[v] = {order[i]: order[(i + 1) % k] for i in range(k)}

    darts = []
    for u, v in g.edges():
        darts.append((u, v))
        darts.append((v, u))
    darts.sort()

    seen: set[tuple[int, int]] = set()
    faces: list[Face] = []
    for start in darts:
        if start in seen:
            continue
        walk = []
        cur = start
        while True:
            seen.add(cur)
            walk.append(cur[0])
            u, v = cur
            cur = (v, succ[v][u])
            if cur == start:
                break
        faces.append(Face(tuple(walk)))

    if g.n == 1 and g.m == 0:
        faces = [Face(())]  # a single vertex bounds the one outer face

    if g.n - g.m + len(faces) != 2:
        raise EmbeddingError(
            "rotation system is not planar: V-E+F = %d-%d+%d != 2"
            % (g.n, g.m, len(faces))
        )
    return tuple(faces)
