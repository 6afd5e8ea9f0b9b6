"""Hand-built plane graphs used across the test modules.

Each constructor documents the degrees it produces; rotations are chosen
so the central triangle is a face of the embedding (the two corners that
precede everything else in each corner's rotation close the cycle).
"""

from __future__ import annotations

from tlabel.graphs import PlaneGraph


def leaf_triangle(d0: int, d1: int, d2: int) -> PlaneGraph:
    """Triangle 0-1-2 padded with leaves so the corners reach d0, d1, d2.

    Leaves of corner i are numbered (i+1)*100, (i+1)*100+1, ...  The
    embedding has exactly two faces: the triangle and the outside.
    """
    adj = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
    rot = {0: [2, 1], 1: [0, 2], 2: [1, 0]}
    for corner, want in ((0, d0), (1, d1), (2, d2)):
        for j in range(want - 2):
            leaf = (corner + 1) * 100 + j
            adj[corner].add(leaf)
            rot[corner].append(leaf)
            adj[leaf] = {corner}
            rot[leaf] = [corner]
    return PlaneGraph(adj, rot)


def special_face_with_mate() -> PlaneGraph:
    """Triangle face with corner degrees (5, 6, 7) and an outside
    degree-6 neighbor of the 5-corner (vertex 10)."""
    g = leaf_triangle(5, 6, 7)
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    rot = {v: list(g.rotation(v)) for v in g.vertices}
    # swap leaf 100 for a degree-6 mate, keeping the corner degree at 5
    adj[0].remove(100)
    adj[0].add(10)
    rot[0][rot[0].index(100)] = 10
    del adj[100], rot[100]
    adj[10] = {0}
    rot[10] = [0]
    for j in range(5):
        leaf = 400 + j
        adj[10].add(leaf)
        rot[10].append(leaf)
        adj[leaf] = {10}
        rot[leaf] = [10]
    return PlaneGraph(adj, rot)


def octahedron() -> PlaneGraph:
    """The 4-regular triangulation on six vertices; eight 3-faces."""
    rot = {
        0: (1, 2, 3, 4),
        1: (0, 4, 5, 2),
        2: (0, 1, 5, 3),
        3: (0, 2, 5, 4),
        4: (0, 3, 5, 1),
        5: (1, 4, 3, 2),
    }
    return PlaneGraph({v: set(r) for v, r in rot.items()}, rot)


def pinned_twin_instance():
    """A graph, config, and child labeling that force the color trade.

    Hub 0 has degree 12, twins 2 and 3 have degree 2, and the child
    labeling pins both restored hub edges to the single color 14 until
    the apex edge colors are exchanged.
    """
    adj = {
        0: {1, 2, 3} | set(range(10, 19)),
        1: {0, 2, 10},
        2: {0, 1},
        3: {0, 4},
        4: {3},
        10: {0, 1},
    }
    # rotations close (0, 1, 2) into a triangle face of the embedding
    rot = {
        0: [1, 2, 3] + list(range(10, 19)),
        1: [2, 0, 10],
        2: [0, 1],
        3: [0, 4],
        4: [3],
        10: [0, 1],
    }
    for leaf in range(11, 19):
        adj[leaf] = {0}
        rot[leaf] = [0]
    g = PlaneGraph(adj, rot)

    pad_colors = [0, 1, 3, 4, 5, 9, 10, 11, 12]
    work = {0: 7, 1: 0, 2: 2, 3: 2, 4: 0, (0, 1): 2, (1, 2): 13, (3, 4): 13,
            (1, 10): 9}
    for leaf, c in zip(range(10, 19), pad_colors):
        work[(0, leaf)] = c
        work[leaf] = 14
    return g, work
