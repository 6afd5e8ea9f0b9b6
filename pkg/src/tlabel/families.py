"""Deterministic generators for plane graph families.

Every generator returns a connected :class:`PlaneGraph` whose rotation
system is planar by construction.  Randomized families are driven entirely
by an explicit seed, so the same call always produces the same graph.
"""

from __future__ import annotations

import random
from typing import Optional

from .graphs import GraphError, PlaneGraph


def cycle(n: int) -> PlaneGraph:
    """Cycle on vertices 0..n-1; two faces of degree n."""
    if n < 3:
        raise GraphError("cycle needs n >= 3, got %d" % n)
    adj = {i: {(i - 1) % n, (i + 1) % n} for i in range(n)}
    rot = {i: ((i - 1) % n, (i + 1) % n) for i in range(n)}
    return PlaneGraph(adj, rot)


def star(n: int) -> PlaneGraph:
    """Star with center 0 and n leaves; a tree with a single face."""
    if n < 1:
        raise GraphError("star needs n >= 1, got %d" % n)
    adj = {0: set(range(1, n + 1))}
    rot = {0: tuple(range(1, n + 1))}
    for i in range(1, n + 1):
        adj[i] = {0}
        rot[i] = (0,)
    return PlaneGraph(adj, rot)


def wheel(n: int) -> PlaneGraph:
    """Wheel with hub 0 and rim 1..n: n triangular faces plus the outer n-gon."""
    if n < 3:
        raise GraphError("wheel needs rim size n >= 3, got %d" % n)
    adj: dict[int, set[int]] = {0: set(range(1, n + 1))}
    rot: dict[int, tuple[int, ...]] = {0: tuple(range(n, 0, -1))}
    for i in range(1, n + 1):
        nxt = i % n + 1
        prv = (i - 2) % n + 1
        adj[i] = {0, prv, nxt}
        rot[i] = (0, nxt, prv)
    return PlaneGraph(adj, rot)


def _stack(rot: dict[int, list[int]], faces: list[tuple[int, int, int]],
           idx: int, w: int) -> None:
    # Subdivide the triangular face faces[idx] by a new vertex w joined to
    # all three corners; rotations are spliced so the three new triangles
    # are faces of the refined embedding.
    x, y, z = faces.pop(idx)
    for corner, before, after in ((x, z, y), (y, x, z), (z, y, x)):
        order = rot[corner]
        i = order.index(before)
        # the face successor sits right after its predecessor in the rotation
        assert order[(i + 1) % len(order)] == after
        order.insert(i + 1, w)
    rot[w] = [x, z, y]
    faces.extend(((x, y, w), (y, z, w), (z, x, w)))


def stacked_triangulation(n: int, seed: int = 0,
                          max_degree: Optional[int] = None) -> PlaneGraph:
    """Random stacked triangulation on n vertices.

    Starts from a triangle and repeatedly places a new vertex inside a
    uniformly chosen triangular face.  When ``max_degree`` is given, faces
    with a saturated corner are never chosen, so the bound holds in the
    output by rejection.
    """
    if n < 3:
        raise GraphError("stacked triangulation needs n >= 3, got %d" % n)
    if max_degree is not None and max_degree < (2 if n == 3 else 3):
        raise GraphError("max_degree %d is unreachably small" % max_degree)
    rng = random.Random(seed)
    rot: dict[int, list[int]] = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    faces: list[tuple[int, int, int]] = [(0, 1, 2), (1, 0, 2)]
    for w in range(3, n):
        if max_degree is None:
            idx = rng.randrange(len(faces))
        else:
            ok = [i for i, f in enumerate(faces)
                  if all(len(rot[c]) < max_degree for c in f)]
            if not ok:
                raise GraphError(
                    "no face respects max_degree=%d after %d vertices"
                    % (max_degree, w))
            idx = ok[rng.randrange(len(ok))]
        _stack(rot, faces, idx, w)
    adj = {v: set(order) for v, order in rot.items()}
    return PlaneGraph(adj, {v: tuple(order) for v, order in rot.items()})


def random_planar(n: int, seed: int = 0, max_degree: Optional[int] = None,
                  drop: float = 0.25) -> PlaneGraph:
    """Random connected plane graph: a stacked triangulation thinned out.

    Builds ``stacked_triangulation(n, seed, max_degree)`` and then walks the
    edge list in random order, deleting each edge with probability ``drop``
    unless the deletion would disconnect the graph.
    """
    if not 0.0 <= drop < 1.0:
        raise GraphError("drop probability must be in [0, 1), got %r" % (drop,))
    g = stacked_triangulation(n, seed, max_degree)
    rng = random.Random("%d-thin" % seed)
    order = list(g.edges())
    rng.shuffle(order)
    for u, v in order:
        if rng.random() >= drop:
            continue
        trimmed = g.delete_edge(u, v)
        if trimmed.is_connected():
            g = trimmed
    return g


FAMILIES = {
    "cycle": cycle,
    "star": star,
    "wheel": wheel,
    "stacked_triangulation": stacked_triangulation,
    "random_planar": random_planar,
}


def generate(family: str, n: int, seed: int = 0,
             max_degree: Optional[int] = None) -> PlaneGraph:
    """Dispatch to a named family generator."""
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise GraphError(
            "unknown family %r (choose from %s)" % (family, ", ".join(sorted(FAMILIES)))
        ) from None
    if family in ("cycle", "star", "wheel"):
        return fn(n)
    if family == "stacked_triangulation":
        return fn(n, seed, max_degree)
    return fn(n, seed, max_degree)
