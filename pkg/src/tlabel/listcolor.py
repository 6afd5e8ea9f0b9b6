"""List edge coloring of bipartite graphs.

A bipartite graph whose every edge uv carries a list of at least
max{deg(u), deg(v)} allowed colors always admits a proper edge coloring
choosing from the lists.  The searcher here exploits that guarantee: it
backtracks fail-first and treats exhaustion as a broken precondition
rather than a legitimate outcome.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .graphs import Graph, GraphError, edge_key


class ListSizeError(ValueError):
    """Some edge list is smaller than the guaranteed-solvable threshold."""


class ListColorError(RuntimeError):
    """The search exhausted despite lists meeting the threshold."""


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Two-color the vertices, raising GraphError on an odd cycle."""
    side: dict[int, int] = {}
    for root in sorted(g.vertices):
        if root in side:
            continue
        side[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if w not in side:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    raise GraphError("graph is not bipartite")
    left = frozenset(v for v, s in side.items() if s == 0)
    return left, frozenset(g.vertices) - left


def check_list_sizes(g: Graph, lists: Mapping[tuple, Iterable[int]]) -> None:
    """Require every edge list to hold max of the endpoint degrees colors."""
    for u, v in g.edges():
        e = edge_key(u, v)
        if e not in lists:
            raise ListSizeError("edge (%d, %d) has no color list" % e)
        need = max(g.degree(u), g.degree(v))
        have = len(set(lists[e]))
        if have < need:
            raise ListSizeError(
                "edge (%d, %d) has %d colors, needs %d" % (e[0], e[1], have, need)
            )


def list_edge_color(g: Graph, lists: Mapping[tuple, Iterable[int]],
                    check: bool = True) -> dict[tuple, int]:
    """Proper edge coloring from per-edge lists on a bipartite graph.

    With check=True the degree threshold is enforced up front and a failed
    search raises ListColorError, since exhaustion then means the caller
    handed over an inconsistent instance.  With check=False undersized
    lists are allowed and exhaustion returns via the same error.
    """
    bipartition(g)
    if check:
        check_list_sizes(g, lists)

    edges = [edge_key(u, v) for u, v in g.edges()]
    choices = {e: sorted(set(lists[e])) for e in edges if e in lists}
    for e in edges:
        if e not in choices:
            raise ListSizeError("edge (%d, %d) has no color list" % e)

    assignment: dict[tuple, int] = {}

    def feasible(e: tuple) -> list[int]:
        u, v = e
        used = set()
        for f, c in assignment.items():
            if u in f or v in f:
                used.add(c)
        return [c for c in choices[e] if c not in used]

    def pick() -> tuple | None:
        best = None
        best_count = None
        for e in edges:
            if e in assignment:
                continue
            count = len(feasible(e))
            if best_count is None or count < best_count:
                best, best_count = e, count
        return best

    def extend() -> bool:
        e = pick()
        if e is None:
            return True
        for c in feasible(e):
            assignment[e] = c
            if extend():
                return True
            del assignment[e]
        return False

    if not extend():
        raise ListColorError("list edge coloring search exhausted")
    return dict(assignment)
