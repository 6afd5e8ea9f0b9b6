"""Exact (d,1)-total labeling by bounded backtracking.

The optimum is found by trying span k upward from a degree lower bound.
Every unsatisfiable level is proven by exhausting its search tree, so a
returned value is exact; when a node budget runs out the result says
"unknown" instead of guessing.

This is meant for small instances (say up to a few dozen elements) and as a
ground-truth oracle for the structural machinery, not for scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, edge_key
from .labeling import ColorInterval, PartialLabeling, available, is_edge


class BudgetExceeded(Exception):
    """The node budget ran out before the search finished."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__("search budget exhausted after %d nodes" % nodes)


@dataclass
class SolveResult:
    status: str  # "solved" or "unknown"
    value: Optional[int]
    witness: Optional[PartialLabeling]
    nodes: int

    @property
    def solved(self) -> bool:
        return self.status == "solved"


def _element_order(g: Graph) -> list:
    """Vertices and edges interleaved by descending degree pressure.

    An edge weighs the sum of its endpoint degrees, a vertex its own degree;
    ties break toward vertices and then lower ids so runs are reproducible.
    """
    items = []
    for v in g.vertices:
        items.append(((-g.degree(v), 0, v, v), v))
    for u, v in g.edges():
        items.append(((-(g.degree(u) + g.degree(v)), 1, u, v), (u, v)))
    items.sort(key=lambda t: t[0])
    return [el for _, el in items]


class _Search:
    def __init__(self, g: Graph, interval: ColorInterval, budget: Optional[int],
                 start_nodes: int = 0):
        self.g = g
        self.interval = interval
        self.budget = budget
        self.nodes = start_nodes
        self.order = _element_order(g)

    def run(self) -> Optional[dict]:
        phi: dict = {}
        if self._extend(phi, 0):
            return phi
        return None

    def _spend(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(self.nodes)

    def _extend(self, phi: dict, idx: int) -> bool:
        if idx == len(self.order):
            return True
        el = self.order[idx]
        wrapped = PartialLabeling(phi)
        for c in sorted(available(self.g, wrapped, el, self.interval)):
            self._spend()
            phi[el] = c
            if self._forward_ok(phi, idx + 1) and self._extend(phi, idx + 1):
                return True
            del phi[el]
        return False

    def _forward_ok(self, phi: dict, idx: int) -> bool:
        # prune as soon as any future element has no color left
        wrapped = PartialLabeling(phi)
        for el in self.order[idx:]:
            if not available(self.g, wrapped, el, self.interval):
                return False
        return True


def find_labeling(g: Graph, interval: ColorInterval,
                  budget: Optional[int] = None) -> tuple[Optional[PartialLabeling], int]:
    """Search for any total labeling within the interval.

    Returns (labeling, nodes) with labeling None when the level is
    unsatisfiable; raises BudgetExceeded when the budget runs out first.
    """
    search = _Search(g, interval, budget)
    phi = search.run()
    if phi is None:
        return None, search.nodes
    return PartialLabeling(phi), search.nodes


def span_lower_bound(g: Graph, d: int) -> int:
    """Degree-based lower bound for the optimal span.

    The extra unit for regular graphs needs d >= 2: it comes from every
    vertex being forced to an end of the interval, which only happens
    when interior colors block strictly more than d edge colors.
    """
    if g.m == 0:
        return 0
    delta = g.max_degree
    lo = delta + d - 1
    regular = g.min_degree == delta
    if d >= delta or (regular and d >= 2):
        lo = max(lo, delta + d)
    return lo


def lambda_exact(g: Graph, d: int = 2, budget: Optional[int] = None) -> SolveResult:
    """The exact optimal span, searched upward from the lower bound.

    Components are solved independently; the optimum of a disconnected
    graph is the maximum over its components.
    """
    comps = g.components()
    if len(comps) > 1:
        total_nodes = 0
        best = 0
        merged: dict = {}
        for comp in comps:
            sub = lambda_exact(g.induced(comp), d, budget)
            total_nodes += sub.nodes
            if not sub.solved:
                return SolveResult("unknown", None, None, total_nodes)
            best = max(best, sub.value)
            merged.update(sub.witness.as_dict())
        return SolveResult("solved", best, PartialLabeling(merged), total_nodes)

    nodes = 0
    for k in itertools.count(span_lower_bound(g, d)):
        interval = ColorInterval(k=k, d=d)
        try:
            phi, level_nodes = find_labeling(g, interval, budget)
        except BudgetExceeded as exc:
            return SolveResult("unknown", None, None, nodes + exc.nodes)
        nodes += level_nodes
        if phi is not None:
            return SolveResult("solved", k, phi, nodes)


def _color_search(n_items: int, conflicts, num_colors: int,
                  budget: Optional[int]) -> Optional[list]:
    """Backtracking c-coloring of items 0..n-1 given a conflict test."""
    assignment: list = [None] * n_items
    nodes = 0

    def rec(i: int) -> bool:
        nonlocal nodes
        if i == n_items:
            return True
        for c in range(num_colors):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(nodes)
            if any(assignment[j] == c for j in conflicts[i] if j < i):
                continue
            assignment[i] = c
            if rec(i + 1):
                return True
            assignment[i] = None
        return False

    return assignment if rec(0) else None


def chromatic_number(g: Graph, budget: Optional[int] = None) -> int:
    """Exact chromatic number by exhaustive search over color counts."""
    if g.n == 0:
        return 0
    verts = list(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    conflicts = [[index[w] for w in g.neighbors(v)] for v in verts]
    for c in itertools.count(1):
        if _color_search(len(verts), conflicts, c, budget) is not None:
            return c


def edge_chromatic_number(g: Graph, budget: Optional[int] = None) -> int:
    """Exact chromatic index by exhaustive search over color counts."""
    edges = list(g.edges())
    if not edges:
        return 0
    index = {e: i for i, e in enumerate(edges)}
    conflicts = [
        [index[f] for f in edges if f != e and set(f) & set(e)] for e in edges
    ]
    for c in itertools.count(1):
        if _color_search(len(edges), conflicts, c, budget) is not None:
            return c


def bounds(g: Graph, d: int = 2, budget: Optional[int] = None) -> tuple[int, int]:
    """Lower and upper bounds sandwiching the optimal span.

    Lower: max-degree bounds (plus one when d dominates the degree or the
    graph is regular).  Upper: chromatic number plus chromatic index plus
    d - 2, from coloring vertices and edges separately and spreading them.
    """
    chi = chromatic_number(g, budget)
    chi_prime = edge_chromatic_number(g, budget)
    upper = chi + chi_prime + d - 2
    lower = span_lower_bound(g, d)
    return lower, max(lower, upper)
