"""List edge coloring on bipartite graphs."""

from __future__ import annotations

import itertools
import random

import pytest

from tlabel.graphs import Graph, GraphError, edge_key
from tlabel.listcolor import (
    ListColorError,
    ListSizeError,
    bipartition,
    check_list_sizes,
    list_edge_color,
)


def _make_bipartite(rng: random.Random, max_edges: int) -> Graph:
    left = rng.randint(1, 4)
    right = rng.randint(1, 4)
    pool = [(u, 10 + v) for u in range(left) for v in range(right)]
    rng.shuffle(pool)
    edges = pool[: rng.randint(1, min(max_edges, len(pool)))]
    return Graph.from_edges(edges)


def _exact_lists(rng: random.Random, g: Graph, palette: int):
    lists = {}
    for u, v in g.edges():
        need = max(g.degree(u), g.degree(v))
        lists[edge_key(u, v)] = frozenset(
            rng.sample(range(palette), need)
        )
    return lists


def _is_proper(g: Graph, coloring) -> bool:
    for e, c in coloring.items():
        for f, c2 in coloring.items():
            if e < f and set(e) & set(f) and c == c2:
                return False
    return True


def _brute_force_solvable(g: Graph, lists) -> bool:
    edges = [edge_key(u, v) for u, v in g.edges()]
    for combo in itertools.product(*(sorted(lists[e]) for e in edges)):
        coloring = dict(zip(edges, combo))
        if _is_proper(g, coloring):
            return True
    return False


def test_bipartition_splits_even_cycle():
    g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0)])
    a, b = bipartition(g)
    assert {frozenset({0, 2}), frozenset({1, 3})} == {a, b}


def test_bipartition_rejects_odd_cycle():
    g = Graph.from_edges([(0, 1), (1, 2), (0, 2)])
    with pytest.raises(GraphError):
        bipartition(g)


def test_check_list_sizes_raises_on_short_list():
    g = Graph.from_edges([(0, 10), (0, 11)])
    lists = {(0, 10): {1, 2}, (0, 11): {3}}
    with pytest.raises(ListSizeError):
        check_list_sizes(g, lists)


def test_list_edge_color_simple():
    g = Graph.from_edges([(0, 10), (0, 11), (1, 10)])
    lists = {(0, 10): {0, 1}, (0, 11): {0, 1}, (1, 10): {0, 1}}
    out = list_edge_color(g, lists)
    assert _is_proper(g, out)
    assert all(out[e] in lists[e] for e in out)


def test_missing_list_is_an_error():
    g = Graph.from_edges([(0, 10)])
    with pytest.raises(ListSizeError):
        list_edge_color(g, {})


def test_unchecked_mode_reports_exhaustion():
    g = Graph.from_edges([(0, 10), (0, 11)])
    lists = {(0, 10): {1}, (0, 11): {1}}
    with pytest.raises(ListColorError):
        list_edge_color(g, lists, check=False)


def test_exact_size_lists_always_color():
    # threshold-sized lists never fail, per the bipartite list coloring
    # guarantee
    rng = random.Random(91)
    for _ in range(150):
        g = _make_bipartite(rng, max_edges=12)
        lists = _exact_lists(rng, g, palette=rng.randint(6, 15))
        out = list_edge_color(g, lists)
        assert _is_proper(g, out)
        assert all(out[e] in lists[e] for e in out)


def test_search_matches_brute_force_on_small_instances():
    rng = random.Random(92)
    for _ in range(80):
        g = _make_bipartite(rng, max_edges=6)
        lists = _exact_lists(rng, g, palette=8)
        out = list_edge_color(g, lists)
        assert _is_proper(g, out)
        assert _brute_force_solvable(g, lists)
