"""Exact small-scale solver: optimal spans, bounds, and budgets."""

from __future__ import annotations

import random

from tlabel.exact import (
    bounds,
    chromatic_number,
    edge_chromatic_number,
    find_labeling,
    lambda_exact,
    span_lower_bound,
)
from tlabel.families import generate
from tlabel.graphs import Graph
from tlabel.labeling import ColorInterval, validate

from oracle import naive_lambda


def _make(edges, vertices=()):
    return Graph.from_edges(edges, vertices=vertices)


def test_lambda_frozen_values():
    assert lambda_exact(_make([(0, 1)]), d=2).value == 3
    assert lambda_exact(_make([(0, 1)]), d=1).value == 2
    assert lambda_exact(_make([(0, 1), (1, 2)]), d=2).value == 4
    assert lambda_exact(_make([(0, 1), (0, 2), (0, 3)]), d=2).value == 4
    assert lambda_exact(_make([(0, 1), (1, 2), (0, 2)]), d=2).value == 4
    assert lambda_exact(_make([], vertices=range(3)), d=2).value == 0


def test_lambda_result_carries_a_valid_witness():
    g = generate("wheel", 5)
    res = lambda_exact(g, d=2)
    assert res.solved and res.status == "solved"
    assert res.witness is not None
    assert res.witness.is_total(g)
    assert validate(g, res.witness, ColorInterval(res.value, 2)) == []
    assert res.witness.max_color() == res.value


def test_lambda_merges_components():
    g = _make([(0, 1), (2, 3)], vertices=range(4))
    res = lambda_exact(g, d=2)
    assert res.value == 3
    assert res.witness.is_total(g)


def test_lambda_budget_exhaustion_is_reported():
    g = _make([(u, v) for u in range(6) for v in range(u + 1, 6)])
    res = lambda_exact(g, d=2, budget=10)
    assert res.status == "unknown" and not res.solved
    assert res.value is None


def test_span_lower_bound_cases():
    assert span_lower_bound(_make([], vertices=range(4)), 2) == 0
    # star: max degree 3 > d, not regular
    assert span_lower_bound(_make([(0, 1), (0, 2), (0, 3)]), 2) == 4
    # triangle: regular, so one more
    assert span_lower_bound(_make([(0, 1), (1, 2), (0, 2)]), 2) == 4
    # path: d >= max degree, so one more
    assert span_lower_bound(_make([(0, 1), (1, 2)]), 2) == 4
    assert span_lower_bound(_make([(0, 1), (1, 2)]), 1) == 2


def test_chromatic_numbers_frozen():
    tri = _make([(0, 1), (1, 2), (0, 2)])
    assert chromatic_number(tri) == 3
    assert edge_chromatic_number(tri) == 3
    c5 = generate("cycle", 5)
    assert chromatic_number(c5) == 3
    assert edge_chromatic_number(c5) == 3
    star = _make([(0, 1), (0, 2), (0, 3)])
    assert chromatic_number(star) == 2
    assert edge_chromatic_number(star) == 3


def test_bounds_sandwich_c5():
    c5 = generate("cycle", 5)
    assert bounds(c5, d=2) == (4, 6)
    lam = lambda_exact(c5, d=2).value
    assert 4 <= lam <= 6


def test_find_labeling_none_when_interval_too_small():
    tri = _make([(0, 1), (1, 2), (0, 2)])
    phi, nodes = find_labeling(tri, ColorInterval(3, 2))
    assert phi is None and nodes > 0
    phi2, _ = find_labeling(tri, ColorInterval(4, 2))
    assert phi2 is not None and phi2.is_total(tri)


def test_exact_agrees_with_oracle_on_random_small_graphs():
    rng = random.Random(17)
    for _ in range(25):
        n = rng.randint(2, 5)
        pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = [e for e in pool if rng.random() < 0.5]
        g = _make(edges, vertices=range(n))
        for d in (1, 2):
            assert lambda_exact(g, d=d).value == naive_lambda(g, d)


def test_bounds_hold_on_families():
    rng = random.Random(5)
    for _ in range(8):
        g = generate("random_planar", rng.randint(4, 7), seed=rng.randint(0, 99))
        lo, hi = bounds(g, d=2)
        lam = lambda_exact(g, d=2).value
        assert lo <= lam <= hi
