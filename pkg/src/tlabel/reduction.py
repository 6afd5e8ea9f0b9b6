"""Constructive span-bounded total labeling of plane graphs.

Every plane graph whose maximum degree is at most a bound M >= 12 admits a
(2,1)-total labeling with colors {0..M+2}.  This module makes that bound
effective: it repeatedly locates one of a fixed menu of reducible
structures, shrinks the graph across it, labels the remainder, and extends
the labeling back while logging how much slack each coloring step actually
had against its guaranteed minimum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional

from .exact import find_labeling
from .graphs import Graph, GraphError, PlaneGraph, edge_key
from .labeling import (
    ColorInterval,
    Element,
    PartialLabeling,
    available_edge,
    available_vertex,
    normalize_element,
    validate,
    working_interval,
)
from .listcolor import ListColorError, ListSizeError, list_edge_color

SPARSE_EDGE = "sparse_edge"
LIGHT_EDGE = "light_edge"
DEG4_LOW_NEIGHBOR = "deg4_low_neighbor"
TWO_DEG2 = "two_deg2"
TWIN_LOW_NEIGHBOR = "twin_low_neighbor"
FACE_566 = "face_566"
FACE_567 = "face_567"
ALTERNATOR = "alternator"

KIND_ORDER = (
    SPARSE_EDGE,
    LIGHT_EDGE,
    DEG4_LOW_NEIGHBOR,
    TWO_DEG2,
    TWIN_LOW_NEIGHBOR,
    FACE_566,
    FACE_567,
    ALTERNATOR,
)

# A connected graph this small has maximum degree at most 5, so separate
# vertex and edge colorings spread d-1 apart fit inside any working
# interval with M >= 12; the exact searcher is then guaranteed to succeed.
BASE_ELEMENT_LIMIT = 12


class IrreducibleError(RuntimeError):
    """No reducible structure was found where one is guaranteed."""

    def __init__(self, g: Graph, bound: int):
        self.graph = g
        self.bound = bound
        super().__init__(
            "no reducible structure in a graph with %d vertices, %d edges "
            "under bound %d" % (g.n, g.m, bound)
        )


class ExtensionError(RuntimeError):
    """An extension step found no legal color where one is guaranteed."""


@dataclass(frozen=True)
class ReducibleConfig:
    """One located occurrence of a reducible structure."""

    kind: str
    data: Mapping[str, object]

    def __getitem__(self, key: str):
        return self.data[key]


@dataclass(frozen=True)
class TraceStep:
    """One extension action with its measured and guaranteed slack."""

    action: str  # "assign", "transfer", "recolor", "erase", "check", "list"
    element: Element
    color: Optional[int]
    measured: int
    required: int

    @property
    def ok(self) -> bool:
        return self.measured >= self.required


@dataclass
class ReductionRecord:
    """The steps taken to extend a labeling across one structure."""

    kind: str
    detail: dict
    steps: list = field(default_factory=list)

    def add(self, action: str, element: Element, color: Optional[int],
            measured: int, required: int) -> TraceStep:
        step = TraceStep(action, normalize_element(element), color,
                         measured, required)
        self.steps.append(step)
        return step


@dataclass
class ExtensionTrace:
    """Everything that happened while building one labeling.

    Records appear in extension order, innermost reduction first.
    """

    max_degree_bound: int
    records: list = field(default_factory=list)
    base_cases: int = 0
    splits: int = 0

    def steps(self) -> Iterator[TraceStep]:
        for rec in self.records:
            yield from rec.steps

    def shortfalls(self) -> list[TraceStep]:
        return [s for s in self.steps() if not s.ok]

    def ok(self) -> bool:
        return not self.shortfalls()

    def kind_counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for rec in self.records:
            out[rec.kind] = out.get(rec.kind, 0) + 1
        return out


class _DictView:
    """Read-only labeling facade over a plain dict, for hot paths."""

    __slots__ = ("_map",)

    def __init__(self, mapping: dict):
        self._map = mapping

    def color(self, element: Element) -> Optional[int]:
        return self._map.get(normalize_element(element))

    def __contains__(self, element: Element) -> bool:
        return normalize_element(element) in self._map


# ---------------------------------------------------------------------------
# finders


def _find_sparse_edge(g: Graph, M: int) -> Optional[ReducibleConfig]:
    for u, v in g.edges():
        if g.degree(u) + g.degree(v) <= M - 2:
            return ReducibleConfig(SPARSE_EDGE, {"edge": (u, v)})
    return None


def _find_light_edge(g: Graph, M: int) -> Optional[ReducibleConfig]:
    cap = (M + 2) // 4
    for u, v in g.edges():
        if g.degree(u) + g.degree(v) > M + 1:
            continue
        if g.degree(u) <= cap:
            return ReducibleConfig(LIGHT_EDGE, {"low": u, "edge": (u, v)})
        if g.degree(v) <= cap:
            return ReducibleConfig(LIGHT_EDGE, {"low": v, "edge": (u, v)})
    return None


def _find_deg4_low_neighbor(g: Graph, M: int) -> Optional[ReducibleConfig]:
    for u in sorted(g.vertices):
        if g.degree(u) != 4:
            continue
        for v in sorted(g.neighbors(u)):
            if g.degree(v) <= 7:
                return ReducibleConfig(
                    DEG4_LOW_NEIGHBOR, {"center": u, "edge": (u, v)}
                )
    return None


def _find_two_deg2(g: Graph, M: int) -> Optional[ReducibleConfig]:
    for v in sorted(g.vertices):
        twos = [x for x in sorted(g.neighbors(v)) if g.degree(x) == 2]
        if len(twos) < 2:
            continue
        for x, y in itertools.combinations(twos, 2):
            (xp,) = set(g.neighbors(x)) - {v}
            (yp,) = set(g.neighbors(y)) - {v}
            if xp == y or yp == x:
                continue
            base = {"hub": v, "x": x, "y": y, "x_other": xp, "y_other": yp}
            if xp == yp:
                return ReducibleConfig(TWO_DEG2, {**base, "case": 1})
            if not g.has_edge(v, xp) and not g.has_edge(v, yp):
                return ReducibleConfig(TWO_DEG2, {**base, "case": 3})
    return None


def _find_twin_low_neighbor(g: Graph, M: int) -> Optional[ReducibleConfig]:
    for v in sorted(g.vertices):
        target = M + 2 - g.degree(v)
        if not 2 <= target <= 3:
            continue
        lows = [w for w in sorted(g.neighbors(v)) if g.degree(w) == target]
        if len(lows) < 2:
            continue
        for v1, v2 in itertools.permutations(lows, 2):
            # the apex closes a triangle through the hub and the first twin
            for u in sorted(g.neighbors(v1)):
                if u not in (v, v2) and g.has_edge(u, v):
                    return ReducibleConfig(
                        TWIN_LOW_NEIGHBOR,
                        {"hub": v, "twins": (v1, v2), "apex": u},
                    )
    return None


def _triangle_faces(g: PlaneGraph) -> Iterator[tuple[int, int, int]]:
    for face in g.faces():
        if face.degree == 3 and len(set(face.boundary)) == 3:
            yield tuple(face.boundary)


def _find_face_566(g: PlaneGraph, M: int) -> Optional[ReducibleConfig]:
    for corners in _triangle_faces(g):
        degs = [g.degree(c) for c in corners]
        if 5 not in degs or max(degs) > 6:
            continue
        v1 = min(c for c in corners if g.degree(c) == 5)
        rest = sorted(c for c in corners if c != v1)
        return ReducibleConfig(FACE_566, {"corners": (v1, rest[0], rest[1])})
    return None


def _find_face_567(g: PlaneGraph, M: int) -> Optional[ReducibleConfig]:
    for corners in _triangle_faces(g):
        by_degree = {g.degree(c): c for c in corners}
        if sorted(g.degree(c) for c in corners) != [5, 6, 7]:
            continue
        v1, v2, v3 = by_degree[5], by_degree[6], by_degree[7]
        mates = [
            w for w in sorted(g.neighbors(v1))
            if w not in (v2, v3) and g.degree(w) == 6
        ]
        if mates:
            return ReducibleConfig(
                FACE_567, {"corners": (v1, v2, v3), "outside": mates[0]}
            )
    return None


def find_k_alternator(g: Graph, M: int, k: int) -> Optional[ReducibleConfig]:
    """A bipartite peeling structure for one fixed list budget k.

    The low side holds independent vertices of degree at most k whose every
    neighbor survives on the high side; a high vertex survives only while
    it keeps at least deg(y) + k - M low neighbors.  Peeling runs to a
    fixed point, so membership is order-independent.
    """
    low: set[int] = set()
    for x in sorted(g.vertices):
        if g.degree(x) <= k and not (g.neighbors(x) & low):
            low.add(x)
    while low:
        high = frozenset().union(*(g.neighbors(x) for x in low))
        bad = [
            y for y in sorted(high)
            if len(g.neighbors(y) & low) < g.degree(y) + k - M
        ]
        if not bad:
            cross = tuple(
                sorted(edge_key(x, w) for x in low for w in g.neighbors(x))
            )
            return ReducibleConfig(
                ALTERNATOR,
                {
                    "k": k,
                    "low_side": tuple(sorted(low)),
                    "high_side": tuple(sorted(high)),
                    "edges": cross,
                },
            )
        for y in bad:
            low -= g.neighbors(y)
    return None


def _find_alternator(g: Graph, M: int) -> Optional[ReducibleConfig]:
    for k in range(3, (M + 2) // 4 + 1):
        cfg = find_k_alternator(g, M, k)
        if cfg is not None:
            return cfg
    return None


_FINDERS = {
    SPARSE_EDGE: _find_sparse_edge,
    LIGHT_EDGE: _find_light_edge,
    DEG4_LOW_NEIGHBOR: _find_deg4_low_neighbor,
    TWO_DEG2: _find_two_deg2,
    TWIN_LOW_NEIGHBOR: _find_twin_low_neighbor,
    FACE_566: _find_face_566,
    FACE_567: _find_face_567,
    ALTERNATOR: _find_alternator,
}

_FACE_KINDS = frozenset({FACE_566, FACE_567})


def find_configuration(g: Graph, M: int) -> ReducibleConfig:
    """The first reducible structure in a fixed kind and scan order."""
    for kind in KIND_ORDER:
        if kind in _FACE_KINDS and not isinstance(g, PlaneGraph):
            continue
        cfg = _FINDERS[kind](g, M)
        if cfg is not None:
            return cfg
    raise IrreducibleError(g, M)


def config_holds(g: Graph, M: int, cfg: ReducibleConfig) -> bool:
    """Recheck a previously found structure against a graph."""
    try:
        if cfg.kind == SPARSE_EDGE:
            u, v = cfg["edge"]
            return g.has_edge(u, v) and g.degree(u) + g.degree(v) <= M - 2
        if cfg.kind == LIGHT_EDGE:
            u, v = cfg["edge"]
            low = cfg["low"]
            return (
                g.has_edge(u, v)
                and low in (u, v)
                and g.degree(low) <= (M + 2) // 4
                and g.degree(u) + g.degree(v) <= M + 1
            )
        if cfg.kind == DEG4_LOW_NEIGHBOR:
            u, v = cfg["edge"]
            if cfg["center"] != u:
                u, v = v, u
            return g.has_edge(u, v) and g.degree(u) == 4 and g.degree(v) <= 7
        if cfg.kind == TWO_DEG2:
            v, x, y = cfg["hub"], cfg["x"], cfg["y"]
            xp, yp = cfg["x_other"], cfg["y_other"]
            if not (g.has_edge(v, x) and g.has_edge(v, y)):
                return False
            if g.degree(x) != 2 or g.degree(y) != 2:
                return False
            if set(g.neighbors(x)) != {v, xp} or set(g.neighbors(y)) != {v, yp}:
                return False
            if xp == y or yp == x:
                return False
            if cfg["case"] == 1:
                return xp == yp
            return xp != yp and not g.has_edge(v, xp) and not g.has_edge(v, yp)
        if cfg.kind == TWIN_LOW_NEIGHBOR:
            v, (v1, v2), u = cfg["hub"], cfg["twins"], cfg["apex"]
            target = M + 2 - g.degree(v)
            return (
                2 <= target <= 3
                and v1 != v2
                and g.degree(v1) == target
                and g.degree(v2) == target
                and g.has_edge(v, v1)
                and g.has_edge(v, v2)
                and u not in (v, v1, v2)
                and g.has_edge(u, v)
                and g.has_edge(u, v1)
            )
        if cfg.kind in _FACE_KINDS:
            if not isinstance(g, PlaneGraph):
                return False
            corners = cfg["corners"]
            if not any(
                set(tri) == set(corners) for tri in _triangle_faces(g)
            ):
                return False
            v1, v2, v3 = corners
            if cfg.kind == FACE_566:
                return g.degree(v1) == 5 and g.degree(v2) <= 6 and g.degree(v3) <= 6
            v4 = cfg["outside"]
            return (
                [g.degree(c) for c in corners] == [5, 6, 7]
                and v4 not in corners
                and g.has_edge(v1, v4)
                and g.degree(v4) == 6
            )
        if cfg.kind == ALTERNATOR:
            k = cfg["k"]
            low = set(cfg["low_side"])
            high = set(cfg["high_side"])
            if not 3 <= k <= (M + 2) // 4 or not low:
                return False
            if low & high:
                return False
            for x in low:
                if g.degree(x) > k or not g.neighbors(x) <= high:
                    return False
            if high != frozenset().union(*(g.neighbors(x) for x in low)):
                return False
            return all(
                len(g.neighbors(y) & low) >= g.degree(y) + k - M for y in high
            )
    except (KeyError, GraphError, ValueError):
        return False
    return False


# ---------------------------------------------------------------------------
# reductions


def _suppress_pair(g: PlaneGraph, v: int, x: int, xp: int,
                   y: int, yp: int) -> PlaneGraph:
    """Drop the degree-2 vertices x and y, rewiring v to their far ends.

    Each far end takes the deleted vertex's slot in the rotations, so the
    embedding stays intact and no new crossing can appear.
    """
    adj = {u: set(g.neighbors(u)) for u in g.vertices if u not in (x, y)}
    rot = {u: list(g.rotation(u)) for u in adj}

    def rewire(at: int, old: int, new: int) -> None:
        adj[at].discard(old)
        adj[at].add(new)
        rot[at][rot[at].index(old)] = new

    rewire(v, x, xp)
    rewire(xp, x, v)
    rewire(v, y, yp)
    rewire(yp, y, v)
    return PlaneGraph(adj, rot)


def _delete_edges(g: Graph, pairs) -> Graph:
    if isinstance(g, PlaneGraph):
        return g.delete_edges(pairs)
    out = g
    for u, v in pairs:
        out = out.delete_edge(u, v)
    return out


def reduce_config(g: Graph, cfg: ReducibleConfig) -> Graph:
    """The smaller graph obtained by removing the structure."""
    if cfg.kind in (SPARSE_EDGE, LIGHT_EDGE, DEG4_LOW_NEIGHBOR):
        u, v = cfg["edge"]
        return g.delete_edge(u, v)
    if cfg.kind == TWO_DEG2:
        if cfg["case"] == 1:
            return g.without_vertices((cfg["x"], cfg["y"]))
        if not isinstance(g, PlaneGraph):
            raise GraphError("rewiring a path needs a rotation system")
        return _suppress_pair(
            g, cfg["hub"], cfg["x"], cfg["x_other"], cfg["y"], cfg["y_other"]
        )
    if cfg.kind == TWIN_LOW_NEIGHBOR:
        v = cfg["hub"]
        v1, v2 = cfg["twins"]
        return _delete_edges(g, ((v, v1), (v, v2)))
    if cfg.kind in _FACE_KINDS:
        v1, v2, v3 = cfg["corners"]
        return _delete_edges(g, ((v1, v2), (v1, v3)))
    if cfg.kind == ALTERNATOR:
        return g.without_vertices(cfg["low_side"])
    raise ValueError("unknown structure kind %r" % cfg.kind)


# ---------------------------------------------------------------------------
# extensions


def _erase(work: dict, rec: ReductionRecord, element: Element) -> None:
    key = normalize_element(element)
    rec.add("erase", key, None, 0, 0)
    work.pop(key, None)


def _assign_free(g: Graph, work: dict, itv: ColorInterval,
                 rec: ReductionRecord, element: Element, required: int) -> int:
    """Give the element its smallest legal color, recording the slack."""
    key = normalize_element(element)
    if isinstance(key, tuple):
        avail = available_edge(g, _DictView(work), key, itv)
    else:
        avail = available_vertex(g, _DictView(work), key, itv)
    if not avail:
        rec.add("assign", key, None, 0, required)
        raise ExtensionError(
            "no color available for %r in a %s extension" % (key, rec.kind)
        )
    c = min(avail)
    rec.add("assign", key, c, len(avail), required)
    work[key] = c
    return c


def _assign_fixed(g: Graph, work: dict, itv: ColorInterval,
                  rec: ReductionRecord, element: Element, color: int) -> None:
    """Place a color carried over from the reduced graph, verifying it."""
    key = normalize_element(element)
    if isinstance(key, tuple):
        avail = available_edge(g, _DictView(work), key, itv)
    else:
        avail = available_vertex(g, _DictView(work), key, itv)
    legal = 1 if color in avail else 0
    rec.add("transfer", key, color, legal, 1)
    if not legal:
        raise ExtensionError(
            "carried color %d is illegal on %r in a %s extension"
            % (color, key, rec.kind)
        )
    work[key] = color


def _separate_endpoints(g: Graph, work: dict, itv: ColorInterval,
                        rec: ReductionRecord, u: int, v: int) -> None:
    """Recolor one endpoint of a restored edge so the two ends differ.

    The ends were not adjacent in the reduced graph, so they may share a
    color there.  Recoloring happens against the parent graph, where the
    other end is a neighbor again, so availability rules it out directly.
    The low end has few incident bands, which keeps a color free.
    """
    M = itv.k - 2
    first, second = sorted((u, v), key=lambda t: (g.degree(t), t))
    for a in (first, second):
        held = work.pop(a)
        avail = available_vertex(g, _DictView(work), a, itv)
        if avail:
            rec.add("recolor", a, min(avail), len(avail),
                    max(0, M + 6 - 4 * g.degree(a)))
            work[a] = min(avail)
            return
        work[a] = held
    # move one incident edge color aside to free a band for the endpoint
    for a in (first, second):
        for w in sorted(g.neighbors(a)):
            ek = edge_key(a, w)
            if ek not in work:
                continue
            old = work.pop(ek)
            cands = sorted(
                available_edge(g, _DictView(work), ek, itv) - {old}
            )
            moved = False
            for r in cands:
                work[ek] = r
                held = work.pop(a)
                avail = available_vertex(g, _DictView(work), a, itv)
                if avail:
                    rec.add("recolor", ek, r, len(cands), 0)
                    rec.add("recolor", a, min(avail), len(avail), 0)
                    work[a] = min(avail)
                    moved = True
                    break
                work[a] = held
            if moved:
                return
            work[ek] = old
    raise ExtensionError(
        "endpoints of restored edge (%d, %d) cannot be separated" % (u, v)
    )


def _extend_sparse_edge(g: Graph, work: dict, cfg: ReducibleConfig,
                        itv: ColorInterval, rec: ReductionRecord) -> None:
    u, v = cfg["edge"]
    M = itv.k - 2
    if work[u] == work[v]:
        _separate_endpoints(g, work, itv, rec, u, v)
    required = max(1, M - 1 - g.degree(u) - g.degree(v))
    _assign_free(g, work, itv, rec, (u, v), required)


def _extend_light_edge(g: Graph, work: dict, cfg: ReducibleConfig,
                       itv: ColorInterval, rec: ReductionRecord) -> None:
    u = cfg["low"]
    a, b = cfg["edge"]
    M = itv.k - 2
    _erase(work, rec, u)
    _assign_free(g, work, itv, rec, (a, b),
                 max(1, M + 2 - g.degree(a) - g.degree(b)))
    _assign_free(g, work, itv, rec, u, max(1, M + 3 - 4 * g.degree(u)))


def _extend_deg4_low_neighbor(g: Graph, work: dict, cfg: ReducibleConfig,
                              itv: ColorInterval, rec: ReductionRecord) -> None:
    u = cfg["center"]
    a, b = cfg["edge"]
    other = b if a == u else a
    M = itv.k - 2
    _erase(work, rec, u)
    view = _DictView(work)
    slack = available_vertex(g, view, u, itv)
    rec.add("check", u, None, len(slack), max(2, M - 10))
    cands = sorted(available_edge(g, view, (u, other), itv))
    required = max(3, M - 2 - g.degree(other))
    key = edge_key(u, other)
    # some candidate leaves the center colorable because its band cannot
    # cover two spare colors three different ways
    for c in cands:
        work[key] = c
        after = available_vertex(g, _DictView(work), u, itv)
        if after:
            rec.add("assign", key, c, len(cands), required)
            rec.add("assign", u, min(after), len(after), 1)
            work[u] = min(after)
            return
        del work[key]
    rec.add("assign", key, None, 0, required)
    raise ExtensionError("no edge candidate leaves the center colorable")


def _extend_two_deg2(g: Graph, work: dict, cfg: ReducibleConfig,
                     itv: ColorInterval, rec: ReductionRecord) -> None:
    v, x, y = cfg["hub"], cfg["x"], cfg["y"]
    xp, yp = cfg["x_other"], cfg["y_other"]
    M = itv.k - 2
    if cfg["case"] == 1:
        ring = [(v, x), (x, xp), (xp, y), (y, v)]
        view = _DictView(work)
        lists = {
            edge_key(*e): available_edge(g, view, e, itv) for e in ring
        }
        helper = Graph.from_edges(ring)
        try:
            colored = list_edge_color(helper, lists)
        except (ListSizeError, ListColorError) as exc:
            raise ExtensionError(str(exc)) from exc
        for e in ring:
            key = edge_key(*e)
            anchor = v if v in key else xp
            rec.add("list", key, colored[key], len(lists[key]),
                    max(2, M + 2 - g.degree(anchor)))
            work[key] = colored[key]
    else:
        carried_x = work.pop(edge_key(v, xp))
        carried_y = work.pop(edge_key(v, yp))
        rec.add("erase", edge_key(v, xp), None, 0, 0)
        rec.add("erase", edge_key(v, yp), None, 0, 0)
        _assign_fixed(g, work, itv, rec, (x, xp), carried_x)
        _assign_fixed(g, work, itv, rec, (v, y), carried_x)
        _assign_fixed(g, work, itv, rec, (y, yp), carried_y)
        _assign_fixed(g, work, itv, rec, (v, x), carried_y)
    _assign_free(g, work, itv, rec, x, max(1, M - 5))
    _assign_free(g, work, itv, rec, y, max(1, M - 5))


def _extend_twin_low_neighbor(g: Graph, work: dict, cfg: ReducibleConfig,
                              itv: ColorInterval, rec: ReductionRecord) -> None:
    v = cfg["hub"]
    v1, v2 = cfg["twins"]
    u = cfg["apex"]
    M = itv.k - 2
    _erase(work, rec, v1)
    _erase(work, rec, v2)
    e1, e2 = edge_key(v, v1), edge_key(v, v2)
    view = _DictView(work)
    avail1 = available_edge(g, view, e1, itv)
    avail2 = available_edge(g, view, e2, itv)
    if len(avail1) == 1 and avail1 == avail2:
        # both edges are pinned to the same color, so trade the apex
        # edge colors: the hub frees one color the second edge can take
        ka, kb = edge_key(u, v), edge_key(u, v1)
        ca, cb = work.pop(ka), work.pop(kb)
        _assign_fixed(g, work, itv, rec, ka, cb)
        _assign_fixed(g, work, itv, rec, kb, ca)
        view = _DictView(work)
        avail1 = available_edge(g, view, e1, itv)
        avail2 = available_edge(g, view, e2, itv)
    for c1 in sorted(avail1):
        rest = avail2 - {c1}
        if rest:
            rec.add("assign", e1, c1, len(avail1), 1)
            work[e1] = c1
            rec.add("assign", e2, min(rest), len(rest), 1)
            work[e2] = min(rest)
            break
    else:
        rec.add("assign", e1, None, 0, 1)
        raise ExtensionError("hub edges cannot take distinct colors")
    _assign_free(g, work, itv, rec, v1, max(1, M + 3 - 4 * g.degree(v1)))
    _assign_free(g, work, itv, rec, v2, max(1, M + 3 - 4 * g.degree(v2)))


def _face_pair_attempt(g: Graph, work: dict, itv: ColorInterval,
                       rec: ReductionRecord, e12: tuple, e13: tuple) -> bool:
    """Try to color both deleted face edges, committing only on success."""
    first = sorted(available_edge(g, _DictView(work), e12, itv))
    for c in first:
        work[e12] = c
        second = available_edge(g, _DictView(work), e13, itv)
        if second:
            rec.add("assign", e12, c, len(first), 1)
            rec.add("assign", e13, min(second), len(second), 1)
            work[e13] = min(second)
            return True
        del work[e12]
    return False


def _extend_face(g: Graph, work: dict, cfg: ReducibleConfig,
                 itv: ColorInterval, rec: ReductionRecord) -> None:
    v1, v2, v3 = cfg["corners"]
    M = itv.k - 2
    e12, e13 = edge_key(v1, v2), edge_key(v1, v3)
    if work[v1] in (work[v2], work[v3]):
        # the low corner lost both face edges in the reduced graph, so it
        # may collide with a mate it is about to rejoin; two missing bands
        # leave it at least M - 11 fresh colors
        del work[v1]
        avail = available_vertex(g, _DictView(work), v1, itv)
        if not avail:
            raise ExtensionError(
                "low corner %d of a tight face cannot be recolored" % v1
            )
        rec.add("recolor", v1, min(avail), len(avail),
                max(1, M + 9 - 4 * g.degree(v1)))
        work[v1] = min(avail)
    view = _DictView(work)
    rec.add("check", e12, None,
            len(available_edge(g, view, e12, itv)),
            max(0, M - g.degree(v1) - g.degree(v2)))
    rec.add("check", e13, None,
            len(available_edge(g, view, e13, itv)),
            max(0, M - g.degree(v1) - g.degree(v3)))

    if _face_pair_attempt(g, work, itv, rec, e12, e13):
        return

    # freeing a color seen by both endpoints of the third side unsticks
    # the pinned pair
    e23 = edge_key(v2, v3)
    old = work.pop(e23)
    cands = sorted(available_edge(g, _DictView(work), e23, itv))
    for r in cands:
        if r == old:
            continue
        work[e23] = r
        rec.add("recolor", e23, r, len(cands), 1)
        if _face_pair_attempt(g, work, itv, rec, e12, e13):
            return
        rec.steps.pop()
        del work[e23]
    work[e23] = old

    if cfg.kind == FACE_567:
        # moving the outside edge at the low corner releases its old color
        # for the third-side two-step
        v4 = cfg["outside"]
        e14 = edge_key(v1, v4)
        old14 = work[e14]
        cands14 = sorted(available_edge(g, _DictView(work), e14, itv))
        for r in cands14:
            work[e14] = r
            rec.add("recolor", e14, r, len(cands14), 1)
            if _face_pair_attempt(g, work, itv, rec, e12, e13):
                return
            rec.steps.pop()
            work[e14] = old14

    rec.add("assign", e12, None, 0, 1)
    raise ExtensionError("face edges cannot be recolored consistently")


def _extend_alternator(g: Graph, work: dict, cfg: ReducibleConfig,
                       itv: ColorInterval, rec: ReductionRecord) -> None:
    M = itv.k - 2
    low = cfg["low_side"]
    cross = [edge_key(*e) for e in cfg["edges"]]
    view = _DictView(work)
    lists = {e: available_edge(g, view, e, itv) for e in cross}
    helper = Graph.from_edges(cross)
    try:
        colored = list_edge_color(helper, lists)
    except (ListSizeError, ListColorError) as exc:
        raise ExtensionError(str(exc)) from exc
    for e in cross:
        need = max(helper.degree(e[0]), helper.degree(e[1]))
        rec.add("list", e, colored[e], len(lists[e]), need)
        work[e] = colored[e]
    for x in sorted(low):
        _assign_free(g, work, itv, rec, x, max(1, M + 3 - 4 * g.degree(x)))


_EXTENDERS = {
    SPARSE_EDGE: _extend_sparse_edge,
    LIGHT_EDGE: _extend_light_edge,
    DEG4_LOW_NEIGHBOR: _extend_deg4_low_neighbor,
    TWO_DEG2: _extend_two_deg2,
    TWIN_LOW_NEIGHBOR: _extend_twin_low_neighbor,
    FACE_566: _extend_face,
    FACE_567: _extend_face,
    ALTERNATOR: _extend_alternator,
}


# ---------------------------------------------------------------------------
# the driver


@dataclass
class _Node:
    graph: Graph
    mode: str = ""
    config: Optional[ReducibleConfig] = None
    children: list = field(default_factory=list)


def label_planar(g: PlaneGraph, M: Optional[int] = None,
                 deep_check: bool = False) -> tuple[PartialLabeling, ExtensionTrace]:
    """A total labeling of g with colors {0..M+2}, plus its build trace.

    M defaults to max(12, max degree).  The reduction tree is built
    iteratively because deleting one element at a time nests about as deep
    as the graph is large.  With deep_check every intermediate labeling is
    validated, not just the final one.
    """
    if not isinstance(g, PlaneGraph):
        raise GraphError("a plane graph with a rotation system is required")
    delta = g.max_degree if g.n else 0
    if M is None:
        M = max(12, delta)
    if M < 12:
        raise ValueError("the labeling guarantee needs a bound of at least 12")
    if delta > M:
        raise ValueError(
            "maximum degree %d exceeds the bound %d" % (delta, M)
        )
    itv = working_interval(M)
    trace = ExtensionTrace(M)

    nodes = [_Node(g)]
    i = 0
    while i < len(nodes):
        node = nodes[i]
        h = node.graph
        if h.n and not h.is_connected():
            node.mode = "split"
            parts = (
                h.plane_components() if isinstance(h, PlaneGraph)
                else [h.induced(c) for c in h.components()]
            )
            for part in parts:
                node.children.append(len(nodes))
                nodes.append(_Node(part))
        elif h.n + h.m <= BASE_ELEMENT_LIMIT:
            node.mode = "base"
        else:
            cfg = find_configuration(h, M)
            node.mode = "reduce"
            node.config = cfg
            node.children.append(len(nodes))
            nodes.append(_Node(reduce_config(h, cfg)))
        i += 1

    results: list[Optional[dict]] = [None] * len(nodes)
    for i in reversed(range(len(nodes))):
        node = nodes[i]
        if node.mode == "base":
            phi, _ = find_labeling(node.graph, itv)
            if phi is None:
                raise ExtensionError(
                    "a base graph with %d elements has no labeling in a "
                    "%d-color interval" % (node.graph.n + node.graph.m, itv.size)
                )
            work = phi.as_dict()
            trace.base_cases += 1
        elif node.mode == "split":
            work = {}
            for child in node.children:
                work.update(results[child])
            trace.splits += 1
        else:
            work = dict(results[node.children[0]])
            rec = ReductionRecord(node.config.kind, dict(node.config.data))
            _EXTENDERS[node.config.kind](node.graph, work, node.config, itv, rec)
            trace.records.append(rec)
        if deep_check:
            bad = validate(node.graph, PartialLabeling(work), itv)
            if bad:
                raise ExtensionError(
                    "intermediate labeling violates %d constraints: %r"
                    % (len(bad), bad[:3])
                )
        results[i] = work

    out = PartialLabeling(results[0])
    if not out.is_total(g):
        raise ExtensionError("extension finished without covering the graph")
    bad = validate(g, out, itv)
    if bad:
        raise ExtensionError(
            "final labeling violates %d constraints: %r" % (len(bad), bad[:3])
        )
    return out, trace
