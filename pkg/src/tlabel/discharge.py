"""Mechanized charge bookkeeping over plane graphs.

The audit has two halves.  A structural scan hunts for local patterns that
always allow a labeling to be extended, so a graph containing one can never
be a minimal counterexample.  When the scan comes up empty, an exact
rational charge redistribution runs; its fixed negative total certifies
that a clean scan describes an impossible graph, and any vertex or face
left negative shows exactly where the bookkeeping says so.  All charge
arithmetic uses Fraction, so nothing is lost to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .graphs import DisconnectedError, Graph, GraphError, PlaneGraph


class AuditError(RuntimeError):
    """The charge rules cannot be applied to this graph."""


@dataclass(frozen=True)
class StructureViolation:
    """One local pattern that contradicts minimality."""

    code: str
    note: str
    elements: tuple

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "note": self.note,
            "elements": [list(e) if isinstance(e, tuple) else e
                         for e in self.elements],
        }


@dataclass
class ChargeLedger:
    """Exact charges keyed by ("v", vertex) and ("f", face index)."""

    charges: dict

    def get(self, key) -> Fraction:
        return self.charges[key]

    def move(self, frm, to, amount: Fraction) -> None:
        self.charges[frm] -= amount
        self.charges[to] += amount

    def total(self) -> Fraction:
        return sum(self.charges.values(), Fraction(0))

    def negatives(self) -> tuple:
        return tuple(
            k for k in sorted(self.charges) if self.charges[k] < 0
        )

    def to_dict(self) -> dict:
        verts = {
            str(k[1]): str(c) for k, c in self.charges.items() if k[0] == "v"
        }
        faces = {
            str(k[1]): str(c) for k, c in self.charges.items() if k[0] == "f"
        }
        return {"vertices": verts, "faces": faces, "total": str(self.total())}


def initial_charges(g: PlaneGraph) -> ChargeLedger:
    """Degree-minus-four charges; any connected plane graph totals -8."""
    charges: dict = {}
    for v in g.vertices:
        charges[("v", v)] = Fraction(g.degree(v) - 4)
    for idx, face in enumerate(g.faces()):
        charges[("f", idx)] = Fraction(face.degree - 4)
    return ChargeLedger(charges)


SPECIAL_FACE_DEGREES = (5, 6, 7)


def classify_faces(g: PlaneGraph) -> tuple[str, ...]:
    """Label each face "special", "normal" (other triangles), or "big"."""
    out = []
    for face in g.faces():
        if face.degree != 3 or len(set(face.boundary)) != 3:
            out.append("big")
        elif sorted(g.degree(v) for v in face.boundary) == list(
            SPECIAL_FACE_DEGREES
        ):
            out.append("special")
        else:
            out.append("normal")
    return tuple(out)


# ---------------------------------------------------------------------------
# master assignment


@dataclass
class MasterOutcome:
    """Result of assigning low vertices to adjacent high-degree masters."""

    budget: int
    status: str  # "ok" or "deficient"
    masters: dict
    load: dict
    violator: frozenset = frozenset()
    unmatched: Optional[int] = None


def assign_masters(g: Graph, k: int,
                   clients: Optional[Iterable[int]] = None) -> MasterOutcome:
    """Match every client to an adjacent vertex of degree above k.

    Masters take at most k - 1 clients each.  Clients default to all
    vertices of degree at most k.  On failure the violator set is the
    saturated neighborhood blocking the unmatched client, a Hall-style
    certificate that no assignment exists.
    """
    if clients is None:
        clients = [v for v in sorted(g.vertices) if g.degree(v) <= k]
    else:
        clients = sorted(clients)
    cap = k - 1
    match: dict = {}
    load: dict = {}

    def attempt(x: int, visited: set) -> bool:
        for m in sorted(g.neighbors(x)):
            if g.degree(m) <= k or m in visited:
                continue
            visited.add(m)
            if load.get(m, 0) < cap:
                match[x] = m
                load[m] = load.get(m, 0) + 1
                return True
            for x2 in sorted(c for c, mm in match.items() if mm == m):
                if attempt(x2, visited):
                    match[x] = m
                    return True
        return False

    for x in clients:
        visited: set = set()
        if not attempt(x, visited):
            return MasterOutcome(
                k, "deficient", dict(match), dict(load),
                frozenset(visited), x,
            )
    return MasterOutcome(k, "ok", match, load)


# ---------------------------------------------------------------------------
# discharging rules


def apply_rules(g: PlaneGraph, M: int) -> ChargeLedger:
    """Redistribute charge; moves only, so the total stays -8.

    Senders: every vertex of degree at least M pushes 1/2 to each
    neighbor of degree 2; every vertex of degree 2 or 3 additionally
    pulls 1 from its assigned master; triangle corners pay their face on
    a sliding scale by degree, with the special triangles cheaper for
    the 5-corner.
    """
    ledger = initial_charges(g)
    needy = [v for v in sorted(g.vertices) if g.degree(v) in (2, 3)]
    masters: dict = {}
    if needy:
        outcome = assign_masters(g, 3, clients=needy)
        if outcome.status != "ok":
            raise AuditError(
                "vertex %d of degree %d has no master with spare capacity"
                % (outcome.unmatched, g.degree(outcome.unmatched))
            )
        masters = outcome.masters

    half = Fraction(1, 2)
    for v in needy:
        ledger.move(("v", masters[v]), ("v", v), Fraction(1))
        if g.degree(v) == 2:
            for w in sorted(g.neighbors(v)):
                if g.degree(w) >= M:
                    ledger.move(("v", w), ("v", v), half)

    labels = classify_faces(g)
    for idx, face in enumerate(g.faces()):
        kind = labels[idx]
        if kind == "big":
            continue
        for v in face.boundary:
            d = g.degree(v)
            if d == 5:
                amount = Fraction(1, 4) if kind == "special" else Fraction(1, 6)
            elif d in (6, 7):
                amount = Fraction(d - 4, d)
            elif d >= 8:
                amount = half
            else:
                continue
            ledger.move(("v", v), ("f", idx), amount)
    return ledger


# ---------------------------------------------------------------------------
# structural scan


def _triangle_faces_indexed(g: PlaneGraph):
    for idx, face in enumerate(g.faces()):
        if face.degree == 3 and len(set(face.boundary)) == 3:
            yield idx, tuple(face.boundary)


def scan_structure(g: Graph, M: int) -> tuple[StructureViolation, ...]:
    """Every local pattern that rules the graph out as a counterexample.

    Codes: C1 disconnection, C2 sparse edges, C3 light edges, C4 master
    deficiency, C5 weak or overloaded masters, C6a low 4-vertices, C6b
    small-corner triangles, C6c paired 2-neighbors, C6d twinned low
    neighbors on a triangle, C6e special triangles with an outside mate.
    """
    found: list[StructureViolation] = []

    if g.n and not g.is_connected():
        sizes = sorted((len(c) for c in g.components()), reverse=True)
        found.append(StructureViolation(
            "C1", "disconnected: component sizes %s" % sizes, ()
        ))

    for u, v in g.edges():
        du, dv = g.degree(u), g.degree(v)
        if du + dv <= M - 2:
            found.append(StructureViolation(
                "C2", "edge degree sum %d is at most %d" % (du + dv, M - 2),
                ((u, v),),
            ))

    cap = (M + 2) // 4
    for u, v in g.edges():
        du, dv = g.degree(u), g.degree(v)
        if min(du, dv) <= cap and du + dv <= M + 1:
            found.append(StructureViolation(
                "C3",
                "edge with a degree-%d end and degree sum %d"
                % (min(du, dv), du + dv),
                ((u, v),),
            ))

    for k in (2, 3):
        outcome = assign_masters(g, k)
        if outcome.status != "ok":
            found.append(StructureViolation(
                "C4",
                "budget %d: vertex %d cannot be assigned a master"
                % (k, outcome.unmatched),
                tuple(sorted(outcome.violator)),
            ))
        else:
            for m in sorted(outcome.load):
                if g.degree(m) < M + 2 - k:
                    found.append(StructureViolation(
                        "C5",
                        "budget %d: master %d has degree %d, below %d"
                        % (k, m, g.degree(m), M + 2 - k),
                        (m,),
                    ))
                if outcome.load[m] > k - 1:
                    found.append(StructureViolation(
                        "C5",
                        "budget %d: master %d carries %d clients"
                        % (k, m, outcome.load[m]),
                        (m,),
                    ))

    for u in sorted(g.vertices):
        if g.degree(u) != 4:
            continue
        for v in sorted(g.neighbors(u)):
            if g.degree(v) <= 7:
                found.append(StructureViolation(
                    "C6a",
                    "4-vertex beside a vertex of degree %d" % g.degree(v),
                    (u, v),
                ))

    for v in sorted(g.vertices):
        twos = [x for x in sorted(g.neighbors(v)) if g.degree(x) == 2]
        hit = None
        for i, x in enumerate(twos):
            for y in twos[i + 1:]:
                (xp,) = set(g.neighbors(x)) - {v}
                (yp,) = set(g.neighbors(y)) - {v}
                if xp == y or yp == x:
                    continue
                if xp == yp:
                    hit = (x, y, 1)
                elif not g.has_edge(v, xp) and not g.has_edge(v, yp):
                    hit = (x, y, 3)
                if hit:
                    break
            if hit:
                break
        if hit:
            x, y, case = hit
            found.append(StructureViolation(
                "C6c",
                "vertex with two 2-neighbors (shape %d)" % case,
                (v, x, y),
            ))

    if isinstance(g, PlaneGraph) and g.is_connected():
        for idx, corners in _triangle_faces_indexed(g):
            degs = [g.degree(c) for c in corners]
            if 5 in degs and max(degs) <= 6:
                found.append(StructureViolation(
                    "C6b",
                    "triangle face with degrees %s" % sorted(degs),
                    (corners,),
                ))

        for idx, corners in _triangle_faces_indexed(g):
            hit6d = None
            for v in corners:
                target = M + 2 - g.degree(v)
                if not 2 <= target <= 3:
                    continue
                for v1 in corners:
                    if v1 == v or not g.has_edge(v, v1):
                        continue
                    if g.degree(v1) != target:
                        continue
                    (u,) = set(corners) - {v, v1}
                    if not (g.has_edge(u, v) and g.has_edge(u, v1)):
                        continue
                    mates = [
                        w for w in sorted(g.neighbors(v))
                        if w not in (v1, u) and g.degree(w) == target
                    ]
                    if mates:
                        hit6d = (v, v1, mates[0], u)
                        break
                if hit6d:
                    break
            if hit6d:
                found.append(StructureViolation(
                    "C6d",
                    "twin low neighbors of a high vertex on a triangle face",
                    hit6d,
                ))

        for idx, corners in _triangle_faces_indexed(g):
            if sorted(g.degree(c) for c in corners) != [5, 6, 7]:
                continue
            by_degree = {g.degree(c): c for c in corners}
            v1 = by_degree[5]
            mates = [
                w for w in sorted(g.neighbors(v1))
                if w not in corners and g.degree(w) == 6
            ]
            if mates:
                found.append(StructureViolation(
                    "C6e",
                    "special triangle whose 5-corner has an outside "
                    "6-neighbor",
                    (corners, mates[0]),
                ))

    return tuple(found)


# ---------------------------------------------------------------------------
# the audit


@dataclass
class AuditReport:
    """Outcome of scanning and, when the scan is clean, discharging."""

    bound: int
    status: str  # "reducible" or "CONTRADICTION-CANDIDATE"
    violations: tuple
    initial_total: Optional[Fraction] = None
    final: Optional[ChargeLedger] = None
    negatives: tuple = ()

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "status": self.status,
            "violations": [v.to_dict() for v in self.violations],
            "initial_total": (
                None if self.initial_total is None else str(self.initial_total)
            ),
            "discharge": None if self.final is None else self.final.to_dict(),
            "negatives": [list(k) for k in self.negatives],
        }


def audit(g: PlaneGraph, M: Optional[int] = None) -> AuditReport:
    """Scan for reducible structure, discharging only on a clean scan.

    A clean scan would mean the graph evades every reduction this package
    can perform, which the charge argument says cannot happen; such a
    graph is reported as a contradiction candidate for manual review.
    """
    if not isinstance(g, PlaneGraph):
        raise GraphError("auditing needs a plane graph with rotations")
    delta = g.max_degree if g.n else 0
    if M is None:
        M = max(12, delta)
    if M < 12:
        raise ValueError("the audit argument needs a bound of at least 12")
    if delta > M:
        raise ValueError("maximum degree %d exceeds the bound %d" % (delta, M))

    violations = scan_structure(g, M)
    try:
        initial = initial_charges(g).total()
    except (DisconnectedError, GraphError):
        initial = None

    if violations:
        return AuditReport(M, "reducible", violations, initial)

    ledger = apply_rules(g, M)
    return AuditReport(
        M, "CONTRADICTION-CANDIDATE", (), initial, ledger, ledger.negatives()
    )
