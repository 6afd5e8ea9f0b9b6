"""Independent brute-force reference for optimal total labelings.

Deliberately unsophisticated: elements are taken in a fixed order, colors
are tried smallest first, and each placement is checked directly against
everything already placed.  Slow but easy to believe, which is the point
of an oracle.
"""

from __future__ import annotations


def _elements(g):
    # most-constrained vertices first keeps refutations from wandering
    verts = [("v", v) for v in sorted(g.vertices, key=lambda v: (-g.degree(v), v))]
    edges = [("e", e) for e in sorted(
        g.edges(), key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e))]
    return verts + edges


def _fits(g, kind, item, color, chosen, d):
    if kind == "v":
        for w in g.neighbors(item):
            if chosen.get(("v", w)) == color:
                return False
        for w in g.neighbors(item):
            e = tuple(sorted((item, w)))
            ce = chosen.get(("e", e))
            if ce is not None and abs(ce - color) < d:
                return False
        return True
    u, v = item
    for end in (u, v):
        cv = chosen.get(("v", end))
        if cv is not None and abs(cv - color) < d:
            return False
        for w in g.neighbors(end):
            f = tuple(sorted((end, w)))
            if f != item and chosen.get(("e", f)) == color:
                return False
    return True


def _touched(g, kind, item):
    """Elements whose remaining choices a placement at item can narrow."""
    out = set()
    if kind == "v":
        for w in g.neighbors(item):
            out.add(("v", w))
            out.add(("e", tuple(sorted((item, w)))))
    else:
        for end in item:
            out.add(("v", end))
            for w in g.neighbors(end):
                out.add(("e", tuple(sorted((end, w)))))
        out.discard(("e", item))
    return out


def _starved(g, suspects, chosen, k, d):
    for kind, item in suspects:
        if (kind, item) in chosen:
            continue
        if not any(_fits(g, kind, item, c, chosen, d) for c in range(k + 1)):
            return True
    return False


def admits_labeling(g, k, d=2):
    """Whether some (d,1)-total labeling uses only colors 0..k.

    Two sound symmetry cuts: with d = 1 every constraint is plain
    distinctness, so colors can be forced to appear in first-use order;
    for any d the reflection c -> k - c preserves validity, so the first
    element never needs a color past the midpoint.
    """
    elems = _elements(g)
    chosen = {}

    def rec(i):
        if i == len(elems):
            return True
        kind, item = elems[i]
        suspects = _touched(g, kind, item)
        if d == 1:
            top = min(k, max(chosen.values(), default=-1) + 1)
        elif i == 0:
            top = k // 2
        else:
            top = k
        for color in range(top + 1):
            if _fits(g, kind, item, color, chosen, d):
                chosen[(kind, item)] = color
                if not _starved(g, suspects, chosen, k, d):
                    if rec(i + 1):
                        return True
                del chosen[(kind, item)]
        return False

    return rec(0)


def naive_lambda(g, d=2):
    """Smallest k admitting a (d,1)-total labeling, found from zero up."""
    k = 0
    while True:
        if admits_labeling(g, k, d):
            return k
        k += 1
