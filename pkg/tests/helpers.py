"""Shared builders for the test suite."""

from __future__ import annotations

import pathlib
import random

from twistlab.diagram import LinkDiagram, diagram_from_arcs
from twistlab import (
    INFINITY,
    ZERO,
    build_standard,
    enumerate_standard,
    mirror,
    smooth,
    switch,
)

DATA = pathlib.Path(__file__).parent / "data"


def pretzel(*twists: int) -> LinkDiagram:
    """Vertical twist columns side by side, tops and bottoms chained."""
    arcs, corners, cr = [], [], 0
    for m in twists:
        ids = list(range(cr, cr + m))
        cr += m
        for a, b in zip(ids, ids[1:]):
            arcs += [((a, 3), (b, 2)), ((a, 0), (b, 1))]
        corners.append(
            {"NW": (ids[0], 2), "NE": (ids[0], 1), "SW": (ids[-1], 3), "SE": (ids[-1], 0)}
        )
    for c1, c2 in zip(corners, corners[1:]):
        arcs += [(c1["NE"], c2["NW"]), (c1["SE"], c2["SW"])]
    arcs += [(corners[0]["NW"], corners[-1]["NE"]), (corners[0]["SW"], corners[-1]["SE"])]
    return diagram_from_arcs(cr, arcs)


def add_curl(d: LinkDiagram, endpoint: int, sign: int) -> LinkDiagram:
    """Insert a kink of the given writhe into the arc at one endpoint."""
    n = d.crossings
    b = 4 * n
    f = d.mate[endpoint]
    mate = list(d.mate) + [-1] * 4
    if sign > 0:
        mate[endpoint], mate[b + 2] = b + 2, endpoint
        mate[f], mate[b + 3] = b + 3, f
        mate[b + 0], mate[b + 1] = b + 1, b + 0
    else:
        mate[endpoint], mate[b + 3] = b + 3, endpoint
        mate[f], mate[b + 0] = b + 0, f
        mate[b + 1], mate[b + 2] = b + 2, b + 1
    return LinkDiagram(tuple(mate), d.free_loops, d.tags + (None,))


def relabel(d: LinkDiagram, perm, rots=None) -> LinkDiagram:
    """Renumber crossings by perm and half-turn those with rots[c] == 2."""
    n = d.crossings
    rots = rots or [0] * n

    def f(e: int) -> int:
        c, s = divmod(e, 4)
        return 4 * perm[c] + (s ^ rots[c])

    mate = [-1] * (4 * n)
    for e, m in enumerate(d.mate):
        mate[f(e)] = f(m)
    tags = [None] * n
    for c in range(n):
        tags[perm[c]] = d.tags[c]
    return LinkDiagram(tuple(mate), d.free_loops, tuple(tags))


def all_splices(d1: LinkDiagram, d2: LinkDiagram):
    """Every way of cutting one arc of each diagram and joining them."""
    off = len(d1.mate)
    arcs1 = sorted({tuple(sorted((e, d1.mate[e]))) for e in range(len(d1.mate))})
    arcs2 = sorted({tuple(sorted((e, d2.mate[e]))) for e in range(len(d2.mate))})
    for a1, b1 in arcs1:
        for a2, b2 in arcs2:
            for flip in (False, True):
                mate = list(d1.mate) + [m + off for m in d2.mate]
                x2, y2 = (b2, a2) if flip else (a2, b2)
                mate[a1], mate[x2 + off] = x2 + off, a1
                mate[b1], mate[y2 + off] = y2 + off, b1
                yield LinkDiagram(tuple(mate))


def random_diagrams(count: int, seed: int = 20217, max_crossings: int = 6):
    """Seeded batch of small diagrams derived from standard builds."""
    rng = random.Random(seed)
    pool = [code for c in range(2, max_crossings + 1) for code in enumerate_standard(c)]
    out = []
    while len(out) < count:
        d = build_standard(rng.choice(pool))
        for _ in range(rng.randrange(3)):
            move = rng.randrange(4)
            if move == 0:
                d = switch(d, rng.randrange(d.crossings))
            elif move == 1:
                d = mirror(d)
            elif move == 2 and d.crossings > 1:
                d = smooth(d, rng.randrange(d.crossings), rng.choice([ZERO, INFINITY]))
            elif d.crossings < max_crossings:
                d = add_curl(d, rng.randrange(len(d.mate)), rng.choice([1, -1]))
        if d.crossings:
            out.append(d)
    return out
