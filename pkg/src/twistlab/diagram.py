"""Combinatorial link diagrams with four-slot crossings.

A diagram is a set of crossings, a perfect matching of their strand
ends, and a count of crossing-free circles.  Crossing c owns the four
endpoints 4c..4c+3, one per slot, slots numbered counterclockwise; the
strand through slots 0 and 2 passes under the strand through slots 1
and 3.  A strand entering at slot s leaves at slot s+2 (mod 4), so the
matching plus this transit rule determines every strand walk.

All handedness conventions follow from one planar picture: slot k of a
crossing sits at angle 90k - 45 degrees from east, putting slot 0 at
the southeast corner and giving the over strand positive slope.  Under
that picture

- an arc joining slots 0-1 or 2-3 of a single crossing is a kink of
  writhe +1, an arc joining 1-2 or 3-0 one of writhe -1;
- replacing a crossing by two parallel joins 0-1 and 2-3 is the zero
  smoothing, joins 0-3 and 1-2 the infinity smoothing;
- a self-crossing is positive exactly when the strand direction that
  enters the under strand at slot j entered the over strand at slot
  j+3 (mod 4) on the same walk.

Equality of diagrams is up to renumbering of crossings and reversal
of the global slot picture at each crossing by a half turn, which is
what ``canonical_key`` quotients out.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

ZERO = "zero"
INFINITY = "infinity"

AXIAL = "axial"
CROSS_SECTIONAL = "cross_sectional"

HORIZONTAL = "h"
VERTICAL = "v"


class DiagramError(ValueError):
    """Base class for malformed diagrams or bad diagram operations."""


class UnknownCrossingError(DiagramError):
    pass


class UntaggedCrossingError(DiagramError):
    pass


class EmptyDiagramError(DiagramError):
    pass


class BadArityError(DiagramError):
    pass


class DanglingLabelError(DiagramError):
    pass


class LabelCountMismatchError(DiagramError):
    pass


@dataclass(frozen=True)
class SiteTag:
    """Provenance of a crossing inside a standard-format build.

    site is the 0-based index of the twist site in the Conway code,
    axis is "h" or "v" for the direction the site twists along.
    """

    site: int
    axis: str


class LinkDiagram:
    """Immutable diagram: endpoint matching, free circles, site tags."""

    __slots__ = ("mate", "free_loops", "tags", "_canon")

    def __init__(self, mate, free_loops=0, tags=None):
        mate = tuple(mate)
        n, rem = divmod(len(mate), 4)
        if rem:
            raise DiagramError("endpoint count must be a multiple of four")
        for e, m in enumerate(mate):
            if not isinstance(m, int) or not 0 <= m < len(mate):
                raise DiagramError(f"endpoint {e} matched out of range: {m!r}")
            if m == e or mate[m] != e:
                raise DiagramError(f"matching is not a fixed-point-free involution at {e}")
        if free_loops < 0:
            raise DiagramError("free loop count cannot be negative")
        if tags is None:
            tags = (None,) * n
        else:
            tags = tuple(tags)
            if len(tags) != n:
                raise DiagramError("need one tag slot per crossing")
        self.mate = mate
        self.free_loops = free_loops
        self.tags = tags
        self._canon = None

    @property
    def crossings(self) -> int:
        return len(self.mate) // 4

    def __eq__(self, other):
        if not isinstance(other, LinkDiagram):
            return NotImplemented
        return canonical_key(self) == canonical_key(other)

    def __hash__(self):
        return hash(canonical_key(self))

    def __repr__(self):
        return f"<LinkDiagram crossings={self.crossings} loops={self.free_loops}>"


def diagram_from_arcs(crossing_count, arcs, free_loops=0, tags=None) -> LinkDiagram:
    """Build a diagram from arcs given as ((crossing, slot), (crossing, slot))."""
    mate = [-1] * (4 * crossing_count)
    for (c1, s1), (c2, s2) in arcs:
        e1, e2 = 4 * c1 + s1, 4 * c2 + s2
        if not (0 <= e1 < len(mate) and 0 <= e2 < len(mate)):
            raise DiagramError(f"arc endpoint out of range: {(c1, s1)}-{(c2, s2)}")
        if mate[e1] != -1 or mate[e2] != -1 or e1 == e2:
            raise DiagramError(f"slot used twice in arc list near {(c1, s1)}")
        mate[e1], mate[e2] = e2, e1
    if any(m == -1 for m in mate):
        raise DiagramError("arc list leaves open slots")
    return LinkDiagram(tuple(mate), free_loops, tags)


def unlink(components: int) -> LinkDiagram:
    """Crossingless diagram of the given number of circles."""
    if components < 0:
        raise DiagramError("component count cannot be negative")
    return LinkDiagram((), components)


# ---------------------------------------------------------------------------
# strand walks

def _orbits(d: LinkDiagram) -> list[list[int]]:
    """Directed strand walks, one list of entry endpoints per direction."""
    mate = d.mate
    seen = bytearray(len(mate))
    orbits = []
    for e0 in range(len(mate)):
        if seen[e0]:
            continue
        orb = []
        e = e0
        while not seen[e]:
            seen[e] = 1
            orb.append(e)
            e = mate[e ^ 2]
        orbits.append(orb)
    return orbits


def components(d: LinkDiagram) -> int:
    """Number of link components, free circles included."""
    return len(_orbits(d)) // 2 + d.free_loops


def is_alternating(d: LinkDiagram) -> bool:
    """True when every strand walk alternates under and over passages."""
    for orb in _orbits(d):
        if len(orb) % 2:
            return False
        for e, f in zip(orb, orb[1:] + orb[:1]):
            if (e & 1) == (f & 1):
                return False
    return True


def _self_crossing_signs(d: LinkDiagram) -> dict[int, int]:
    """Sign of every crossing both of whose strands are the same component.

    The under entry at slot 0 belongs to one directed walk; the over
    entry of that same walk sits at slot 3 for a positive crossing and
    slot 1 for a negative one.  Crossings between distinct components
    are omitted, since their sign depends on a choice of orientation.
    """
    orbits = _orbits(d)
    oid = {}
    for i, orb in enumerate(orbits):
        for e in orb:
            oid[e] = i
    sid: dict[int, int] = {}
    for i, orb in enumerate(orbits):
        if i in sid:
            continue
        j = oid[orb[0] ^ 2]
        sid[i] = sid[j] = i
    signs = {}
    for c in range(d.crossings):
        b = 4 * c
        if sid[oid[b]] != sid[oid[b + 1]]:
            continue
        signs[c] = 1 if oid[b + 3] == oid[b] else -1
    return signs


def self_writhe(d: LinkDiagram) -> int:
    """Writhe restricted to self-crossings; orientation independent."""
    return sum(_self_crossing_signs(d).values())


def _traversal_entries(d: LinkDiagram) -> list[int]:
    """Entry endpoints in a fixed walk order over the whole diagram.

    One direction is walked per component: the one whose walk contains
    the smallest endpoint of the component, started at that endpoint.
    Components are emitted in order of their smallest endpoint.  The
    order depends only on the matching, never on over and under data,
    so it survives switching any set of crossings.
    """
    orbits = _orbits(d)
    oid = {}
    for i, orb in enumerate(orbits):
        for e in orb:
            oid[e] = i
    walks = []
    paired = set()
    for i, orb in enumerate(orbits):
        if i in paired:
            continue
        j = oid[orb[0] ^ 2]
        paired.add(i)
        paired.add(j)
        lo_i, lo_j = min(orb), min(orbits[j])
        src = orb if lo_i < lo_j else orbits[j]
        k = src.index(min(lo_i, lo_j))
        walks.append(src[k:] + src[:k])
    walks.sort(key=lambda w: w[0])
    return [e for w in walks for e in w]


# ---------------------------------------------------------------------------
# local moves

_SMOOTH_PAIRS = {ZERO: ((0, 1), (2, 3)), INFINITY: ((0, 3), (1, 2))}

# kink arcs by slot pair, with their writhe contribution
_CURL_SIGN = {(0, 1): 1, (2, 3): 1, (1, 2): -1, (3, 0): -1}


def _check_crossing(d: LinkDiagram, crossing: int) -> None:
    if not isinstance(crossing, int) or not 0 <= crossing < d.crossings:
        raise UnknownCrossingError(f"no crossing {crossing!r} in {d!r}")


def _excise(d: LinkDiagram, x: int, pairs) -> LinkDiagram:
    """Remove crossing x, bridging its slots by the given slot pairing.

    External arcs are rejoined by walking arc-bridge-arc chains through
    the removed endpoints; any chain that closes up without reaching an
    external endpoint becomes a free circle.
    """
    base = 4 * x
    total = len(d.mate)
    bridge = {}
    for s1, s2 in pairs:
        bridge[base + s1] = base + s2
        bridge[base + s2] = base + s1

    def renum(e: int) -> int:
        return e - 4 if e >= base + 4 else e

    new_mate = [-1] * (total - 4)
    used = set()
    for e in range(total):
        if base <= e < base + 4 or new_mate[renum(e)] != -1:
            continue
        p = d.mate[e]
        while base <= p < base + 4:
            used.add(p)
            q = bridge[p]
            used.add(q)
            p = d.mate[q]
        new_mate[renum(e)] = renum(p)
        new_mate[renum(p)] = renum(e)
    loops = d.free_loops
    for r in range(base, base + 4):
        if r in used:
            continue
        loops += 1
        p = r
        while True:
            used.add(p)
            q = bridge[p]
            used.add(q)
            p = d.mate[q]
            if p == r:
                break
    tags = d.tags[:x] + d.tags[x + 1:]
    return LinkDiagram(tuple(new_mate), loops, tags)


def smooth(d: LinkDiagram, crossing: int, mode: str) -> LinkDiagram:
    """Replace a crossing by one of its two planar reconnections."""
    _check_crossing(d, crossing)
    if mode not in _SMOOTH_PAIRS:
        raise DiagramError(f"unknown smoothing mode {mode!r}")
    return _excise(d, crossing, _SMOOTH_PAIRS[mode])


def switch(d: LinkDiagram, crossing: int) -> LinkDiagram:
    """Exchange the over and under strands at one crossing.

    Since under is hard-wired to slots 0 and 2, switching rotates the
    attachment points a quarter turn: the arc at slot s reattaches at
    slot s-1.  Done twice this is a half-turn relabel of the same
    crossing, which equality treats as identical.
    """
    _check_crossing(d, crossing)
    return _rotate_crossings(d, (crossing,))


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Switch every crossing at once."""
    return _rotate_crossings(d, range(d.crossings))


def _rotate_crossings(d: LinkDiagram, crossings) -> LinkDiagram:
    remap = list(range(len(d.mate)))
    for c in crossings:
        b = 4 * c
        for s in range(4):
            remap[b + s] = b + ((s - 1) % 4)
    new_mate = [0] * len(d.mate)
    for e, m in enumerate(d.mate):
        new_mate[remap[e]] = remap[m]
    return LinkDiagram(tuple(new_mate), d.free_loops, d.tags)


def remove_curls(d: LinkDiagram) -> tuple[LinkDiagram, int]:
    """Strip kinks until none remain; return the result and the writhe shed.

    Each kink is removed by the reconnection that straightens the
    strand: the infinity smoothing for a +1 kink, the zero smoothing
    for a -1 kink.  Kinks are located first crossing first, first slot
    pair first; removal is confluent, so the scan order only fixes
    which of several equal results is produced.
    """
    shift = 0
    while True:
        found = None
        for c in range(d.crossings):
            b = 4 * c
            for (s1, s2), sign in _CURL_SIGN.items():
                if d.mate[b + s1] == b + s2:
                    found = (c, sign)
                    break
            if found:
                break
        if not found:
            return d, shift
        c, sign = found
        shift += sign
        d = smooth(d, c, INFINITY if sign > 0 else ZERO)


def classify_smoothing(d: LinkDiagram, crossing: int, mode: str) -> str:
    """Whether a smoothing splits its twist site across or along its axis.

    The zero smoothing of a horizontal-site crossing cuts the twist
    region crosswise; the infinity smoothing runs along it.  Vertical
    sites swap the two.  Only crossings carrying a SiteTag can be
    classified.
    """
    _check_crossing(d, crossing)
    if mode not in _SMOOTH_PAIRS:
        raise DiagramError(f"unknown smoothing mode {mode!r}")
    tag = d.tags[crossing]
    if tag is None:
        raise UntaggedCrossingError(f"crossing {crossing} carries no site tag")
    if tag.axis == HORIZONTAL:
        return CROSS_SECTIONAL if mode == ZERO else AXIAL
    return AXIAL if mode == ZERO else CROSS_SECTIONAL


def connected_sum(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    """Splice two diagrams along their first arcs.

    The first arc of a diagram is the one through endpoint 0.  Cutting
    both and rejoining crosswise merges one component of each diagram.
    A crossingless circle acts as the identity.  Site tags do not
    survive the splice; twist sites of the summands are unrelated to
    twist sites of the sum.
    """
    for d in (d1, d2):
        if d.crossings == 0 and d.free_loops == 0:
            raise EmptyDiagramError("cannot sum with an empty diagram")
    if d1.crossings == 0:
        return LinkDiagram(d2.mate, d2.free_loops + d1.free_loops - 1, d2.tags)
    if d2.crossings == 0:
        return LinkDiagram(d1.mate, d1.free_loops + d2.free_loops - 1, d1.tags)
    off = len(d1.mate)
    mate = list(d1.mate) + [m + off for m in d2.mate]
    a1, b1 = 0, d1.mate[0]
    a2, b2 = off, off + d2.mate[0]
    mate[a1], mate[a2] = a2, a1
    mate[b1], mate[b2] = b2, b1
    return LinkDiagram(tuple(mate), d1.free_loops + d2.free_loops)


# ---------------------------------------------------------------------------
# standard-format builds

def build_standard(code) -> LinkDiagram:
    """Standard alternating diagram of the rational link with this code.

    Twist sites are laid out first to last, alternating horizontal rows
    and vertical columns with the last site horizontal.  A horizontal
    row hangs off the east side of the tangle built so far, a vertical
    column off the south side, and the final tangle is closed top to
    top and bottom to bottom.  Every crossing uses the same slot
    picture, which is what makes the result alternating.

    Crossing ids run in build order, so the last crossing of the last
    site always has id crossings-1.  Each crossing is tagged with its
    site index and axis.
    """
    entries = code.entries
    n_sites = len(entries)
    arcs = []
    tags = []
    cr = 0
    ends = None  # corner -> (crossing, slot), corners NW NE SW SE
    for i, m in enumerate(entries):
        horizontal = (n_sites - 1 - i) % 2 == 0
        ids = list(range(cr, cr + m))
        cr += m
        tags.extend(SiteTag(i, HORIZONTAL if horizontal else VERTICAL) for _ in ids)
        for a, b in zip(ids, ids[1:]):
            if horizontal:
                arcs.append(((a, 1), (b, 2)))
                arcs.append(((a, 0), (b, 3)))
            else:
                arcs.append(((a, 3), (b, 2)))
                arcs.append(((a, 0), (b, 1)))
        first, last = ids[0], ids[-1]
        if horizontal:
            new = {"NW": (first, 2), "SW": (first, 3), "NE": (last, 1), "SE": (last, 0)}
            if ends is None:
                ends = new
            else:
                arcs.append((ends["NE"], new["NW"]))
                arcs.append((ends["SE"], new["SW"]))
                ends = {"NW": ends["NW"], "SW": ends["SW"], "NE": new["NE"], "SE": new["SE"]}
        else:
            new = {"NW": (first, 2), "NE": (first, 1), "SW": (last, 3), "SE": (last, 0)}
            if ends is None:
                ends = new
            else:
                arcs.append((ends["SW"], new["NW"]))
                arcs.append((ends["SE"], new["NE"]))
                ends = {"NW": ends["NW"], "NE": ends["NE"], "SW": new["SW"], "SE": new["SE"]}
    arcs.append((ends["NW"], ends["NE"]))
    arcs.append((ends["SW"], ends["SE"]))
    return diagram_from_arcs(cr, arcs, tags=tags)


# ---------------------------------------------------------------------------
# canonical form

def canonical_key(d: LinkDiagram) -> bytes:
    """Label-independent fingerprint of the diagram.

    Two diagrams get the same key exactly when one can be turned into
    the other by renumbering crossings and giving some crossings a
    half-turn slot relabel.  Site tags are deliberately ignored.
    """
    if d._canon is None:
        d._canon = _compute_key(d)
    return d._canon


def _compute_key(d: LinkDiagram) -> bytes:
    n = d.crossings
    # connected components of the crossing graph
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e, m in enumerate(d.mate):
        ra, rb = find(e // 4), find(m // 4)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for c in range(n):
        groups.setdefault(find(c), []).append(c)
    comp_keys = []
    for comp in groups.values():
        best = None
        for start in comp:
            for rot0 in (0, 2):
                cand = _bfs_serial(d, start, rot0)
                if best is None or cand < best:
                    best = cand
        comp_keys.append(best)
    comp_keys.sort()
    return repr((n, d.free_loops, comp_keys)).encode("ascii")


def _bfs_serial(d: LinkDiagram, start: int, rot0: int) -> tuple:
    """Serialize one crossing component from a chosen start and rotation.

    Crossings are renumbered in discovery order.  Each newly discovered
    crossing is given the half-turn rotation that brings its discovery
    slot into {0, 1}, so the serialization cannot depend on the input
    rotation state.
    """
    index = {start: 0}
    rot = {start: rot0}
    order = [start]
    edges = []
    i = 0
    while i < len(order):
        c = order[i]
        rc = rot[c]
        for s_new in range(4):
            t = d.mate[4 * c + (s_new ^ rc)]
            tc, ts = divmod(t, 4)
            if tc not in index:
                index[tc] = len(order)
                rot[tc] = 0 if ts < 2 else 2
                order.append(tc)
            edges.append((index[tc], ts ^ rot[tc]))
        i += 1
    return tuple(edges)


# ---------------------------------------------------------------------------
# planar diagram codes

def parse_pd(pd) -> LinkDiagram:
    """Read a planar diagram code: one 4-tuple of arc labels per crossing.

    Tuple positions map to slots 0..3, so position 0 is the incoming
    under strand and labels are listed counterclockwise from it.  Every
    label must appear exactly twice across the whole code.
    """
    if isinstance(pd, str):
        pd = json.loads(pd)
    where: dict[object, list[int]] = {}
    count = 0
    for c, tup in enumerate(pd):
        tup = list(tup)
        if len(tup) != 4:
            raise BadArityError(f"crossing {c} has {len(tup)} arc labels, wanted 4")
        for s, label in enumerate(tup):
            where.setdefault(label, []).append(4 * c + s)
        count += 1
    mate = [-1] * (4 * count)
    for label, eps in where.items():
        if len(eps) == 1:
            raise DanglingLabelError(f"arc label {label!r} appears only once")
        if len(eps) > 2:
            raise LabelCountMismatchError(
                f"arc label {label!r} appears {len(eps)} times"
            )
        e1, e2 = eps
        mate[e1], mate[e2] = e2, e1
    return LinkDiagram(tuple(mate))


def to_pd(d: LinkDiagram) -> list[list[int]]:
    """Planar diagram code of d, arcs labelled 1..2c by first appearance."""
    label: dict[int, int] = {}
    nxt = 1
    for e in range(len(d.mate)):
        if e not in label:
            label[e] = label[d.mate[e]] = nxt
            nxt += 1
    return [[label[4 * c + s] for s in range(4)] for c in range(d.crossings)]
