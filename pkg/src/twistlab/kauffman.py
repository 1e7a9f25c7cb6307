"""Exact Kauffman polynomials in the regular-isotopy normalization.

The polynomial Lambda(a, z) of a diagram satisfies

    Lambda(unknot) = 1
    Lambda(D+) + Lambda(D-) = z (Lambda(D0) + Lambda(Dinf))
    Lambda(kinked D) = a^(+-1) Lambda(D)

where D+ and D- differ by a switch at one crossing and D0, Dinf are its
two smoothings.  Coefficients are unbounded integers; no floating point
is involved anywhere.

Evaluation removes kinks, then walks the diagram in a fixed order and
switches each crossing first met on its under strand, accumulating the
skein relation; the fully switched diagram is descending, so it is a
power of a times a power of the unlink value delta.  Subdiagrams are
memoized by canonical key.  The memo is a fresh private dict per call
unless the caller passes one in; setting TWISTLAB_CACHE=off disables
memoization entirely, which must never change any value.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .diagram import (
    INFINITY,
    ZERO,
    EmptyDiagramError,
    LinkDiagram,
    _rotate_crossings,
    _self_crossing_signs,
    _traversal_entries,
    canonical_key,
    components,
    remove_curls,
    smooth,
)

_CACHE_ENV = "TWISTLAB_CACHE"


class LaurentPoly2:
    """Sparse Laurent polynomial in a and z with integer coefficients.

    Terms live in a dict keyed by (a_exp, z_exp).  Instances are
    treated as immutable; all arithmetic returns new objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict[tuple[int, int], int] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for key, coeff in items:
                ae, ze = key
                if coeff:
                    k = (ae, ze)
                    c = data.get(k, 0) + coeff
                    if c:
                        data[k] = c
                    elif k in data:
                        del data[k]
        self._terms = data

    @classmethod
    def monomial(cls, coeff: int, a_exp: int = 0, z_exp: int = 0) -> "LaurentPoly2":
        return cls({(a_exp, z_exp): coeff})

    @classmethod
    def from_triples(cls, triples) -> "LaurentPoly2":
        """Rebuild from [a_exp, z_exp, coeff] rows as emitted by terms()."""
        return cls(((int(a), int(z)), int(c)) for a, z, c in triples)

    def terms(self) -> list[tuple[int, int, int]]:
        """Sorted [(a_exp, z_exp, coeff)], ordered by z then a exponent."""
        out = [(a, z, c) for (a, z), c in self._terms.items()]
        out.sort(key=lambda t: (t[1], t[0]))
        return out

    def coeff(self, a_exp: int, z_exp: int) -> int:
        return self._terms.get((a_exp, z_exp), 0)

    def z_row(self, z_exp: int) -> dict[int, int]:
        """Coefficients of one z power, keyed by a exponent."""
        return {a: c for (a, z), c in self._terms.items() if z == z_exp}

    def max_z(self):
        """Highest z exponent present, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(z for _, z in self._terms)

    def max_weight(self):
        """Largest z_exp + |a_exp| over all terms, or None if zero."""
        if not self._terms:
            return None
        return max(z + abs(a) for (a, z) in self._terms)

    def shift(self, a_exp: int = 0, z_exp: int = 0) -> "LaurentPoly2":
        """Multiply by the monomial a^a_exp z^z_exp."""
        return LaurentPoly2(
            {(a + a_exp, z + z_exp): c for (a, z), c in self._terms.items()}
        )

    def mirror_a(self) -> "LaurentPoly2":
        """Substitute a -> 1/a."""
        return LaurentPoly2({(-a, z): c for (a, z), c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        data = dict(self._terms)
        for k, c in other._terms.items():
            s = data.get(k, 0) + c
            if s:
                data[k] = s
            elif k in data:
                del data[k]
        out = LaurentPoly2()
        out._terms = data
        return out

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        data: dict[tuple[int, int], int] = {}
        for (a1, z1), c1 in self._terms.items():
            for (a2, z2), c2 in other._terms.items():
                k = (a1 + a2, z1 + z2)
                s = data.get(k, 0) + c1 * c2
                if s:
                    data[k] = s
                elif k in data:
                    del data[k]
        out = LaurentPoly2()
        out._terms = data
        return out

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"LaurentPoly2({self._terms!r})"

    def pretty(self) -> str:
        """Single-line human form, terms in z-then-a order."""
        if not self._terms:
            return "0"
        parts = []
        for a, z, c in self.terms():
            body = _monomial_str(a, z)
            mag = abs(c)
            if mag != 1 or not body:
                body = (str(mag) + (" " + body if body else "")).strip()
            word = body if body else str(mag)
            if not parts:
                parts.append(word if c > 0 else "-" + word)
            else:
                parts.append(("+ " if c > 0 else "- ") + word)
        return " ".join(parts)


def _monomial_str(a_exp: int, z_exp: int) -> str:
    bits = []
    if a_exp == 1:
        bits.append("a")
    elif a_exp:
        bits.append(f"a^{a_exp}")
    if z_exp == 1:
        bits.append("z")
    elif z_exp:
        bits.append(f"z^{z_exp}")
    return " ".join(bits)


_ZERO = LaurentPoly2()
_ONE = LaurentPoly2.monomial(1)
_Z = LaurentPoly2.monomial(1, 0, 1)


def delta_unlink() -> LaurentPoly2:
    """Value of a two-component crossingless unlink: (a + 1/a)/z - 1."""
    return LaurentPoly2({(1, -1): 1, (-1, -1): 1, (0, 0): -1})


_DELTA_POWERS = [_ONE, delta_unlink()]


def _delta_power(k: int) -> LaurentPoly2:
    while len(_DELTA_POWERS) <= k:
        _DELTA_POWERS.append(_DELTA_POWERS[-1] * _DELTA_POWERS[1])
    return _DELTA_POWERS[k]


def mirror_poly(p: LaurentPoly2) -> LaurentPoly2:
    """Polynomial of the mirror image: substitute a -> 1/a."""
    return p.mirror_a()


def _caching_enabled() -> bool:
    return os.environ.get(_CACHE_ENV, "").strip().lower() not in {"off", "0", "false", "no"}


def lambda_poly(d: LinkDiagram, cache=None) -> LaurentPoly2:
    """Kauffman regular-isotopy polynomial of a diagram.

    Pass a dict as cache to share memoized subdiagram values across
    calls; by default each call uses a private dict, and none at all
    when the TWISTLAB_CACHE environment variable is set to off.
    """
    if cache is None and _caching_enabled():
        cache = {}
    return _lambda(d, cache)


def _lambda(d: LinkDiagram, cache) -> LaurentPoly2:
    d, shift = remove_curls(d)
    if d.crossings == 0:
        if d.free_loops == 0:
            raise EmptyDiagramError("the empty diagram has no polynomial")
        val = _delta_power(d.free_loops - 1)
    else:
        key = canonical_key(d) if cache is not None else None
        val = cache.get(key) if cache is not None else None
        if val is None:
            val = _resolve(d, cache)
            if cache is not None:
                cache[key] = val
    return val.shift(a_exp=shift) if shift else val


def _resolve(d: LinkDiagram, cache) -> LaurentPoly2:
    """Skein recursion for a kink-free diagram with at least one crossing.

    Walking the fixed traversal, a crossing first met on its under
    strand blocks descent, so it gets switched; the skein relation
    turns the switch into the two smoothings of the current partially
    switched diagram, and the recursion continues along the walk.  The
    walk order never changes, because switching rotates slot labels of
    a crossing without touching the matching.  What remains after the
    walk is descending: each component lies entirely over the later
    ones and descends along itself, so its value is a to the
    self-writhe times delta to the components minus one.
    """
    self_signs = _self_crossing_signs(d)
    n_comp = components(d)
    acc = _ZERO
    sign = 1
    switched: set[int] = set()
    seen: set[int] = set()
    for e in _traversal_entries(d):
        c = e >> 2
        if c in seen:
            continue
        seen.add(c)
        if (e & 1) == 0:  # first met going under
            base = _rotate_crossings(d, switched) if switched else d
            branch = _lambda(smooth(base, c, ZERO), cache) + _lambda(
                smooth(base, c, INFINITY), cache
            )
            branch = branch * _Z
            acc = acc + branch if sign > 0 else acc - branch
            switched.add(c)
            sign = -sign
    sw = sum(-s if c in switched else s for c, s in self_signs.items())
    tail = _delta_power(n_comp - 1).shift(a_exp=sw)
    return acc + tail if sign > 0 else acc - tail


# ---------------------------------------------------------------------------
# truncation

class TopDegreeMismatchError(ValueError):
    """The polynomial does not look like an alternating diagram's."""


@dataclass(frozen=True)
class TruncatedLambda:
    """The five leading coefficients of an alternating diagram's polynomial.

    For a c-crossing reduced alternating diagram the z-degree is c-1,
    the z^(c-1) row is exactly a + 1/a, and the z^(c-2) row is
    supported on a exponents -2, 0, 2 with nonnegative coefficients
    u_minus, u_zero, u_plus.
    """

    crossings: int
    u_minus: int
    u_zero: int
    u_plus: int
    top_pair_present: bool

    @property
    def u(self) -> tuple[int, int, int]:
        return (self.u_minus, self.u_zero, self.u_plus)


def truncate(p: LaurentPoly2, crossings: int) -> TruncatedLambda:
    """Extract the two top z rows, checking their alternating shape."""
    c = crossings
    top = p.max_z()
    if top is None or top > c - 1:
        raise TopDegreeMismatchError(
            f"z-degree {top} does not fit a {c}-crossing alternating diagram"
        )
    if p.z_row(c - 1) != {1: 1, -1: 1}:
        raise TopDegreeMismatchError(
            f"z^{c - 1} row is {p.z_row(c - 1)!r}, wanted exactly a + 1/a"
        )
    row = p.z_row(c - 2)
    stray = set(row) - {-2, 0, 2}
    if stray:
        raise TopDegreeMismatchError(
            f"z^{c - 2} row touches unexpected a exponents {sorted(stray)}"
        )
    um, u0, up = row.get(-2, 0), row.get(0, 0), row.get(2, 0)
    if min(um, u0, up) < 0:
        raise TopDegreeMismatchError(f"negative twist-site count in {row!r}")
    return TruncatedLambda(c, um, u0, up, True)


def staggered(p: LaurentPoly2, crossings: int) -> str:
    """Two-column display of the top two z rows, one monomial per line.

    The z^(c-2) column is flush left with a exponents descending; each
    z^(c-1) monomial is indented and interleaved where it belongs.
    """
    c = crossings
    low = p.z_row(c - 2)
    high = p.z_row(c - 1)
    lines = []

    def fmt(a, z, coeff, indent):
        body = _monomial_str(a, z)
        mag = abs(coeff)
        if mag != 1 or not body:
            body = (str(mag) + (" " + body if body else "")).strip()
        sign = "- " if coeff < 0 else ("+ " if lines else "  ")
        return (" " * indent) + sign + body

    for a in sorted(set(low) | {x + 1 for x in high}, reverse=True):
        if a in low:
            lines.append(fmt(a, c - 2, low[a], 0))
        if a - 1 in high:
            lines.append(fmt(a - 1, c - 1, high[a - 1], 12))
    return "\n".join(lines)
