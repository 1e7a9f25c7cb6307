"""Conway codes for rational links in standard alternating format.

A code is a sequence of positive twist counts, one per twist site, read
from the first site to the last.  The two end sites need at least two
crossings each (a single-site code is its own end twice, so it also
needs at least two), interior sites need at least one.  Site axes are
forced: sites alternate between horizontal and vertical and the last
site is always horizontal, so the axis of every site is fixed by its
distance from the end of the code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class NotationError(ValueError):
    """Base class for invalid Conway code input."""


class EmptyInputError(NotationError):
    pass


class NonNumericTokenError(NotationError):
    pass


class NonPositiveEntryError(NotationError):
    pass


class EndEntryTooSmallError(NotationError):
    pass


class HopfBaseError(NotationError):
    """The two-crossing clasp has no smaller standard representative."""


@dataclass(frozen=True)
class ConwayCode:
    """A validated twist-count sequence."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise EmptyInputError("a Conway code needs at least one entry")
        for e in self.entries:
            if not isinstance(e, int) or isinstance(e, bool):
                raise NonNumericTokenError(f"entry {e!r} is not an integer")
            if e < 1:
                raise NonPositiveEntryError(f"twist counts must be positive, got {e}")
        if self.entries[0] < 2 or self.entries[-1] < 2:
            raise EndEntryTooSmallError(
                "end sites need at least two crossings: %s" % (self.entries,)
            )

    @property
    def sites(self) -> int:
        return len(self.entries)

    @property
    def crossings(self) -> int:
        return sum(self.entries)

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.entries)


@dataclass(frozen=True)
class TwistCensus:
    """Site counts of a code split by turning direction.

    Sites whose axis is horizontal turn left; vertical sites turn
    right.  With the last site horizontal and axes alternating, a code
    with s sites always has ceil(s/2) left-turning and floor(s/2)
    right-turning sites.  ``extra`` counts crossings beyond the minimum
    a standard-format code with the same number of sites can have.
    """

    sites: int
    left_turning: int
    right_turning: int
    crossings: int
    extra: int
    is_minimal: bool


def parse_conway(text: str) -> ConwayCode:
    """Parse whitespace-separated twist counts into a ConwayCode."""
    tokens = text.split()
    if not tokens:
        raise EmptyInputError("no twist counts given")
    entries = []
    for tok in tokens:
        try:
            entries.append(int(tok, 10))
        except ValueError:
            raise NonNumericTokenError(f"bad twist count {tok!r}") from None
    return ConwayCode(tuple(entries))


def census(code: ConwayCode) -> TwistCensus:
    """Count sites by turning direction and measure distance from minimality.

    Minimal codes have two crossings at each end site and one at each
    interior site, except that a single site needs three crossings to
    close into something other than a clasp.  The two-crossing clasp
    itself is treated as minimal with nothing to spare.
    """
    s = code.sites
    c = code.crossings
    if s == 1 and c == 2:
        extra = 0
    else:
        extra = c - (s + 2)
    return TwistCensus(
        sites=s,
        left_turning=(s + 1) // 2,
        right_turning=s // 2,
        crossings=c,
        extra=extra,
        is_minimal=extra == 0,
    )


def continued_fraction(code: ConwayCode) -> Fraction:
    """Evaluate the code as a continued fraction, last entry outermost.

    For entries a1 .. an the value is an + 1/(a(n-1) + 1/(... + 1/a1)),
    so folding from the first entry outward gives the fraction exactly.
    """
    value = Fraction(code.entries[0])
    for e in code.entries[1:]:
        value = e + 1 / value
    return value


def predicted_u(tc: TwistCensus) -> tuple[int, int, int]:
    """Expected (u_minus, u_zero, u_plus) for a standard-format code.

    u_plus counts left-turning sites, u_minus right-turning sites and
    u_zero all sites.  The clasp is the one exception: its polynomial
    has no spread at all in the second-highest z row.
    """
    if tc.sites == 1 and tc.crossings == 2:
        return (0, 1, 0)
    return (tc.sites // 2, tc.sites, (tc.sites + 1) // 2)


def minimal_code(tc: TwistCensus) -> ConwayCode:
    """Smallest standard-format code with the same number of sites."""
    if tc.sites == 1:
        if tc.crossings == 2:
            raise HopfBaseError("the clasp has no smaller standard form")
        return ConwayCode((3,))
    return ConwayCode((2,) + (1,) * (tc.sites - 2) + (2,))


def enumerate_standard(crossings: int) -> list[ConwayCode]:
    """All valid codes with the given crossing total, lexicographically.

    The first entry runs from 2 upward; later entries are free except
    that the last must reach 2.  Generation is depth-first with entries
    tried in increasing order, which yields lexicographic order.
    """
    if crossings < 2:
        raise NotationError("standard-format codes need at least two crossings")
    out: list[ConwayCode] = []

    def extend(prefix: list[int], remaining: int) -> None:
        if remaining == 0:
            if prefix[-1] >= 2:
                out.append(ConwayCode(tuple(prefix)))
            return
        for e in range(1, remaining + 1):
            prefix.append(e)
            extend(prefix, remaining - e)
            prefix.pop()

    for first in range(2, crossings + 1):
        extend([first], crossings - first)
    return out
