"""Mechanical checks tying polynomial coefficients to twist-site counts.

Every check produces a VerificationReport: named boolean checks plus
the computed and predicted coefficient triples, JSON-serializable for
scripting.  Nothing here ever adjusts a computed value to match a
prediction; a failed check stays failed in the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import INFINITY, ZERO, LinkDiagram, build_standard, smooth
from .kauffman import (
    LaurentPoly2,
    TruncatedLambda,
    lambda_poly,
    mirror_poly,
    truncate,
)
from .notation import ConwayCode, census, minimal_code, predicted_u

TOP_HEAVY = "top_heavy"
BOTTOM_HEAVY = "bottom_heavy"
BALANCED = "balanced"


@dataclass
class VerificationReport:
    input: str
    crossings: int
    sites: int | None = None
    computed_u: tuple[int, int, int] | None = None
    predicted: tuple[int, int, int] | None = None
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict:
        return {
            "input": self.input,
            "c": self.crossings,
            "sites": self.sites,
            "computed_u": list(self.computed_u) if self.computed_u else None,
            "predicted_u": list(self.predicted) if self.predicted else None,
            "checks": dict(self.checks),
            "overall": self.overall,
        }

    def summary(self) -> str:
        bits = [f"{self.input}: c={self.crossings}"]
        if self.sites is not None:
            bits.append(f"sites={self.sites}")
        if self.computed_u is not None:
            bits.append(f"u={self.computed_u}")
        if self.predicted is not None:
            bits.append(f"predicted={self.predicted}")
        flags = " ".join(
            f"{name}={'ok' if good else 'FAIL'}" for name, good in self.checks.items()
        )
        status = "PASS" if self.overall else "FAIL"
        return "  ".join(bits) + "  [" + flags + "]  " + status


def chirality_class(t: TruncatedLambda) -> str:
    """Classify the a-spread of the z^(c-2) row."""
    if t.u_plus > t.u_minus:
        return TOP_HEAVY
    if t.u_plus < t.u_minus:
        return BOTTOM_HEAVY
    return BALANCED


def amphicheiral_obstruction(code: ConwayCode) -> str:
    """'obstructed' when the site count alone rules out amphicheirality.

    An odd number of twist sites forces u_plus != u_minus once the
    diagram has at least three crossings, and a mirror image swaps the
    two, so such a link cannot equal its mirror.  Everything else is
    'inconclusive'; a balanced top row proves nothing.
    """
    tc = census(code)
    if tc.sites % 2 == 1 and tc.crossings >= 3:
        return "obstructed"
    return "inconclusive"


def _degree_ok(p: LaurentPoly2, crossings: int) -> bool:
    return p.max_weight() <= crossings and p.max_z() == crossings - 1


def verify_twist_counts(code: ConwayCode, cache=None) -> VerificationReport:
    """Compare computed u coefficients with the site-count prediction."""
    tc = census(code)
    d = build_standard(code)
    p = lambda_poly(d, cache)
    t = truncate(p, tc.crossings)
    expect = predicted_u(tc)
    want_balanced = tc.sites % 2 == 0 or tc.crossings < 3
    rep = VerificationReport(
        input=str(code),
        crossings=tc.crossings,
        sites=tc.sites,
        computed_u=t.u,
        predicted=expect,
    )
    rep.checks["degree_bounds"] = _degree_ok(p, tc.crossings)
    rep.checks["top_pair"] = t.top_pair_present
    rep.checks["theorem_match"] = t.u == expect
    rep.checks["chirality"] = (chirality_class(t) == BALANCED) == want_balanced
    return rep


def verify_minimal_reduction(code: ConwayCode, cache=None) -> VerificationReport:
    """Check that extra crossings only shift the truncated polynomial.

    A code and the minimal code with the same number of sites must
    share their five leading coefficients, each read at its own top
    degree.  Raises HopfBaseError for the bare clasp, which has no
    minimal companion.
    """
    tc = census(code)
    small = minimal_code(tc)
    t_big = truncate(lambda_poly(build_standard(code), cache), tc.crossings)
    t_small = truncate(lambda_poly(build_standard(small), cache), small.crossings)
    rep = VerificationReport(
        input=str(code),
        crossings=tc.crossings,
        sites=tc.sites,
        computed_u=t_big.u,
        predicted=t_small.u,
    )
    rep.checks["reduction_match"] = (
        t_big.u == t_small.u and t_big.top_pair_present and t_small.top_pair_present
    )
    return rep


def verify_truncated_skein(code: ConwayCode, cache=None) -> VerificationReport:
    """Check the one-sided skein shape of the two top rows.

    Switching the last crossing of an alternating standard build drops
    the z-degree by at least three, so in the top two rows the skein
    relation loses its switched term: there the polynomial must equal
    z times the sum over both smoothings at that crossing.
    """
    tc = census(code)
    if tc.crossings < 3:
        raise ValueError("needs at least three crossings to see two clean rows")
    d = build_standard(code)
    x = d.crossings - 1
    p = lambda_poly(d, cache)
    rhs = (
        lambda_poly(smooth(d, x, ZERO), cache) + lambda_poly(smooth(d, x, INFINITY), cache)
    ) * LaurentPoly2.monomial(1, 0, 1)
    ok = True
    for row in (tc.crossings - 1, tc.crossings - 2):
        if p.z_row(row) != rhs.z_row(row):
            ok = False
    rep = VerificationReport(
        input=str(code),
        crossings=tc.crossings,
        sites=tc.sites,
    )
    rep.checks["skein_truncated"] = ok
    return rep


def verify_connected_sum(code1: ConwayCode, code2: ConwayCode, cache=None) -> VerificationReport:
    """Check multiplicativity and the degree deficit of a connected sum."""
    from .diagram import connected_sum

    d1, d2 = build_standard(code1), build_standard(code2)
    p1, p2 = lambda_poly(d1, cache), lambda_poly(d2, cache)
    d = connected_sum(d1, d2)
    p = lambda_poly(d, cache)
    c = d.crossings
    rep = VerificationReport(input=f"{code1} # {code2}", crossings=c)
    rep.checks["product_match"] = p == p1 * p2
    rep.checks["sum_top_degree"] = p.max_z() == c - 2
    return rep


def check_diagram(
    d: LinkDiagram,
    expected: tuple[int, int, int] | None = None,
    name: str = "diagram",
    cache=None,
) -> VerificationReport:
    """Truncate an externally supplied diagram and report what is found.

    No site-count prediction is applied; for a non-rational diagram
    there is nothing to predict, only coefficients to report and
    optionally compare against the caller's expectation.
    """
    p = lambda_poly(d, cache)
    t = truncate(p, d.crossings)
    rep = VerificationReport(
        input=name,
        crossings=d.crossings,
        computed_u=t.u,
    )
    rep.checks["degree_bounds"] = _degree_ok(p, d.crossings)
    rep.checks["top_pair"] = t.top_pair_present
    if expected is not None:
        rep.checks["expected_match"] = t.u == tuple(expected)
    return rep


def verify_code(code: ConwayCode, cache=None) -> VerificationReport:
    """Run every check that applies to one code and merge the results."""
    tc = census(code)
    rep = verify_twist_counts(code, cache)
    if not (tc.sites == 1 and tc.crossings == 2):
        rep.checks.update(verify_minimal_reduction(code, cache).checks)
    if tc.crossings >= 3:
        rep.checks.update(verify_truncated_skein(code, cache).checks)
    return rep


def sweep(max_crossings: int, cache=None) -> list[VerificationReport]:
    """verify_code over every standard code with 2..max_crossings crossings."""
    from .notation import enumerate_standard

    reports = []
    for c in range(2, max_crossings + 1):
        for code in enumerate_standard(c):
            reports.append(verify_code(code, cache))
    return reports
