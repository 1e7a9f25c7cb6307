"""Exact Kauffman polynomial computation for link diagrams.

The package computes the two-variable regular-isotopy polynomial
Lambda(a, z) of a link diagram over the integers, builds standard
alternating diagrams of rational links from Conway codes, and checks
mechanically that the three leading coefficients in the second-highest
z row count the diagram's twist sites by turning direction.
"""

from .diagram import (
    AXIAL,
    CROSS_SECTIONAL,
    INFINITY,
    ZERO,
    LinkDiagram,
    SiteTag,
    build_standard,
    canonical_key,
    classify_smoothing,
    components,
    connected_sum,
    diagram_from_arcs,
    is_alternating,
    mirror,
    parse_pd,
    remove_curls,
    self_writhe,
    smooth,
    switch,
    to_pd,
    unlink,
)
from .kauffman import (
    LaurentPoly2,
    TopDegreeMismatchError,
    TruncatedLambda,
    delta_unlink,
    lambda_poly,
    mirror_poly,
    staggered,
    truncate,
)
from .notation import (
    ConwayCode,
    TwistCensus,
    census,
    continued_fraction,
    enumerate_standard,
    minimal_code,
    parse_conway,
    predicted_u,
)
from .verify import (
    VerificationReport,
    amphicheiral_obstruction,
    check_diagram,
    chirality_class,
    sweep,
    verify_code,
    verify_connected_sum,
    verify_minimal_reduction,
    verify_truncated_skein,
    verify_twist_counts,
)

__version__ = "0.1.0"
