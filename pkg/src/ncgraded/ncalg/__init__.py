"""Free-algebra machinery: words, polynomials, presentations, twists."""

from .changes import (
    GradedAutomorphism,
    LinearChange,
    is_isomorphism_witness,
    relation_space,
    same_relation_span,
    span_equal,
    spans_contain,
    substitute,
    zhang_twist,
)
from .poly import NCPoly, Word
from .presentation import (
    Presentation,
    format_poly,
    parse_presentation,
    parse_relation,
    serialize_presentation,
)
from .quotient import GradedQuotient, SplittingReport, verify_module_splitting

__all__ = [
    "GradedAutomorphism", "LinearChange", "is_isomorphism_witness", "relation_space",
    "same_relation_span", "span_equal", "spans_contain", "substitute", "zhang_twist",
    "NCPoly", "Word", "Presentation", "format_poly", "parse_presentation", "parse_relation",
    "serialize_presentation", "GradedQuotient", "SplittingReport", "verify_module_splitting",
]
