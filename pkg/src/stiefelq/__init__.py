"""Exact topological invariants of cyclic quotients of complex Stiefel
manifolds.

The objects are the quotients of the manifold of unitary k-frames in C^n by
the scalar action of the m-th roots of unity (1 <= k < n, m >= 2); lens
spaces are the k = 1 members.  The library computes, in exact integer
arithmetic: mod-p cohomology presentations with Poincare polynomials, the
orders and height of the powers of the degree-2 integral class,
characteristic classes, span and stable-span bounds, and three-valued
parallelizability verdicts.
"""

from stiefelq.arith import (
    RHDecomposition,
    binomial,
    binomial_mod,
    factorize,
    gcd_with_binomials,
    is_prime,
    padic_valuation_binomial,
    radon_hurwitz,
    rh_decompose,
)
from stiefelq.charclass import (
    CharClassReport,
    PontrjaginTerm,
    StiefelWhitneyTerm,
    char_class_report,
    pontrjagin_class,
    stiefel_whitney_classes,
)
from stiefelq.manifold import (
    BasicInvariants,
    ManifoldParams,
    ParameterError,
    basic_invariants,
    validate,
)
from stiefelq.modp import (
    CohomologyCase,
    PolyGenerator,
    RingPresentation,
    SquareRule,
    betti_mod_p,
    classify,
    poincare_polynomial,
    presentation,
    total_dimension,
    truncation_exponent,
)
from stiefelq.report import (
    CSV_HEADER,
    SCHEMA_VERSION,
    CohomologyEntry,
    GridSpec,
    InvariantReport,
    compute_report,
    default_primes,
    generate_table,
    render,
    render_table,
    report_from_json,
)
from stiefelq.span import (
    SpanReport,
    TriState,
    lower_bound_from_external_span,
    parallelizable_verdict,
    span_eq_stable_guaranteed,
    span_lower_bound,
    span_report,
    span_upper_bound,
    stably_parallelizable_verdict,
)
from stiefelq.torsion import (
    TorsionProfile,
    order_of_power,
    torsion_order,
    torsion_profile,
    torsion_profile_via_valuations,
    transgression_coefficient,
)

__version__ = "0.1.0"

__all__ = [
    "BasicInvariants",
    "CSV_HEADER",
    "CharClassReport",
    "CohomologyCase",
    "CohomologyEntry",
    "GridSpec",
    "InvariantReport",
    "ManifoldParams",
    "ParameterError",
    "PolyGenerator",
    "PontrjaginTerm",
    "RHDecomposition",
    "RingPresentation",
    "SCHEMA_VERSION",
    "SpanReport",
    "SquareRule",
    "StiefelWhitneyTerm",
    "TorsionProfile",
    "TriState",
    "basic_invariants",
    "betti_mod_p",
    "binomial",
    "binomial_mod",
    "char_class_report",
    "classify",
    "compute_report",
    "default_primes",
    "factorize",
    "gcd_with_binomials",
    "generate_table",
    "is_prime",
    "lower_bound_from_external_span",
    "order_of_power",
    "padic_valuation_binomial",
    "parallelizable_verdict",
    "poincare_polynomial",
    "pontrjagin_class",
    "presentation",
    "radon_hurwitz",
    "render",
    "render_table",
    "report_from_json",
    "rh_decompose",
    "span_eq_stable_guaranteed",
    "span_lower_bound",
    "span_report",
    "span_upper_bound",
    "stably_parallelizable_verdict",
    "stiefel_whitney_classes",
    "torsion_order",
    "torsion_profile",
    "torsion_profile_via_valuations",
    "transgression_coefficient",
    "validate",
]
