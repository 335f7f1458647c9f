"""Exact resultants of symmetric-cubic gradient systems.

The library computes, entirely in exact rational arithmetic, the resultant
of the n quadratic forms dS/dx_i where S = a1*s1^3 + a2*s1*s2 + a3*s3 is a
symmetric cubic in n >= 3 variables: a factored closed form, a
reduction-chain evaluation, and an independent Macaulay-matrix oracle, plus
common-root witnesses and the Finsler-geometry solvability questions the
resultant answers.
"""

from .closedform import (
    BinomialTable,
    ReportFactor,
    ResultantReport,
    binomial,
    canonical_factor,
    closed_form_factor,
    closed_form_resultant,
    grouped_product,
    formula_to_canonical_ratio,
    poisson_product,
    resultant_via_reduction,
)
from .finsler import (
    DEGENERATE_METRIC_IDENTICALLY_ZERO,
    ConfiguratrixResult,
    MetricFunction,
    Momentum,
    configuratrix_resultant,
    configuratrix_system,
    indicatrix_degenerate,
)
from .oracle import (
    DegenerateDenominatorError,
    MacaulaySystem,
    MatrixSizeError,
    RootWitness,
    det_bareiss,
    det_rational,
    macaulay_resultant,
    root_witness,
    sylvester_resultant,
    verify_witness,
)
from .polycore import (
    MultiPoly,
    QuadExt,
    Scalar,
    elem_sym,
    format_scalar,
    grevlex_key,
    monomials_of_degree,
    parse_scalar,
    quad_product,
)
from .symcubic import (
    NormalizedCoeffs,
    ReducedParams,
    SymmetricCubic,
    TransformationUndefinedError,
    decompose,
)

__all__ = [
    "BinomialTable",
    "ConfiguratrixResult",
    "DEGENERATE_METRIC_IDENTICALLY_ZERO",
    "DegenerateDenominatorError",
    "MacaulaySystem",
    "MatrixSizeError",
    "MetricFunction",
    "Momentum",
    "MultiPoly",
    "NormalizedCoeffs",
    "QuadExt",
    "ReducedParams",
    "ReportFactor",
    "ResultantReport",
    "RootWitness",
    "Scalar",
    "SymmetricCubic",
    "TransformationUndefinedError",
    "binomial",
    "canonical_factor",
    "closed_form_factor",
    "closed_form_resultant",
    "configuratrix_resultant",
    "configuratrix_system",
    "decompose",
    "det_bareiss",
    "det_rational",
    "elem_sym",
    "format_scalar",
    "grevlex_key",
    "grouped_product",
    "indicatrix_degenerate",
    "macaulay_resultant",
    "monomials_of_degree",
    "formula_to_canonical_ratio",
    "parse_scalar",
    "poisson_product",
    "quad_product",
    "resultant_via_reduction",
    "root_witness",
    "sylvester_resultant",
    "verify_witness",
]

__version__ = "0.1.0"
