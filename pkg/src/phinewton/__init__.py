"""phi-adic Newton polygons, residual polynomials, and irreducibility bounds
for monic integer polynomials with the p-adic valuation."""

__version__ = "0.1.0"

from .valuation import INFINITY, ValuationDomain, is_prime, reduce_rational
from .polyring import (
    IntPoly,
    PhiExpansion,
    gauss_valuation,
    is_power_of_phibar,
    phi_expand,
    poly_divmod,
)
from .residue_field import (
    ExtField,
    ExtFieldElem,
    ExtPoly,
    FactorizationFp,
    FpPoly,
    ext_count_irreducible_factors,
    ext_field,
    ext_is_irreducible,
    fp_factorize,
    fp_is_irreducible,
)
from .polygon import (
    NewtonPolygon,
    PolygonPoint,
    Side,
    build_polygon,
    minkowski_sum,
    principal_part,
)
from .residual import ResidualPolynomial, residual_coefficient, residual_polynomial
from .criteria import (
    BOUNDED,
    INAPPLICABLE,
    IRREDUCIBLE,
    AnalysisReport,
    PhiReport,
    SideAnalysis,
    SingleSideHypothesis,
    analyze,
    bound_full,
    bound_single_phi,
    check_single_side_hypothesis,
    irreducibility_test,
)
from .expr import ParseError, parse_poly, render_poly

__all__ = [
    "INFINITY",
    "ValuationDomain",
    "is_prime",
    "reduce_rational",
    "IntPoly",
    "PhiExpansion",
    "gauss_valuation",
    "is_power_of_phibar",
    "phi_expand",
    "poly_divmod",
    "ExtField",
    "ExtFieldElem",
    "ExtPoly",
    "FactorizationFp",
    "FpPoly",
    "ext_count_irreducible_factors",
    "ext_field",
    "ext_is_irreducible",
    "fp_factorize",
    "fp_is_irreducible",
    "NewtonPolygon",
    "PolygonPoint",
    "Side",
    "build_polygon",
    "minkowski_sum",
    "principal_part",
    "ResidualPolynomial",
    "residual_coefficient",
    "residual_polynomial",
    "BOUNDED",
    "INAPPLICABLE",
    "IRREDUCIBLE",
    "AnalysisReport",
    "PhiReport",
    "SideAnalysis",
    "SingleSideHypothesis",
    "analyze",
    "bound_full",
    "bound_single_phi",
    "check_single_side_hypothesis",
    "irreducibility_test",
    "ParseError",
    "parse_poly",
    "render_poly",
]
