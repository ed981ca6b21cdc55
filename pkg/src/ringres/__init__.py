"""Resultants, reduced resultants and Bezout certificates over Z/nZ and
Galois rings, with bivariate, p-adic and number-field applications."""

from .ring import (
    ContextMismatchError,
    GaloisRing,
    NotSplittingError,
    NotUnitError,
    Zmod,
    find_irreducible,
    parse_ring,
)
from .poly import (
    FunFactorization,
    NeedsSplitError,
    NonInvertibleLeadingCoeffError,
    Poly,
    content,
    crt_poly,
    divrem,
    divrem_primitive,
    fun_factor,
    invert_mod,
    invert_unit,
    is_primitive,
    is_unit_poly,
    reciprocal,
)
from .linalg import (
    BezoutCertificate,
    Matrix,
    bareiss_det_int,
    det,
    howell,
    res_bezout_linalg,
    rres_linalg,
    sylvester,
)
from .resultant import RresCertificate, res, res_ideal, rres, rres_bezout
from .bivariate import BiPoly, degree_bound, interpolation_plan, res_y
from .padic import (
    PadicCtx,
    PadicGcd,
    PadicPoly,
    PrecisionError,
    fun_factor_padic,
    is_probable_prime,
    padic_gcd,
)
from .numberfield import (
    FieldElem,
    Ideal2,
    InsufficientHintError,
    NumberFieldCtx,
    elem_norm_mod,
    ideal_min,
    ideal_norm,
)

__version__ = "0.1.0"

__all__ = [
    "BezoutCertificate",
    "BiPoly",
    "ContextMismatchError",
    "FieldElem",
    "FunFactorization",
    "GaloisRing",
    "Ideal2",
    "InsufficientHintError",
    "Matrix",
    "NeedsSplitError",
    "NonInvertibleLeadingCoeffError",
    "NotSplittingError",
    "NotUnitError",
    "NumberFieldCtx",
    "PadicCtx",
    "PadicGcd",
    "PadicPoly",
    "Poly",
    "PrecisionError",
    "RresCertificate",
    "Zmod",
    "bareiss_det_int",
    "content",
    "crt_poly",
    "degree_bound",
    "det",
    "divrem",
    "divrem_primitive",
    "elem_norm_mod",
    "find_irreducible",
    "fun_factor",
    "fun_factor_padic",
    "howell",
    "ideal_min",
    "ideal_norm",
    "interpolation_plan",
    "invert_mod",
    "invert_unit",
    "is_primitive",
    "is_probable_prime",
    "is_unit_poly",
    "parse_ring",
    "reciprocal",
    "res",
    "res_bezout_linalg",
    "res_ideal",
    "res_y",
    "rres",
    "rres_bezout",
    "rres_linalg",
    "sylvester",
]
