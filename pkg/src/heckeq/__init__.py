"""Exact q-series arithmetic and a verifier for Hecke-type identities.

Both sides of each registered identity are expanded as truncated formal
series with rational coefficients and compared coefficient by coefficient.
"""

from .hecke import HeckeSpec, Kind, Region, build_hecke, theta_sum
from .hypergeom import RationalQ, TermSumSpec, build_term_sum
from .kernels import BACKEND
from .ring import DEFAULT_WEIGHTS, Monomial, NotAUnitError, ParamPolynomial, parse_monomial, qm
from .series import (
    NonTerminatingError,
    PochhammerArg,
    PoleError,
    SpecializationError,
    TruncatedSeries,
    inverse_pochhammer,
    pochhammer,
    series_invert,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "DEFAULT_WEIGHTS", "Monomial", "ParamPolynomial", "NotAUnitError", "parse_monomial",
    "qm", "TruncatedSeries", "PochhammerArg", "pochhammer", "inverse_pochhammer", "series_invert",
    "PoleError", "NonTerminatingError", "SpecializationError", "TermSumSpec", "build_term_sum",
    "RationalQ", "HeckeSpec", "Region", "Kind", "build_hecke", "theta_sum", "__version__",
]
