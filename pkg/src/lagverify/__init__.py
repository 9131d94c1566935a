"""Exact verification tools for the generalized Laguerre polynomials g1(x, n, s)."""

from .enumeration import PipelineConfig, run_pipeline
from .irreducibility import PolynomialZ, certify
from .laguerre import LaguerrePair, g1_coefficients, valuation_profile
from .newton import ffl_check, rightmost_slope

__version__ = "0.1.0"

__all__ = [
    "LaguerrePair",
    "PipelineConfig",
    "PolynomialZ",
    "certify",
    "ffl_check",
    "g1_coefficients",
    "rightmost_slope",
    "run_pipeline",
    "valuation_profile",
]
