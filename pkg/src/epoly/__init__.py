"""Exact E-polynomials of parabolic Sp(2n) character varieties."""

from .exactpoly import IntPoly, RatPoly
from .strata import E_stratum, enumerate_subgroups
from .typesum import C_tau, E_total, H_tau, N_total, enumerate_types

__all__ = [
    "IntPoly",
    "RatPoly",
    "E_total",
    "N_total",
    "E_stratum",
    "enumerate_subgroups",
    "enumerate_types",
    "H_tau",
    "C_tau",
]
__version__ = "0.1.0"
