"""Exact arithmetic for plane quartic fibrations in characteristic 2.

The quartic models Q_(a,b,c,e) carry a moving unibranch singularity and map
onto the cubics E_(a, ce).  Subpackage ``algebra`` holds the finite fields,
polynomials and rational functions everything else is written over.
"""

from .elliptic import TransformParams, discriminant, j_invariant, normal_form, transform
from .models import CaseAParams, QuarticParams, WeierstrassCoeffs, ZSquaredModel
from .quartic import build_cubic, build_quartic, isomorphism_decide, phi, psi
from .report import Check, Report
from .suites import run_suite

__version__ = "0.1.0"

__all__ = [
    "TransformParams", "discriminant", "j_invariant", "normal_form", "transform",
    "CaseAParams", "QuarticParams", "WeierstrassCoeffs", "ZSquaredModel",
    "build_cubic", "build_quartic", "isomorphism_decide", "phi", "psi",
    "Check", "Report", "run_suite",
]
