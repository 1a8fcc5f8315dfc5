"""
Exact computations around radial parts of quiver D-modules: Cherednik
parameters, simplicity of spherical algebras, cyclotomic Hecke
semisimplicity, Weyl-algebra membership certificates, Harish-Chandra module
combinatorics, symmetric-pair data and discriminant semi-invariants.
"""

from .arith import CyclotomicUnit, Rational, cyc_from_angle, parse_rational
from .errors import (BoundTooSmall, DataIntegrity, ParseError, PreconditionViolation,
                     ProperSubsetRequired, RadpartsError, VarCountMismatch)
from .params import (HeckeParams, KappaWreath, KappaZl, VarsigmaQuiver, chi_from_varsigma,
                     hecke_from_kappa, kappa_rank1, kappa_weighted_line, kappa_wreath)

__version__ = "0.1.0"

__all__ = [
    "BoundTooSmall", "CyclotomicUnit", "DataIntegrity", "HeckeParams", "KappaWreath",
    "KappaZl", "ParseError", "PreconditionViolation", "ProperSubsetRequired", "RadpartsError",
    "Rational", "VarCountMismatch", "VarsigmaQuiver", "chi_from_varsigma", "cyc_from_angle",
    "hecke_from_kappa", "kappa_rank1", "kappa_weighted_line", "kappa_wreath", "parse_rational",
]
