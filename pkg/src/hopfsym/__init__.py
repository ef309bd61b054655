"""Exact structure-constant computations for finite-dimensional Hopf algebras,
comodule algebras, and their Frobenius / (H,u)-symmetric properties."""

from .exactlin import QQ, Field, FieldError, DimensionError, Scalar
from .hopfcore import AlgebraSC, CoalgebraSC, HopfSC, ValidationError, dual_hopf, validate_hopf
from .corep import ComoduleAlgebraSC, NotSovereignError, validate_comodule_algebra
from .structure import distinguished_pair, integrals, verify_integral_identities
from .constructions import (
    coinvariants,
    corner,
    cyclic_group_hopf,
    group_hopf,
    smash_product,
    sweedler_h4,
    trivial_extension,
)
from .checkers import (
    CheckReport,
    check_frobenius_in_MH,
    check_plain,
    check_symmetric,
    decide,
)

__version__ = "0.1.0"
