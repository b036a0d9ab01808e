"""Exact Z^n-graded local cohomology of monomial quotients of polynomial rings.

Everything is computed with exact arithmetic (arbitrary-precision rationals or
a prime field): degreewise Cech cohomology of a monomial sequence acting on
R/I, Koszul cohomology with direct-limit stabilization, chamber decompositions
that turn (non)vanishing into a finite decision procedure, graded Matlis
duality, and the exponent-semigroup saturation criterion for top nonvanishing.
"""

__version__ = "0.1.0"

from .errors import (
    InternalConsistencyError,
    LclabError,
    ParseError,
    PreconditionError,
)
from .fields import PrimeField, RationalField, field_from_spec
from .monomial import Monomial, MonomialIdeal, MonomialSequence

__all__ = [
    "InternalConsistencyError",
    "LclabError",
    "Monomial",
    "MonomialIdeal",
    "MonomialSequence",
    "ParseError",
    "PreconditionError",
    "PrimeField",
    "RationalField",
    "field_from_spec",
    "__version__",
]
