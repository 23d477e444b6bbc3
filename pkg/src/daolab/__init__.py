"""daolab: exact computation of fullness thresholds (Dao numbers d1/d2/d3),
Ratliff-Rush closures, reduction numbers, and Castelnuovo-Mumford regularity
of Rees-type modules over graded and local-at-origin algebras."""

from .fields import GF, QQ, DEFAULT_PRIME
from .monomials import DEGREVLEX, LEX, BlockElim
from .polynomials import PolyRing, Polynomial, poly_op
from .groebner import buchberger, normal_form, eliminate, kdim_component, kbasis_modulo_power
from .syzygy import syzygy_basis
from .rings import (
    GRADED,
    LOCAL,
    IdealHandle,
    PresentedRing,
    ideal_colon,
    ideal_combine,
    ideal_intersect,
    ideal_power,
    is_d_sequence,
    localized_equal,
    max_ideal,
)

__all__ = [
    "GF",
    "QQ",
    "DEFAULT_PRIME",
    "DEGREVLEX",
    "LEX",
    "BlockElim",
    "PolyRing",
    "Polynomial",
    "poly_op",
    "buchberger",
    "normal_form",
    "eliminate",
    "kdim_component",
    "kbasis_modulo_power",
    "syzygy_basis",
    "GRADED",
    "LOCAL",
    "PresentedRing",
    "IdealHandle",
    "max_ideal",
    "ideal_combine",
    "ideal_power",
    "ideal_colon",
    "ideal_intersect",
    "localized_equal",
    "is_d_sequence",
]

__version__ = "0.1.0"
