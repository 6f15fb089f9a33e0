"""Leading monomials of minimal Groebner bases of generic homogeneous sequences,
computed from Hilbert functions alone."""

from .instance import InstanceSpec, parse_degrees
from .lgb import (
    DegreeTrace,
    GenericityError,
    LgbResult,
    degree_bound,
    lgb_basic,
    lgb_improved,
    weakly_revlex_check,
)
from .monomial import Monomial, enumerate_degree, grevlex_cmp, parse_monomial
from .monomial_ideal import MonomialIdeal, hilbert_function, hps
from .series import BracketSeries, TruncatedSeries, bracket, generic_hilbert_series

__all__ = [
    "BracketSeries",
    "DegreeTrace",
    "GenericityError",
    "InstanceSpec",
    "LgbResult",
    "Monomial",
    "MonomialIdeal",
    "TruncatedSeries",
    "bracket",
    "degree_bound",
    "enumerate_degree",
    "generic_hilbert_series",
    "grevlex_cmp",
    "hilbert_function",
    "hps",
    "lgb_basic",
    "lgb_improved",
    "parse_degrees",
    "parse_monomial",
    "weakly_revlex_check",
]
