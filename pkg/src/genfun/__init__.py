"""Exact translation of differential operators in a generating-function
variable into recurrences for the generated sequence, plus numerical
orthogonality checks for polynomial sequences."""

from .deltaop import DeltaOp, NPoly, deltaop_apply, deltaop_compose, deltaop_eigencheck
from .diffop import DiffOp, EigenReport, commutator, diffop_apply, diffop_compose, diffop_eigencheck
from .errors import *  # noqa: F401,F403
from .orthogonality import GramReport, WeightSpec, gram, inner_product, theorem2_norms
from .parsing import parse_deltaop, parse_diffop, parse_ring_elem, parse_weight, parse_zpoly
from .ring import POLYX, RATIONAL, Poly, Ring, RingElem, poly_derivative, poly_divrem, ring_mul
from .series import (
    LaurentSeries,
    Sequence,
    sequence_from_series,
    series_coeff,
    series_from_prefactor_exp,
    series_mul,
)
from .translate import Lemma1Report, lemma1_check, translate

__version__ = "0.1.0"
