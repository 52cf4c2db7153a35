"""Exact arithmetic in q-skew Ore extensions R[x; sigma, delta] over small algebras."""

from .errors import OreError
from .expr import evaluate, parse_expression, to_text
from .harness import lemma_suite, nil_witness, product_chain, vandermonde_solve
from .orepoly import MINUS_INFINITY, OrePoly, iterated_expand, mul_goodearl, mul_naive, x_pow_times
from .oreseries import OreSeries, detect_polynomial, quasi_check, quasi_inverse
from .qbinom import gauss_binom, qbinom_eval
from .rings import OreContext, RingSpec, check_context, nildeg, tordeg
from .scalars import GF, QQ, Scalar, mult_order

__version__ = "0.1.0"

__all__ = [
    "GF",
    "MINUS_INFINITY",
    "OreContext",
    "OreError",
    "OrePoly",
    "OreSeries",
    "QQ",
    "RingSpec",
    "Scalar",
    "check_context",
    "detect_polynomial",
    "evaluate",
    "gauss_binom",
    "iterated_expand",
    "lemma_suite",
    "mul_goodearl",
    "mul_naive",
    "mult_order",
    "nil_witness",
    "nildeg",
    "parse_expression",
    "product_chain",
    "qbinom_eval",
    "quasi_check",
    "quasi_inverse",
    "to_text",
    "tordeg",
    "vandermonde_solve",
    "x_pow_times",
]
