"""Toric ideals of matroids: exact binomial Groebner bases, an elimination
oracle, and lifts of generating sets through series/parallel extensions,
series/parallel connections and 2-sums."""

from .backend import NAME as BACKEND
from .catalog import excluded_minor_free, graphic, named, uniform
from .exchange import check_white_gb, check_white_generation, symmetric_exchange_set
from .groebner import buchberger, ideals_equal, is_groebner, normal_form
from .lifts import (
    Construction,
    parallel_connection_generators,
    parallel_extension_generators,
    series_connection_generators,
    series_extension_generators,
    sp_extension_sequence,
    two_sum_generators,
    verify,
)
from .matroid import Matroid, anchor, contract, delete, direct_sum, dual, validate_matroid
from .polys import BasisVar, Binomial, BinomialSet, Monomial, MonomialOrder, PairVar
from .toric import bases_matrix, toric_gb

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BasisVar",
    "Binomial",
    "BinomialSet",
    "Construction",
    "Matroid",
    "Monomial",
    "MonomialOrder",
    "PairVar",
    "anchor",
    "bases_matrix",
    "buchberger",
    "check_white_gb",
    "check_white_generation",
    "contract",
    "delete",
    "direct_sum",
    "dual",
    "excluded_minor_free",
    "graphic",
    "ideals_equal",
    "is_groebner",
    "named",
    "normal_form",
    "parallel_connection_generators",
    "parallel_extension_generators",
    "series_connection_generators",
    "series_extension_generators",
    "sp_extension_sequence",
    "symmetric_exchange_set",
    "toric_gb",
    "two_sum_generators",
    "uniform",
    "validate_matroid",
    "verify",
]
