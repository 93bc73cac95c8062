"""Exact reduced tensor products of braided fusion categories over a symmetric base."""

__version__ = "0.1.0"

from .catalog import builtin, load, parse_category_file, serialize_category_file
from .centre import centre_simples
from .enrich import Enrichment
from .fusion import FusionCategory, modular_data_balancing, validate
from .redprod import BoxtimesS, mme_pair, reduced_product

__all__ = [
    "BoxtimesS",
    "Enrichment",
    "FusionCategory",
    "builtin",
    "centre_simples",
    "load",
    "mme_pair",
    "modular_data_balancing",
    "parse_category_file",
    "reduced_product",
    "serialize_category_file",
    "validate",
]
