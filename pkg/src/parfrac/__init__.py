"""Exact partial fraction decomposition of univariate rational functions."""

from .exceptions import (
    FieldMismatchError,
    NotCoprimeError,
    NotInvertibleError,
    ParfracError,
    ParseError,
    ReducibleModulusError,
)
from .fields import QQ, CountingField, ExtensionField, FieldElement, PrimeField, RationalField, field_from_name
from .polynomial import Polynomial, divrem, gcd, mul, product_tree, shift, xgcd
from .truncated import TruncatedSeries, trunc_div, trunc_div_naive, trunc_mul, truncate
from .expansion import FactoredDenominator, PartialFractionExpansion, PFDTerm, SplitDenominator
from .pfd_linear import frac_at_point, frac_at_zero, pfd_split, polynomial_part
from .pfd_quotient import frac_wrt, mod_inverse, pfd_general, ppfraction, rem_product, split_prime_power
from .full_expansion import FullExpansion, RootGroup, full_pfd, verify_full
from .oracle import classical_pfd, recombine, verify_expansion
from .parsing import InputSpec, parse_expansion_text, parse_expression, parse_polynomial
from .formatting import format_expansion

__version__ = "0.1.0"

__all__ = [
    "CountingField",
    "ExtensionField",
    "FactoredDenominator",
    "FieldElement",
    "FieldMismatchError",
    "FullExpansion",
    "InputSpec",
    "NotCoprimeError",
    "NotInvertibleError",
    "PFDTerm",
    "ParfracError",
    "ParseError",
    "PartialFractionExpansion",
    "Polynomial",
    "PrimeField",
    "QQ",
    "RationalField",
    "ReducibleModulusError",
    "RootGroup",
    "SplitDenominator",
    "TruncatedSeries",
    "classical_pfd",
    "divrem",
    "field_from_name",
    "format_expansion",
    "frac_at_point",
    "frac_at_zero",
    "frac_wrt",
    "full_pfd",
    "gcd",
    "mod_inverse",
    "mul",
    "parse_expansion_text",
    "parse_expression",
    "parse_polynomial",
    "pfd_general",
    "pfd_split",
    "polynomial_part",
    "ppfraction",
    "product_tree",
    "recombine",
    "rem_product",
    "shift",
    "split_prime_power",
    "trunc_div",
    "trunc_div_naive",
    "trunc_mul",
    "truncate",
    "verify_expansion",
    "verify_full",
    "xgcd",
]
