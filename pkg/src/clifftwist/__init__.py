"""Exact Clifford algebras Cl(p,q) as twisted group rings over (Z2)^n.

Spinor ideals, the stabilizer/idempotent/field groups of a primitive
idempotent, and the automorphism groups of spinor scalar products.
"""

from .algebra import Multivector, Signature, monomial_str, parse_monomial, parse_multivector, star, transposition
from .forms import beta_product, classify, find_s, gram, table_sweep, tp_product
from .groups import group_lattice, normal_series_check, verify_main_theorem
from .idempotents import primitive_idempotent
from .spinors import clidata, k_basis

__version__ = "0.1.0"

__all__ = [
    "Multivector",
    "Signature",
    "beta_product",
    "clidata",
    "classify",
    "find_s",
    "gram",
    "group_lattice",
    "k_basis",
    "monomial_str",
    "normal_series_check",
    "parse_monomial",
    "parse_multivector",
    "primitive_idempotent",
    "star",
    "table_sweep",
    "tp_product",
    "transposition",
    "verify_main_theorem",
]
