"""Lattice polynomial functions on finite bounded distributive lattices.

Build a lattice, tabulate a function over it, then ask whether the function
is polynomial, which subclass it belongs to, and which local properties it has.
"""

from .classes import (
    extract_inf_weights,
    extract_sup_weights,
    is_conservative,
    is_sugeno,
    is_symmetric,
    is_term_function,
    is_weakly_conservative,
    is_weighted_infimum,
    is_weighted_supremum,
    measure_from_polynomial,
    median_normal_form,
    sugeno_eval,
    sugeno_table,
    symmetric_median_form,
    symmetric_os_form,
)
from .errors import LatticePolyError
from .expr import Const, Join, Meet, Med, Var, eval_expr, parse_expr, random_expr, tabulate
from .formats import load_lattice, parse_function, parse_lattice, resolve_lattice
from .lattice import (
    Lattice,
    build_boolean,
    build_chain,
    build_diamond,
    build_from_covers,
    build_from_tables,
    build_product,
)
from .normal_forms import (
    alpha,
    alpha_star,
    beta,
    beta_star,
    dnf_table,
    cnf_table,
    enumerate_cnf_set,
    enumerate_dnf_set,
    eval_cnf,
    eval_dnf,
    extend_from_cube,
    in_cnf_set,
    in_dnf_set,
    is_polynomial,
    unique_cnf,
    unique_dnf,
)
from .properties import PROPERTIES, check_property, level_set
from .table import CoefficientMap, FnTable
from .theorems import sugeno_profile, theorem_profile, verify_theorem

__version__ = "0.1.0"

__all__ = [
    "CoefficientMap",
    "Const",
    "FnTable",
    "Join",
    "Lattice",
    "LatticePolyError",
    "Med",
    "Meet",
    "PROPERTIES",
    "Var",
    "alpha",
    "alpha_star",
    "beta",
    "beta_star",
    "build_boolean",
    "build_chain",
    "build_diamond",
    "build_from_covers",
    "build_from_tables",
    "build_product",
    "check_property",
    "cnf_table",
    "dnf_table",
    "enumerate_cnf_set",
    "enumerate_dnf_set",
    "eval_cnf",
    "eval_dnf",
    "eval_expr",
    "extend_from_cube",
    "extract_inf_weights",
    "extract_sup_weights",
    "in_cnf_set",
    "in_dnf_set",
    "is_conservative",
    "is_polynomial",
    "is_sugeno",
    "is_symmetric",
    "is_term_function",
    "is_weakly_conservative",
    "is_weighted_infimum",
    "is_weighted_supremum",
    "level_set",
    "load_lattice",
    "measure_from_polynomial",
    "median_normal_form",
    "parse_expr",
    "parse_function",
    "parse_lattice",
    "random_expr",
    "resolve_lattice",
    "sugeno_eval",
    "sugeno_profile",
    "sugeno_table",
    "symmetric_median_form",
    "symmetric_os_form",
    "tabulate",
    "theorem_profile",
    "unique_cnf",
    "unique_dnf",
    "verify_theorem",
]
