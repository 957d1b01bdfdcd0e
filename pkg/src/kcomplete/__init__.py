"""Higher-level complete permutation polynomials over finite fields of odd characteristic.

Two families over GF(q^n), ``f_c+`` and ``f_c*``, their scaled variants, and
exhaustive checks of permutation property, completeness level, cycle
structure and composition-group laws.
"""

from .analysis import CycleType, PermReport, completeness_level, cycle_type, is_permutation, permutation_order
from .errors import CapacityError, FieldArithmeticError, ParameterError, ReducibleModulusError
from .families import (
    FamilyParams,
    build,
    build_f_plus,
    build_f_star,
    build_scaled,
    closed_eval_plus,
    closed_eval_star,
    family_m,
    parse_descriptor,
)
from .gf import Field, FieldElement, FieldSpec, arith, find_irreducible, make_field, parse_field_spec
from .groups import verify_additive_group, verify_multiplicative_group, verify_relationship, verify_star_lemma
from .poly import SparsePoly, compose_tables, evaluate, linear_mix, reduce_exponents, value_table

__version__ = "0.1.0"
