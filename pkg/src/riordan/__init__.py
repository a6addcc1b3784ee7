"""Exact computations in the Riordan group over Q, Z/nZ and GF(p)."""

from .group import (
    DihedralParams,
    JenningsReport,
    Membership,
    OrderResult,
    RiordanArray,
    commutes,
    delta_embed,
    diagonal_embed,
    dihedral_generators,
    element_order,
    identity,
    inverse,
    is_involution,
    is_pseudo_involution,
    jennings_power,
    multiply,
    pascal,
    pascal_generalized,
    power_formula_check,
    subgroup_membership,
    to_matrix,
)
from .matrices import LowerTriMatrix, Matrix
from .presentations import (
    CoxeterPresentation,
    builtin,
    dihedral_words,
    is_faithful,
    parse_presentation,
    render,
    verify_assignment,
)
from .rings import Element, Modular, PrimeField, Rationals, Ring, from_integer, parse_ring
from .series import (
    AT_LEAST_PRECISION,
    Series,
    comp_inverse,
    compose,
    compositional_power,
    rational_series,
)
from .truncated import (
    GroupInventory,
    classify_faithful_S3_in_R2Z3,
    enumerate_Rn,
    find_conjugator,
    subgroup_closure,
    truncate,
)

__version__ = "0.1.0"
