"""Exact computations with reflection groups, the one-parameter quadratic
forms on their reflection classes, and the associated representations."""

from __future__ import annotations

from fractions import Fraction as Rational

from .arrangement import codim2_flats, parabolic_reflections
from .cyclotomic import CycNum, CyclotomicField, cyclotomic_field, totient
from .groups import (
    ReflectionGroupData,
    alpha,
    build_coxeter,
    build_from_generators,
    build_series,
    class_graph,
    class_stats,
    k_c,
    load_generator_group,
)
from .krammer import (
    LaurentQT,
    build_krammer,
    check_braid_relations,
    cubic_specialization_check,
    sigma_inverse,
)
from .matrices import ExactMatrix, char_poly, evaluate, rank_and_kernel
from .polynomials import M, ParamPoly, cyclotomic_polynomial, integer_roots
from .quadratic import (
    Discriminant,
    check_n_c,
    closed_form_check,
    conjecture_scan,
    discriminant,
    gram_matrix,
    kernel_at,
)
from .rep import (
    RepBundle,
    build_rep,
    check_T_scalar,
    check_equivariance,
    check_integrability,
    dihedral_m0_check,
    parabolic_restriction_check,
    spectrum_check,
)
from .tensor import (
    TensorOps,
    algebra_dimension,
    ds_table_check,
    psu_membership_check,
    tensor_square_check,
)

__all__ = [
    "Rational",
    "CycNum",
    "CyclotomicField",
    "cyclotomic_field",
    "totient",
    "ExactMatrix",
    "char_poly",
    "evaluate",
    "rank_and_kernel",
    "M",
    "ParamPoly",
    "cyclotomic_polynomial",
    "integer_roots",
    "ReflectionGroupData",
    "alpha",
    "build_coxeter",
    "build_from_generators",
    "build_series",
    "class_graph",
    "class_stats",
    "k_c",
    "load_generator_group",
    "codim2_flats",
    "parabolic_reflections",
    "Discriminant",
    "check_n_c",
    "closed_form_check",
    "conjecture_scan",
    "discriminant",
    "gram_matrix",
    "kernel_at",
    "RepBundle",
    "build_rep",
    "check_T_scalar",
    "check_equivariance",
    "check_integrability",
    "dihedral_m0_check",
    "parabolic_restriction_check",
    "spectrum_check",
    "TensorOps",
    "algebra_dimension",
    "ds_table_check",
    "psu_membership_check",
    "tensor_square_check",
    "LaurentQT",
    "build_krammer",
    "check_braid_relations",
    "cubic_specialization_check",
    "sigma_inverse",
]
