"""Hadamard products and powers of projective varieties over QQ."""

from hadamard.algebra import GREVLEX, LEX, MonomialOrder, Polynomial, Ring, canonicalize, elimination, evaluate
from hadamard.groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    computation_budget,
    divide,
    eliminate,
    ideal_equals,
    ideal_membership,
    intersect,
    normal_form,
    ring_map_kernel,
)
from hadamard.parser import parse_point, parse_points, parse_polynomial, parse_polynomials, parse_script
from hadamard.products import (
    ProjectivePoint,
    hadamard_power,
    hadamard_power_ideal,
    hadamard_power_points,
    hadamard_product,
    hadamard_product_ideals,
    hadamard_product_list,
    hadamard_product_points,
    ideal_of_projective_points,
    linear_span_ideal,
    point_equals,
    point_hadamard,
    single_point_ideal,
)

__version__ = "0.1.0"
