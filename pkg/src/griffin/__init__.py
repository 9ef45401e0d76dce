"""Groebner bases for Griffin's ideals I_{n, lambda, s}, built recursively from
container-diagram combinatorics and checked against a Buchberger oracle."""

from .construct import GroebnerElement, build_G, build_G_s, lift_F, lineage, shift_up
from .diagrams import (
    ContainerDiagram,
    build_D,
    build_D_direct,
    code,
    code_inv,
    dominate_down,
)
from .groebner import (
    GroebnerBasis,
    buchberger,
    groebner,
    hilbert_function,
    is_groebner,
    normal_form,
    reduce_basis,
    s_polynomial,
    standard_monomials,
)
from .ideals import GeneratorKey, TrackedPolynomial, certify, generator_keys, generators
from .partitions import INF, conjugate, enumerate_A, in_C, p_stat, remove_corner, staircases
from .poly import Polynomial, complete_homogeneous, elementary
from .verify import SweepSpec, conjecture_sweep, verify

__version__ = "0.1.0"
