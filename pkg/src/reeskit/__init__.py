"""Defining equations and minimal free resolution of the Rees algebra of a
tri-generated monomial ideal <T0^d1, T0^u1*T1^u2, T1^d2>."""

from .generators import (
    DeltaData,
    GeneratorRecord,
    Kind,
    delta_data,
    minimal_generators,
    minimal_generators_plane_curve,
    normalize_input,
    skip_optimized_indices,
)
from .graph import ReesGraph, augment, build_graph, export_dot
from .groebner import GroebnerBasis, colon_ideal_gens, colon_ideal_gens_bruteforce, groebner_basis
from .monomial import Binomial, IdealParams, Monomial, normalize, parse_monomial, psi
from .resolution import FreeResolution, betti_numbers, build_resolution, minimalize, verify_complex

__all__ = [
    "Binomial",
    "DeltaData",
    "FreeResolution",
    "GeneratorRecord",
    "GroebnerBasis",
    "IdealParams",
    "Kind",
    "Monomial",
    "ReesGraph",
    "augment",
    "betti_numbers",
    "build_graph",
    "build_resolution",
    "colon_ideal_gens",
    "colon_ideal_gens_bruteforce",
    "delta_data",
    "export_dot",
    "groebner_basis",
    "minimal_generators",
    "minimal_generators_plane_curve",
    "minimalize",
    "normalize",
    "normalize_input",
    "parse_monomial",
    "psi",
    "skip_optimized_indices",
    "verify_complex",
]
