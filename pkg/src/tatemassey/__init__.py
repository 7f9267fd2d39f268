"""Exact computations in the Tate cohomology of generalized quaternion groups.

Secondary multiplication on the Tate ring of Q_4t in characteristic 2 and
realizability of modules via matric Massey products.
"""

from .fields import GF2, GF4, get_field
from .group_algebra import AlgebraElement, ConfigError, GroupConfig, special, verify_identities
from .massey import LambdaMatrix, indeterminacy_member, m_matrix, minimal_kernel_generators, realizable_summand
from .resolution import PeriodicMap, build_resolution, class_map, solve_homotopy, standard_map
from .secondary import SecondaryProduct, gamma_certificate, m_value, verify_cocycle, verify_f2
from .tate_ring import RingElement, parse

__all__ = [
    "GF2", "GF4", "get_field",
    "AlgebraElement", "ConfigError", "GroupConfig", "special", "verify_identities",
    "LambdaMatrix", "indeterminacy_member", "m_matrix", "minimal_kernel_generators", "realizable_summand",
    "PeriodicMap", "build_resolution", "class_map", "solve_homotopy", "standard_map",
    "SecondaryProduct", "gamma_certificate", "m_value", "verify_cocycle", "verify_f2",
    "RingElement", "parse",
]
