"""Exact Coxeter polynomials of quivers, characteristic polynomials of graphs, and the
closed forms linking their low coefficients."""

from .errors import *  # noqa: F401,F403
from .formulas import (
    CoefficientReport,
    bipartite_orientation,
    theorem1_coefficients,
    theorem1_coefficients_alt,
    tree_a2,
    verify_theorem1,
)
from .graphs import (
    Graph,
    adjacency,
    closed_walks,
    coeffs_c2_c4,
    count_4cycles,
    trace_a4_closed_form,
)
from .intmat import (
    IntMatrix,
    acampo_matrix_identity,
    bareiss_det,
    char_poly_det,
    char_poly_newton,
    congruence,
    coxeter_poly_of_matrix,
    coxeter_transformation,
    is_square_zero,
)
from .polyalg import (
    AmbientPolynomial,
    basis_dims,
    is_even_space,
    is_palindromic,
    represent,
    s_transform,
    t_transform,
    transfer_matrix,
)
from .quivers import (
    Quiver,
    bipartition,
    cartan_matrix,
    count_a22,
    coxeter_poly,
    euler_matrix,
    is_acyclic,
    reflect,
    underlying_graph,
    verify_acampo,
)

__version__ = "0.1.0"
