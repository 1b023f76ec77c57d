"""Exact computations on the toric SL(2)-threefolds E_{l,m}.

Semigroup generators, the G0 x G_m weight grading of Q[X0..X4], the
Lambda-grading of the three-variable subrings, the ideals I_s and J_s with
their Hilbert functions on finite windows, Borel stability, and the tangent
dimension at the Borel-fixed ideal J_0.
"""

from .params import ParamsError, VarietyParams, is_toric, make_params
from .grading import (
    Polynomial,
    Weight,
    homogeneous_components,
    monomials_of_weight,
    parse_polynomial,
    render_monomial,
    render_polynomial,
    weight_of,
)
from .semigroup import contains, embedding_vector, invariant_generators, minimal_generators
from .lambda_grading import LambdaIndex, basis_Rc_n, c_min, f_lambda, lambda_min, mu, omega_min
from .ideals import (
    HilbertReport,
    IdealSpec,
    ideal_generators,
    normal_form,
    truncated_quotient_dim,
    verify_hilbert_window,
    verify_orbit_vanishing,
)
from .group_action import GroupElement, act, is_b_stable, translate_check
from .tangent import quotient_witness, tangent_dimension_J0

__version__ = "0.1.0"
