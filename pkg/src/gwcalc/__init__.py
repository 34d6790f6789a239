"""
Exact two-pointed genus-0 Gromov-Witten invariants of degree-k hypersurfaces
in P^{N-1} for degrees 1 and 2, together with the Chow ring machinery
(quasimap and stable-map presentations) used to cross-check them.
"""
from .gw import GWQuery, GWResult, METHODS, gw, gw_deg1, gw_deg2
from .kernel import binomial, rational_row_reduce, smith_normal_form
from .polyring import (
    EulerCoefficients,
    Polynomial,
    VariableSet,
    expand_euler_product,
    power_difference_quotient,
    substitute,
)
from .quasimap import (
    PathDisagreement,
    QuasimapRing,
    qm_intersection,
    qm_intersection_closed_d2,
    three_point_deg1,
    w_invariant,
)
from .quotient import (
    GradedPresentation,
    IntegralFunctional,
    PresentationError,
    contains_in_ideal,
    degree_piece,
    top_integral,
)
from .stablemap import (
    UncoveredDomainError,
    build_presentation_d1,
    build_presentation_d2,
    integral_d1_closed,
    integral_d2_closed,
    key_transform,
)
from .toric import (
    build_fan_skeleton,
    chow_presentation,
    class_group_and_weights,
    primitive_collections,
    stanley_reisner_and_linear_ideals,
)
from .verify import verify_all, verify_lemma

__version__ = "0.1.0"
