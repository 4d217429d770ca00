"""Exact Calogero-Moser-Sutherland operators on symmetric functions.

Infinite-dimensional CMS operators of the four families act on the
power-sum algebra; their finite and deformed restrictions act on exact
polynomials; a triangular solver produces Jack, Jacobi and super Jacobi
polynomials; and verification suites check every intertwining identity by
exact coefficient comparison over Q(k, p, q, h, p0, l).
"""

from .coeffs import (
    CoeffFrac,
    ParamPoly,
    PoleError,
    Rational,
    as_coeff,
    frac_equal,
    parse_coeff,
)
from .eigen import (
    EigenResult,
    ResonanceError,
    SuperJacobi,
    jack,
    jacobi,
    operator_matrix,
    specialize_euler,
    super_jacobi,
    verify_eigen,
)
from .finite_ops import (
    DeformedContext,
    NotInDeformedAlgebra,
    NotSymmetric,
    apply_cms_trig_a,
    apply_gauged_bc_trig,
    apply_gauged_deformed_bc,
    apply_gauged_rational_a,
    apply_gauged_rational_b,
    is_in_deformed_algebra,
    kernel_basis,
    phi_mn,
)
from .gauge import GaugeValidationError, validate_gauge_recipe
from .inf_ops import (
    DualityFailure,
    InfOperator,
    NormalSymbol,
    apply_inf,
    commutator_vanishes,
    fourier_swap_check,
    momentum,
    normal_symbol,
    rat_a,
    rat_b,
    scaling_conjugate,
    scaling_conjugate_bc,
    trig_a,
    trig_bc,
)
from .mpoly import DivisionFailure, MPoly
from .partitions import (
    Partition,
    WeightMismatch,
    dominance_compare,
    format_partition,
    parse_partition,
)
from .symfun import MBasisExpansion, SymFun, m_to_p, p_to_m, phi_N
from .verify import SuiteReport, run_suite

__version__ = "0.1.0"
