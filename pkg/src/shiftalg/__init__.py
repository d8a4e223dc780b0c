"""Exact algebra of the unilateral shift, its adjoint and the boundary projector."""

from .algebra import (
    Bwd, C, Corner, E, Element, Fwd, I, IndexCapError, ShiftVariant, U, Ustar, build_T,
    commutator, corner_rank, corner_support, delta, entry, first_order_coefficient,
    generic_corner_rank, jacobiator, mul, power, random_element, shift, telescoping_residual,
    truncate,
)
from .audit import AuditConfig, ClaimReport, render_report, run_audit
from .cohomology import (
    Cochain2, ExtensionSpec, FiniteLieAlgebra, Functional, boundary_cocycle, central_extension,
    corner_window_algebra, d2_check, diagonal_reduction_check, exactness_witness,
    independence_matrix, omega, phi, separating_matrix, trace_relation, truncated_H2,
)
from .grammar import ParseError, format_element, parse_element
from .oracle import (
    apply, edge_eigen_sweep, eigenvalues, heatmap_dump, numeric_rank, operator_norm,
    oracle_mul_check, orbit_span_dim, sweep_csv, to_matrix,
)
from .scalar import EPS, GaussianRational, Scalar

__version__ = "0.1.0"
