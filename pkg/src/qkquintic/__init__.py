"""Exact genus-zero quantum K-theory of the quintic threefold.

Rational functions in q are exact (FLINT-backed); power series in the Novikov
variable Q are truncated at an explicit order.
"""

from .flow import EpsilonTable, FlowError, cpn_small_j, flow_apply, i_function, solve_epsilon
from .frobenius import (
    FrobeniusData,
    frobenius_data,
    frobenius_residual,
    frobenius_solutions,
    l5_factor,
    l5_operator,
    q_harmonic,
)
from .gv import (
    GVCoverageError,
    GVTable,
    GWTable,
    KernelKind,
    QKInvariantSeries,
    bracket,
    conjectural_small_j,
    extract_qk_invariants,
    gv_from_gw,
    gv_gamma,
    gw_from_gv,
    jm_p_series,
    kernel_eval,
)
from .kring import KElem, KSeries, dual_basis, pairing
from .qdifference import (
    BirkhoffError,
    Matrix4Series,
    ScalarOperatorChain,
    SeriesMatrix,
    YukawaSeries,
    a_matrix_closed,
    birkhoff,
    d_matrix_closed,
    scalar_operator,
    shifted_matrix,
    solution_space,
    system_residual,
    t_matrix_closed,
    yukawa,
)
from .scalars import QLaurent, QRatFun, limit_q1, proj_pol, proj_red
from .series import (
    LogSeries,
    QDiffOp,
    QSeries,
    TruncationError,
    op_apply,
    op_compose,
    op_derivative,
    op_left_divmod,
    solve_delta,
)

__version__ = "0.1.0"
