"""Spin squeezing of the two-qubit biaxial plus Bell superposition.

Closed-form route: mean spin, mean-spin frame, transverse second moments,
and the squeezing parameter from analytic expressions in the state
parameters.  Oracle route: the same quantities from dense spin-1 operator
algebra with a direct variance minimization.  The crosscheck module runs
both over a grid and adjudicates the sign and normalization conventions
on which the two routes can legitimately differ.
"""
from .closedform import (
    CartesianSecondMoments,
    FrameMoments,
    MomentSet,
    cartesian_from_raising,
    frame_moments_closed_form,
    minimal_variance_closed_form,
    second_moments_closed_form,
    squeezing_literal,
    squeezing_standard,
)
from .crosscheck import (
    CrosscheckFailure,
    CrosscheckReport,
    default_grid,
    run_crosscheck,
)
from .frame import (
    DegenerateFrameError,
    FrameStatus,
    MeanSpin,
    SpinFrame,
    compute_frame,
    mean_spin_closed_form,
    mean_spin_length,
    mean_spin_length_closed_form,
    project_transverse_operators,
)
from .oracle import (
    METHOD_ALL_DIRECTIONS,
    METHOD_TRANSVERSE,
    OracleMoments,
    OraclePoint,
    SqueezeResult,
    concurrence,
    evaluate_oracle,
    min_transverse_variance,
    min_transverse_variance_scan,
    min_variance_all_directions,
    moments_oracle,
    squeeze_oracle,
)
from .spincore import (
    N_QUBITS,
    SpinOperatorSet,
    SqueezeParams,
    build_spin_operators,
    build_superposition_state,
    expectation,
)

__version__ = "0.1.0"

__all__ = [
    "CartesianSecondMoments",
    "CrosscheckFailure",
    "CrosscheckReport",
    "DegenerateFrameError",
    "FrameMoments",
    "FrameStatus",
    "METHOD_ALL_DIRECTIONS",
    "METHOD_TRANSVERSE",
    "MeanSpin",
    "MomentSet",
    "N_QUBITS",
    "OracleMoments",
    "OraclePoint",
    "SpinFrame",
    "SpinOperatorSet",
    "SqueezeParams",
    "SqueezeResult",
    "build_spin_operators",
    "build_superposition_state",
    "cartesian_from_raising",
    "compute_frame",
    "concurrence",
    "default_grid",
    "evaluate_oracle",
    "expectation",
    "frame_moments_closed_form",
    "mean_spin_closed_form",
    "mean_spin_length",
    "mean_spin_length_closed_form",
    "min_transverse_variance",
    "min_transverse_variance_scan",
    "min_variance_all_directions",
    "minimal_variance_closed_form",
    "moments_oracle",
    "project_transverse_operators",
    "run_crosscheck",
    "second_moments_closed_form",
    "squeeze_oracle",
    "squeezing_literal",
    "squeezing_standard",
    "__version__",
]
