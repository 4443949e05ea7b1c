"""Fully entangled fraction: Ky Fan upper bound, exact two-qubit values, and checks."""
from .bloch import BlochDecomposition, correlation_matrix, decompose, reconstruct
from .distill import DistillAdvice, Verdict, advise, figure1_thresholds, reduction_criterion
from .fef import (
    FefReport,
    fef_report,
    fef_two_qubit_bell,
    fef_two_qubit_exact,
    fef_two_qubit_kyfan,
    fef_upper_bound,
    fidelity,
    normalized_fef,
)
from .generators import GeneratorBasis, build_generator_basis, check_completeness, rotate_basis
from .oracle import OracleConfig, oracle_fef
from .state import (
    DensityMatrix,
    example_family_rho_x,
    example_family_rho_x_fig1,
    max_entangled_projector,
    validate,
)
from .tripartite import (
    TriPureState,
    WParams,
    concurrence_ab_c,
    schmidt_ab_c,
    theorem3_check,
    w_closed_forms,
)

__version__ = "0.1.0"
