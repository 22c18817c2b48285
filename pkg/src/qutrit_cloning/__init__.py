"""Asymmetric quantum cloning of N-level systems.

Numerical toolkit for state-dependent cloning machines: error-operator
formalism, mutually unbiased bases, parametric cloner families with
closed-form fidelities, and optimal clone-A/clone-B trade-off curves
(including the three-basis asymmetric curve, which is solved
numerically).  A CLI exposes verification tables, fidelity tables,
curve sweeps, and single-state cloning runs.
"""

from .cloner import (
    AmplitudeMatrix,
    CloneOutputs,
    EntropicCheck,
    JointState,
    ProbabilityMatrix,
    clone_by_projection,
    clone_outputs_mixture,
    entropic_check,
    fidelity_equator,
    fidelity_in_basis,
    fourier_dual,
    joint_state,
    joint_state_dual,
    row_fourier,
)
from .families import (
    FamilyFidelities,
    QubitPhaseCovParams,
    ThreeBasisAsymParams,
    ThreeBasisSymParams,
    TwoBasisParams,
    UniversalParams,
    build,
    check_four_basis_constraints,
    check_three_basis_canonical,
    check_three_basis_constraints,
    check_two_basis_constraints,
    dual_params,
    family_fidelities,
    params_from_json,
    params_to_json,
)
from .hilbert import (
    DensityMatrix,
    Operator,
    StateVector,
    fidelity,
    partial_trace,
    shannon_entropy,
    tensor,
)
from .mub import Basis, EquatorParams, MubSet, equator_state, qubit_mubs, qutrit_mubs
from .optimizer import (
    TradeoffPoint,
    brute_force_optimal,
    qubit_phase_cov_tradeoff,
    three_basis_asym_tradeoff,
    three_basis_symmetric_optimal,
    tradeoff_curve,
    two_basis_tradeoff,
    universal_tradeoff,
)
from .weyl import WeylIndex, bell_state, weyl_operator

__version__ = "0.1.0"

__all__ = [
    "AmplitudeMatrix",
    "Basis",
    "CloneOutputs",
    "DensityMatrix",
    "EntropicCheck",
    "EquatorParams",
    "FamilyFidelities",
    "JointState",
    "MubSet",
    "Operator",
    "ProbabilityMatrix",
    "QubitPhaseCovParams",
    "StateVector",
    "ThreeBasisAsymParams",
    "ThreeBasisSymParams",
    "TradeoffPoint",
    "TwoBasisParams",
    "UniversalParams",
    "WeylIndex",
    "bell_state",
    "brute_force_optimal",
    "build",
    "check_four_basis_constraints",
    "check_three_basis_canonical",
    "check_three_basis_constraints",
    "check_two_basis_constraints",
    "clone_by_projection",
    "clone_outputs_mixture",
    "dual_params",
    "entropic_check",
    "equator_state",
    "family_fidelities",
    "fidelity",
    "fidelity_equator",
    "fidelity_in_basis",
    "fourier_dual",
    "joint_state",
    "joint_state_dual",
    "params_from_json",
    "params_to_json",
    "partial_trace",
    "qubit_mubs",
    "qubit_phase_cov_tradeoff",
    "qutrit_mubs",
    "row_fourier",
    "shannon_entropy",
    "tensor",
    "three_basis_asym_tradeoff",
    "three_basis_symmetric_optimal",
    "tradeoff_curve",
    "two_basis_tradeoff",
    "universal_tradeoff",
    "weyl_operator",
]
