"""Grover-style estimation of the mean of an amplitude-encoded function.

A normalized table of 2**n complex values doubles as an n-qubit state.
This package compiles that state, embeds its mean and one reference
amplitude as the two surviving components of a flagged register, amplifies
the flag, and estimates |mean| from the measured count ratio; a classical
brute-force oracle cross-checks every step.
"""

from .circuits import Circuit
from .errors import (
    DegenerateTargetError,
    NormalizationError,
    NullStarvationError,
    ReferencePointError,
)
from .estimator import (
    EstimationReport,
    OracleResult,
    classical_mean,
    classify_counts,
    exact_ratio,
    sampled_estimate,
    suggest_reference,
)
from .grover import AmplificationPlan, amplify, grover_iterate, plan_amplification
from .mean_circuit import (
    ClaimCheck,
    QubitLayout,
    ReferencePoint,
    SDecomposition,
    build_s_circuit,
    decompose_s,
    verify_claim,
)
from .state_prep import (
    BUILTIN_NAMES,
    AmplitudeFunction,
    amplitude_function_from_dict,
    builtin_amplitude_function,
    compile_state_prep,
    generate_random_amps,
    load_amplitude_function,
    prepared_state,
)
from .statevector import (
    GateOp,
    QuantumState,
    apply_gate,
    apply_projector_controlled,
    basis_state,
    hadamard,
    inner_product,
    pauli_x,
    probability_of,
    ry,
    rz,
    sample_measurements,
)

__version__ = "0.1.0"

__all__ = [
    "AmplificationPlan",
    "AmplitudeFunction",
    "BUILTIN_NAMES",
    "Circuit",
    "ClaimCheck",
    "DegenerateTargetError",
    "EstimationReport",
    "GateOp",
    "NormalizationError",
    "NullStarvationError",
    "OracleResult",
    "QuantumState",
    "QubitLayout",
    "ReferencePoint",
    "ReferencePointError",
    "SDecomposition",
    "amplify",
    "amplitude_function_from_dict",
    "apply_gate",
    "apply_projector_controlled",
    "basis_state",
    "build_s_circuit",
    "builtin_amplitude_function",
    "classical_mean",
    "classify_counts",
    "compile_state_prep",
    "decompose_s",
    "exact_ratio",
    "generate_random_amps",
    "grover_iterate",
    "hadamard",
    "inner_product",
    "load_amplitude_function",
    "pauli_x",
    "plan_amplification",
    "prepared_state",
    "probability_of",
    "ry",
    "rz",
    "sample_measurements",
    "sampled_estimate",
    "suggest_reference",
    "verify_claim",
]
