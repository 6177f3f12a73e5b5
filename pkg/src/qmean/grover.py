"""Amplitude amplification toward the omega=0 subspace.

The target is "sufficient": only the omega qubit is constrained, so one
amplified distribution carries both hypothesis counts. Iterating
G = -(reflection about the start state) o (reflection about omega=0)
rotates the state by 2*theta per step inside the plane spanned by the
good and bad components, with theta = asin(sqrt(target_prob)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .circuits import Circuit
from .errors import DegenerateTargetError
from .mean_circuit import QubitLayout
from .statevector import QuantumState, _apply_op_inplace, _wrap, basis_state


@dataclass(frozen=True)
class AmplificationPlan:
    theta: float
    j_opt: int
    predicted_success: float


def plan_amplification(target_prob: float) -> AmplificationPlan:
    """Iteration schedule for a known target probability: j_opt maximizes
    sin^2((2j+1)*theta) over integers near pi/(4*theta) - 1/2."""
    if target_prob <= 0.0:
        raise DegenerateTargetError(
            f"target probability must be positive, got {target_prob}"
        )
    theta = math.asin(math.sqrt(min(target_prob, 1.0)))
    j_opt = max(0, round(math.pi / (4.0 * theta) - 0.5))
    predicted = math.sin((2 * j_opt + 1) * theta) ** 2
    return AmplificationPlan(theta=theta, j_opt=j_opt, predicted_success=predicted)


def grover_iterate(
    state: QuantumState, s_circuit: Circuit, layout: QubitLayout
) -> QuantumState:
    """One amplification step: negate every omega=0 component, then reflect
    about the start state (undo the start circuit, negate everything except
    |0...0>, redo it), then negate the overall sign."""
    m = s_circuit.num_qubits
    if state.num_qubits != m:
        raise ValueError(f"state has {state.num_qubits} qubits, circuit needs {m}")
    amps = state.amplitudes.copy()
    tensor = amps.reshape((2,) * m)
    sel: list[slice | int] = [slice(None)] * m
    sel[m - 1 - layout.omega] = 0
    tensor[tuple(sel)] *= -1.0
    for op in s_circuit.inverse().ops:
        _apply_op_inplace(amps, m, op)
    amps[1:] *= -1.0
    for op in s_circuit.ops:
        _apply_op_inplace(amps, m, op)
    amps *= -1.0
    return _wrap(m, amps)


def amplify(s_circuit: Circuit, layout: QubitLayout, j: int) -> QuantumState:
    """Start state followed by j amplification steps."""
    if j < 0:
        raise ValueError(f"iteration count must be >= 0, got {j}")
    state = s_circuit.apply_to(basis_state(s_circuit.num_qubits, 0))
    for _ in range(j):
        state = grover_iterate(state, s_circuit, layout)
    return state
