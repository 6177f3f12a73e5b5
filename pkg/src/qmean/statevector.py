"""Dense statevector simulation with per-control-polarity elementary gates.

Amplitudes live in one contiguous complex128 array (interleaved
real/imaginary pairs in memory). A gate touches only the strided slices
selected by its control pattern, so applying a k-controlled gate to an
m-qubit state costs O(2^(m-k)).

Bit order is little-endian throughout: qubit 0 is the least significant
bit of a basis index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

UNITARITY_TOL = 1e-12
NORM_TOL = 1e-10

_H_MATRIX = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / math.sqrt(2.0)
_X_MATRIX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
_H_MATRIX.flags.writeable = False
_X_MATRIX.flags.writeable = False


class QuantumState:
    """Unit-norm vector of 2**num_qubits complex amplitudes.

    Instances are immutable from the caller's perspective: the amplitude
    array is read-only and every operation returns a new state.
    """

    __slots__ = ("num_qubits", "amplitudes")

    def __init__(self, amplitudes):
        arr = np.array(amplitudes, dtype=np.complex128)
        if arr.ndim != 1 or arr.size < 2 or arr.size & (arr.size - 1):
            raise ValueError(
                f"amplitude vector length must be 2**m with m >= 1, got {arr.size}"
            )
        norm = float(np.linalg.norm(arr))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state must have unit 2-norm, got {norm}")
        arr.flags.writeable = False
        self.num_qubits = arr.size.bit_length() - 1
        self.amplitudes = arr

    def __repr__(self) -> str:
        return f"QuantumState(num_qubits={self.num_qubits})"


def _wrap(num_qubits: int, amplitudes: np.ndarray) -> QuantumState:
    """Private constructor for freshly computed amplitude arrays; skips
    validation so non-unit intermediate values never leak out by accident."""
    state = object.__new__(QuantumState)
    amplitudes.flags.writeable = False
    state.num_qubits = num_qubits
    state.amplitudes = amplitudes
    return state


@dataclass(frozen=True, eq=False)
class GateOp:
    """One elementary operation: a 2x2 unitary on ``target``, optionally
    conditioned on control qubits holding required bits.

    A control pair (q, 0) fires on |0> (anti-control), (q, 1) on |1>.
    """

    matrix: np.ndarray
    target: int
    controls: tuple[tuple[int, int], ...] = ()
    label: str = "U"

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=np.complex128)
        if mat.shape != (2, 2):
            raise ValueError(f"gate matrix must be 2x2, got shape {mat.shape}")
        if float(np.max(np.abs(mat.conj().T @ mat - np.eye(2)))) > UNITARITY_TOL:
            raise ValueError("gate matrix must be unitary within 1e-12")
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)
        if self.target < 0:
            raise ValueError(f"target index must be >= 0, got {self.target}")
        ctrls = tuple((int(q), int(b)) for q, b in self.controls)
        for q, b in ctrls:
            if q < 0:
                raise ValueError(f"control index must be >= 0, got {q}")
            if b not in (0, 1):
                raise ValueError(f"control polarity must be 0 or 1, got {b}")
            if q == self.target:
                raise ValueError(f"target qubit {q} cannot also be a control")
        if len({q for q, _ in ctrls}) != len(ctrls):
            raise ValueError("control qubits must be pairwise distinct")
        object.__setattr__(self, "controls", ctrls)

    def qubits(self) -> tuple[int, ...]:
        return (self.target, *(q for q, _ in self.controls))

    def dagger(self) -> GateOp:
        mat = self.matrix.conj().T
        if np.array_equal(mat, self.matrix):
            label = self.label
        elif self.label.endswith("†"):
            label = self.label[:-1]
        else:
            label = self.label + "†"
        return GateOp(mat, self.target, self.controls, label)


def hadamard(target: int, controls: Iterable[tuple[int, int]] = ()) -> GateOp:
    return GateOp(_H_MATRIX, target, tuple(controls), "H")


def pauli_x(target: int, controls: Iterable[tuple[int, int]] = ()) -> GateOp:
    return GateOp(_X_MATRIX, target, tuple(controls), "X")


def ry(theta: float, target: int, controls: Iterable[tuple[int, int]] = ()) -> GateOp:
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    mat = np.array([[c, -s], [s, c]], dtype=np.complex128)
    return GateOp(mat, target, tuple(controls), f"RY({theta!r})")


def rz(theta: float, target: int, controls: Iterable[tuple[int, int]] = ()) -> GateOp:
    phase = np.exp(0.5j * theta)
    mat = np.array([[phase.conjugate(), 0.0], [0.0, phase]], dtype=np.complex128)
    return GateOp(mat, target, tuple(controls), f"RZ({theta!r})")


def basis_state(num_qubits: int, index: int) -> QuantumState:
    """Computational basis state |index> on num_qubits qubits."""
    if num_qubits < 1:
        raise ValueError(f"num_qubits must be >= 1, got {num_qubits}")
    dim = 1 << num_qubits
    if not 0 <= index < dim:
        raise ValueError(f"basis index must lie in [0, {dim}), got {index}")
    amps = np.zeros(dim, dtype=np.complex128)
    amps[index] = 1.0
    return _wrap(num_qubits, amps)


def _check_op_indices(op: GateOp, num_qubits: int) -> None:
    for q in op.qubits():
        if q >= num_qubits:
            raise ValueError(f"qubit index {q} out of range for {num_qubits} qubits")


def _apply_op_inplace(amps: np.ndarray, num_qubits: int, op: GateOp) -> None:
    """Multiply ``amps`` by the unitary extension of ``op``.

    The reshape below is a view, so the two half-slice updates write
    straight into the contiguous amplitude buffer.
    """
    m = num_qubits
    tensor = amps.reshape((2,) * m)  # axis a <-> qubit (m - 1 - a)
    if op.controls:
        sel: list[slice | int] = [slice(None)] * m
        for q, b in op.controls:
            sel[m - 1 - q] = b
        view = tensor[tuple(sel)]
        axis = (m - 1 - op.target) - sum(1 for q, _ in op.controls if q > op.target)
    else:
        view = tensor
        axis = m - 1 - op.target
    pair = np.moveaxis(view, axis, 0)
    u = op.matrix
    lo = pair[0].copy()
    hi = pair[1]
    pair[0] = u[0, 0] * lo + u[0, 1] * hi
    pair[1] = u[1, 0] * lo + u[1, 1] * hi


def apply_gate(state: QuantumState, op: GateOp) -> QuantumState:
    """Return ``op`` applied to ``state``; components whose control qubits
    miss the required bits pass through unchanged."""
    _check_op_indices(op, state.num_qubits)
    amps = state.amplitudes.copy()
    _apply_op_inplace(amps, state.num_qubits, op)
    return _wrap(state.num_qubits, amps)


def apply_projector_controlled(
    state: QuantumState,
    u: np.ndarray,
    target: int,
    zero_controls: Sequence[int],
) -> QuantumState:
    """Apply (1 - P) + u*P where P projects every qubit in ``zero_controls``
    onto |0>. Identical to a single gate with all-zero control polarities."""
    op = GateOp(u, target, tuple((q, 0) for q in zero_controls))
    return apply_gate(state, op)


def probability_of(
    state: QuantumState, constraints: Iterable[tuple[int, int]]
) -> float:
    """Total probability of basis states satisfying all (qubit, bit) pairs."""
    cons = [(int(q), int(b)) for q, b in constraints]
    m = state.num_qubits
    seen = set()
    for q, b in cons:
        if not 0 <= q < m:
            raise ValueError(f"qubit index {q} out of range for {m} qubits")
        if b not in (0, 1):
            raise ValueError(f"constraint bit must be 0 or 1, got {b}")
        if q in seen:
            raise ValueError(f"constraint qubits must be distinct, {q} repeats")
        seen.add(q)
    tensor = state.amplitudes.reshape((2,) * m)
    sel: list[slice | int] = [slice(None)] * m
    for q, b in cons:
        sel[m - 1 - q] = b
    view = tensor[tuple(sel)]
    return float(np.sum(np.abs(view) ** 2))


def sample_measurements(
    state: QuantumState, shots: int, seed: int
) -> dict[int, int]:
    """Draw ``shots`` full-register measurements; returns nonzero counts
    keyed by basis index.

    Uses a counter-based generator keyed on ``seed`` so concurrent
    estimation runs never share mutable RNG state; a fixed seed always
    reproduces the same counts.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    probs = np.abs(state.amplitudes) ** 2
    probs /= probs.sum()
    rng = np.random.Generator(np.random.Philox(seed))
    counts = rng.multinomial(shots, probs)
    (hit,) = np.nonzero(counts)
    return {int(i): int(counts[i]) for i in hit}


def inner_product(a: QuantumState, b: QuantumState) -> complex:
    """<a|b>, conjugate-linear in the first argument."""
    if a.num_qubits != b.num_qubits:
        raise ValueError(
            f"qubit counts differ: {a.num_qubits} vs {b.num_qubits}"
        )
    return complex(np.vdot(a.amplitudes, b.amplitudes))
