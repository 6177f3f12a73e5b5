"""Construction and readout of the start state that encodes a table's mean.

The start state lives on a (2n+3)-qubit register: the data register alpha
carries the prepared table state, a comparison register beta, a branch
flag gamma, a hypothesis tag mu0 and a success flag omega. Within the
omega=0 slice the state holds exactly two components: one whose amplitude
z1 is proportional to the table mean, and one whose amplitude z0 is
proportional to the amplitude at a chosen reference point y. Amplitude
amplification toward omega=0 then boosts both components at the same rate,
so the measured count ratio recovers |z1/z0| regardless of their phases.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .circuits import Circuit
from .state_prep import AmplitudeFunction, compile_state_prep
from .statevector import QuantumState, basis_state, hadamard, pauli_x, probability_of

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class QubitLayout:
    """Register map on m = 2n+3 qubits: alpha = 0..n-1, beta = n..2n-1,
    then gamma, mu0, omega."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")

    @property
    def alpha(self) -> tuple[int, ...]:
        return tuple(range(self.n))

    @property
    def beta(self) -> tuple[int, ...]:
        return tuple(range(self.n, 2 * self.n))

    @property
    def gamma(self) -> int:
        return 2 * self.n

    @property
    def mu0(self) -> int:
        return 2 * self.n + 1

    @property
    def omega(self) -> int:
        return 2 * self.n + 2

    @property
    def num_qubits(self) -> int:
        return 2 * self.n + 3


@dataclass(frozen=True)
class ReferencePoint:
    """Bit string y anchoring the null hypothesis; bits[j] is the bit of
    qubit j, so the basis index is sum(bits[j] << j)."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits:
            raise ValueError("reference point must have at least one bit")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"reference bits must be 0 or 1, got {self.bits}")

    @classmethod
    def zero(cls, n: int) -> ReferencePoint:
        return cls((0,) * n)

    @classmethod
    def from_index(cls, index: int, n: int) -> ReferencePoint:
        if not 0 <= index < 1 << n:
            raise ValueError(f"index {index} out of range for {n} bits")
        return cls(tuple((index >> j) & 1 for j in range(n)))

    @classmethod
    def from_string(cls, text: str) -> ReferencePoint:
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"reference string must be nonempty over 0/1, got {text!r}")
        return cls(tuple(int(c) for c in text))

    def __len__(self) -> int:
        return len(self.bits)

    @property
    def index(self) -> int:
        return sum(b << j for j, b in enumerate(self.bits))

    def as_string(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class SDecomposition:
    """The two target amplitudes of a start state plus the leftover
    omega=1 weight; |z1|^2 + |z0|^2 + chi_sq_norm = 1 for a unit state."""

    z1: complex
    z0: complex
    chi_sq_norm: float

    @property
    def target_prob(self) -> float:
        return abs(self.z1) ** 2 + abs(self.z0) ** 2


@dataclass(frozen=True)
class ClaimCheck:
    """Simulated target amplitudes against their closed-form values."""

    z1: complex
    z0: complex
    expected_z1: complex
    expected_z0: complex

    @property
    def z1_error(self) -> float:
        return abs(self.z1 - self.expected_z1)

    @property
    def z0_error(self) -> float:
        return abs(self.z0 - self.expected_z0)


def build_s_circuit(
    n: int, psi_prep: Circuit, y: ReferencePoint
) -> tuple[Circuit, QubitLayout]:
    """Start-state circuit on the (alpha, beta, gamma, mu0, omega) register.

    Gate order: prepare the table state on alpha; split into two branches
    by an H on mu0 copied onto gamma; in the gamma=1 branch apply H to every
    alpha and beta qubit (this turns the alpha=beta=0 component into the
    table mean); in the gamma=0 branch map alpha so its 0...0 component
    holds A(y); set omega; finally flip omega back down exactly on the
    alpha=beta=0...0 slice via one X with 2n zero-polarity controls.

    The returned circuit inherits ``psi_prep.global_phase``.
    """
    if psi_prep.num_qubits != n:
        raise ValueError(
            f"psi_prep acts on {psi_prep.num_qubits} qubits, expected {n}"
        )
    if len(y) != n:
        raise ValueError(f"reference point has {len(y)} bits, expected {n}")
    layout = QubitLayout(n)
    circ = Circuit(layout.num_qubits, global_phase=psi_prep.global_phase)
    circ.extend(psi_prep.ops)
    circ.add(hadamard(layout.mu0))
    circ.add(pauli_x(layout.gamma, [(layout.mu0, 1)]))
    for j in range(n):
        circ.add(hadamard(layout.alpha[j], [(layout.gamma, 1)]))
        circ.add(hadamard(layout.beta[j], [(layout.gamma, 1)]))
    for j, bit in enumerate(y.bits):
        if bit:
            circ.add(pauli_x(layout.alpha[j], [(layout.gamma, 0)]))
    circ.add(pauli_x(layout.omega))
    zero_controls = tuple((q, 0) for q in (*layout.alpha, *layout.beta))
    circ.add(pauli_x(layout.omega, zero_controls))
    return circ, layout


def decompose_s(state: QuantumState, layout: QubitLayout) -> SDecomposition:
    """Read off z1 (alpha=beta=0, gamma=mu0=1, omega=0), z0 (all zeros) and
    the total omega=1 weight."""
    if state.num_qubits != layout.num_qubits:
        raise ValueError(
            f"state has {state.num_qubits} qubits, layout needs {layout.num_qubits}"
        )
    z1_index = (1 << layout.gamma) | (1 << layout.mu0)
    z1 = complex(state.amplitudes[z1_index])
    z0 = complex(state.amplitudes[0])
    chi_sq_norm = probability_of(state, [(layout.omega, 1)])
    return SDecomposition(z1=z1, z0=z0, chi_sq_norm=chi_sq_norm)


def verify_claim(amps: AmplitudeFunction, y: ReferencePoint) -> ClaimCheck:
    """Compare the simulated start state against the closed forms
    z1 = mean/sqrt(2) and z0 = A(y)/sqrt(2), the mean coming from the
    classical brute-force oracle."""
    from .estimator import classical_mean  # circular: estimator drives this module

    prep = compile_state_prep(amps)
    circ, layout = build_s_circuit(amps.n, prep, y)
    state = circ.apply_to(basis_state(layout.num_qubits, 0))
    dec = decompose_s(state, layout)
    phase = cmath.exp(1j * circ.global_phase)
    oracle = classical_mean(amps, y)
    return ClaimCheck(
        z1=dec.z1 * phase,
        z0=dec.z0 * phase,
        expected_z1=oracle.mean / _SQRT2,
        expected_z0=oracle.ref_amplitude / _SQRT2,
    )
