"""Shared test helpers: independent dense-matrix oracles and state makers."""

from __future__ import annotations

import numpy as np

from qmean import GateOp, QuantumState

_I2 = np.eye(2, dtype=complex)
_P0 = np.array([[1, 0], [0, 0]], dtype=complex)
_P1 = np.array([[0, 0], [0, 1]], dtype=complex)


def kron_chain(factors_by_qubit: dict[int, np.ndarray], num_qubits: int) -> np.ndarray:
    """Kronecker product with qubit 0 as the least significant factor."""
    out = np.array([[1.0 + 0j]])
    for q in range(num_qubits - 1, -1, -1):
        out = np.kron(out, factors_by_qubit.get(q, _I2))
    return out


def dense_gate_matrix(op: GateOp, num_qubits: int) -> np.ndarray:
    """Full 2^m x 2^m matrix of a controlled gate, built from projectors:
    (1 - P) + U P with P the product of the required control projectors."""
    dim = 1 << num_qubits
    ctrl_factors = {q: (_P1 if b else _P0) for q, b in op.controls}
    proj = kron_chain(ctrl_factors, num_qubits)
    acted = kron_chain({**ctrl_factors, op.target: np.asarray(op.matrix)}, num_qubits)
    return (np.eye(dim, dtype=complex) - proj) + acted


def random_state(num_qubits: int, rng: np.random.Generator) -> QuantumState:
    v = rng.standard_normal(1 << num_qubits) + 1j * rng.standard_normal(1 << num_qubits)
    v /= np.linalg.norm(v)
    return QuantumState(v)


def random_unitary_2x2(rng: np.random.Generator) -> np.ndarray:
    m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(m)
    return q * (np.diag(r) / np.abs(np.diag(r)))
