"""Amplitude tables and their exact compilation into rotation circuits.

``compile_state_prep`` turns any normalized table of 2**n complex values
into a circuit of multiplexed RY/RZ rotations that prepares the matching
n-qubit state from |0...0>. The compilation is exact (up to a reported
global phase) and costs O(2**n) gates, which is fine at desk scale.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .circuits import Circuit
from .errors import NormalizationError
from .statevector import QuantumState, basis_state, ry, rz

NORMALIZATION_TOL = 1e-10

BUILTIN_NAMES = ("uniform", "point", "alternating-sign")


@dataclass(frozen=True, eq=False)
class AmplitudeFunction:
    """2**n complex values A(x) with unit 2-norm, indexed little-endian
    (bit j of the index is the value of x_j)."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        vals = np.array(self.values, dtype=np.complex128)
        if vals.ndim != 1 or vals.size != 1 << self.n:
            raise ValueError(
                f"amplitude table must hold exactly 2**{self.n} values, got {vals.size}"
            )
        total = float(np.sum(np.abs(vals) ** 2))
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise NormalizationError(
                f"amplitude table must satisfy sum |A(x)|^2 = 1 within "
                f"{NORMALIZATION_TOL}, got {total}"
            )
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "amplitudes": [[float(v.real), float(v.imag)] for v in self.values],
        }


def amplitude_function_from_dict(data: dict) -> AmplitudeFunction:
    """Parse the on-disk format {"n": int, "amplitudes": [[re, im], ...]}."""
    if not isinstance(data, dict) or "n" not in data or "amplitudes" not in data:
        raise ValueError('amplitude JSON must be an object with "n" and "amplitudes"')
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f'"n" must be a positive integer, got {n!r}')
    pairs = data["amplitudes"]
    if not isinstance(pairs, list) or len(pairs) != 1 << n:
        raise ValueError(
            f'"amplitudes" must list exactly 2**{n} [re, im] pairs, '
            f"got {len(pairs) if isinstance(pairs, list) else type(pairs).__name__}"
        )
    try:
        values = np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"every amplitude must be a [re, im] pair: {exc}") from exc
    return AmplitudeFunction(n, values)


def load_amplitude_function(path: str | Path) -> AmplitudeFunction:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return amplitude_function_from_dict(data)


def builtin_amplitude_function(name: str, n: int) -> AmplitudeFunction:
    """Named test tables: uniform, point (all weight at x=0), alternating-sign."""
    dim = 1 << n
    if name == "uniform":
        values = np.full(dim, 2.0 ** (-n / 2.0), dtype=np.complex128)
    elif name == "point":
        values = np.zeros(dim, dtype=np.complex128)
        values[0] = 1.0
    elif name == "alternating-sign":
        signs = np.where(np.arange(dim) % 2 == 0, 1.0, -1.0)
        values = signs * 2.0 ** (-n / 2.0)
    else:
        raise ValueError(f"unknown builtin {name!r}, expected one of {BUILTIN_NAMES}")
    return AmplitudeFunction(n, values)


def generate_random_amps(n: int, seed: int) -> AmplitudeFunction:
    """Random table: i.i.d. standard-normal real and imaginary parts,
    normalized. Deterministic per (n, seed)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    values = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    values /= np.linalg.norm(values)
    return AmplitudeFunction(n, values)


def _pattern_controls(pattern: int, width: int) -> tuple[tuple[int, int], ...]:
    return tuple((j, (pattern >> j) & 1) for j in range(width))


def compile_state_prep(amps: AmplitudeFunction) -> Circuit:
    """Exact preparation circuit for ``amps``.

    Magnitudes first: for each qubit k, an RY on k multiplexed over every
    setting of qubits 0..k-1, its angle fixed by the conditional weight of
    bit k within that branch (zero-weight branches get angle 0, so sparse
    tables never divide by zero). Then the complex phases as multiplexed
    RZ gates; the leftover overall phase is reported via
    ``Circuit.global_phase`` rather than corrected in-circuit.
    """
    n = amps.n
    circ = Circuit(n)

    probs = np.abs(amps.values) ** 2
    for k in range(n):
        # branch[b, p] = total weight with bit k = b and low bits = p
        branch = probs.reshape(-1, 2, 1 << k).sum(axis=0)
        root = np.sqrt(branch)
        for p in range(1 << k):
            theta = 2.0 * math.atan2(root[1, p], root[0, p])
            if theta != 0.0:
                circ.add(ry(theta, k, _pattern_controls(p, k)))

    phases = np.angle(amps.values)
    if np.any(phases != 0.0):
        residual = phases
        plan = []
        for k in range(n - 1, -1, -1):
            half = residual.reshape(2, 1 << k)
            plan.append((k, half[1] - half[0]))
            residual = 0.5 * (half[0] + half[1])
        for k, diffs in plan:
            for p in range(1 << k):
                theta = float(diffs[p])
                if theta != 0.0:
                    circ.add(rz(theta, k, _pattern_controls(p, k)))
        circ.global_phase = float(residual[0])
    return circ


def prepared_state(circ: Circuit, n: int) -> QuantumState:
    """Execute ``circ`` on |0...0> over n qubits."""
    if circ.num_qubits != n:
        raise ValueError(f"circuit acts on {circ.num_qubits} qubits, expected {n}")
    return circ.apply_to(basis_state(n, 0))
