"""Ordered lists of elementary gates, with execution, inversion and a
line-per-op text dump for debugging and golden tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .statevector import GateOp, QuantumState, _apply_op_inplace, _check_op_indices, _wrap


@dataclass
class Circuit:
    """A gate list on a fixed register.

    ``global_phase`` is metadata, never applied by execution: the intended
    state equals exp(1j * global_phase) times the state this circuit
    actually produces from |0...0>. It is unobservable downstream but lets
    exact-value checks cancel the phase.
    """

    num_qubits: int
    ops: list[GateOp] = field(default_factory=list)
    global_phase: float = 0.0

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError(f"num_qubits must be >= 1, got {self.num_qubits}")
        self.ops = list(self.ops)
        for op in self.ops:
            _check_op_indices(op, self.num_qubits)

    def __len__(self) -> int:
        return len(self.ops)

    def add(self, op: GateOp) -> None:
        _check_op_indices(op, self.num_qubits)
        self.ops.append(op)

    def extend(self, ops: Iterable[GateOp]) -> None:
        for op in ops:
            self.add(op)

    def inverse(self) -> Circuit:
        """Reversed circuit of daggered gates (undoes this circuit exactly)."""
        return Circuit(
            self.num_qubits,
            [op.dagger() for op in reversed(self.ops)],
            global_phase=-self.global_phase,
        )

    def apply_to(self, state: QuantumState) -> QuantumState:
        if state.num_qubits != self.num_qubits:
            raise ValueError(
                f"circuit acts on {self.num_qubits} qubits, state has {state.num_qubits}"
            )
        amps = state.amplitudes.copy()
        for op in self.ops:
            _apply_op_inplace(amps, self.num_qubits, op)
        return _wrap(self.num_qubits, amps)

    def dump(self) -> str:
        """One op per line: ``GATE target [+q|-q ...]``; ``-q`` marks a
        control that fires on |0>."""
        lines = []
        for op in self.ops:
            parts = [op.label, str(op.target)]
            parts.extend(f"{'+' if b else '-'}{q}" for q, b in op.controls)
            lines.append(" ".join(parts))
        return "\n".join(lines)
