"""Walk through the start-state construction for one random table.

Builds the (2n+3)-qubit start state for a random normalized amplitude
table, reads off its two surviving omega=0 amplitudes, and checks them
against the closed forms mean/sqrt(2) and A(y)/sqrt(2) computed by the
classical oracle.
"""

import numpy as np

from qmean import (
    ReferencePoint,
    basis_state,
    build_s_circuit,
    classical_mean,
    compile_state_prep,
    decompose_s,
    generate_random_amps,
    verify_claim,
)

n = 3
amps = generate_random_amps(n, seed=12)
y = ReferencePoint.zero(n)

print(f"random table, n={n}:")
for i, v in enumerate(amps.values):
    print(f"  A({i:0{n}b}) = {v:.4f}")

oracle = classical_mean(amps, y)
print(f"\nclassical mean      : {oracle.mean:.6f}")
print(f"reference A(y={y.as_string()}) : {oracle.ref_amplitude:.6f}")
print(f"|mean / A(y)|       : {oracle.magnitude_ratio:.6f}")

prep = compile_state_prep(amps)
circ, layout = build_s_circuit(n, prep, y)
print(f"\nstart-state circuit: {len(circ)} gates on {layout.num_qubits} qubits")
print("last three ops of the dump:")
for line in circ.dump().splitlines()[-3:]:
    print(f"  {line}")

state = circ.apply_to(basis_state(layout.num_qubits, 0))
dec = decompose_s(state, layout)
phase = np.exp(1j * circ.global_phase)
print(f"\nsimulated z1 (phase-corrected): {dec.z1 * phase:.10f}")
print(f"expected  mean/sqrt(2)        : {oracle.mean / np.sqrt(2):.10f}")
print(f"simulated z0 (phase-corrected): {dec.z0 * phase:.10f}")
print(f"expected  A(y)/sqrt(2)        : {oracle.ref_amplitude / np.sqrt(2):.10f}")
print(f"weight outside the target     : {dec.chi_sq_norm:.6f}")

check = verify_claim(amps, y)
print(f"\nclaim errors: z1 {check.z1_error:.3e}, z0 {check.z0_error:.3e}")
