"""Watch amplification rotate the state toward the omega=0 target.

Prints P(omega=0) against the sin^2((2j+1)*theta) law for every step up
to twice the planned count, together with the conditional count ratio,
which stays pinned at |z1/z0|^2 the whole way: the two hypotheses are
amplified at exactly the same rate, phases never enter.
"""

import math

from qmean import (
    basis_state,
    build_s_circuit,
    compile_state_prep,
    decompose_s,
    generate_random_amps,
    grover_iterate,
    plan_amplification,
    probability_of,
    suggest_reference,
)

n = 4
amps = generate_random_amps(n, seed=11)
y = suggest_reference(amps)

circ, layout = build_s_circuit(n, compile_state_prep(amps), y)
state = circ.apply_to(basis_state(layout.num_qubits, 0))
dec = decompose_s(state, layout)
target = probability_of(state, [(layout.omega, 0)])
plan = plan_amplification(target)

print(f"n={n}, y={y.as_string()}, target probability {target:.6f}")
print(f"theta = {plan.theta:.6f}, planned steps = {plan.j_opt}, "
      f"predicted success = {plan.predicted_success:.6f}")
print(f"fixed conditional ratio |z1/z0|^2 = {abs(dec.z1 / dec.z0) ** 2:.6f}\n")

print(f"{'j':>3} {'P(omega=0)':>12} {'sin^2 law':>12} {'cond. ratio':>12}")
for j in range(2 * plan.j_opt + 1):
    p_good = probability_of(state, [(layout.omega, 0)])
    law = math.sin((2 * j + 1) * plan.theta) ** 2
    p1 = probability_of(state, [(layout.gamma, 1), (layout.omega, 0)])
    p0 = probability_of(state, [(layout.gamma, 0), (layout.omega, 0)])
    marker = "  <- planned stop" if j == plan.j_opt else ""
    print(f"{j:>3} {p_good:>12.8f} {law:>12.8f} {p1 / p0:>12.8f}{marker}")
    state = grover_iterate(state, circ, layout)
