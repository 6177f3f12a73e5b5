"""Iteration count grows as sqrt(2^n) while the oracle sums 2^n terms.

For the uniform table the target probability is exactly 2^-n, so the
planned iteration count grows like (pi/4) * 2^(n/2). The sweep simulates
the start state at each size (the n=8 row already runs on 19 qubits) and
fits the slope of log2(j_opt) against n; 1/2 is the square-root law.
"""

import numpy as np

from qmean import (
    ReferencePoint,
    basis_state,
    build_s_circuit,
    builtin_amplitude_function,
    compile_state_prep,
    plan_amplification,
    probability_of,
)

ns = range(2, 9)
rows = []
print(f"{'n':>3} {'qubits':>7} {'target_prob':>13} {'j_opt':>6} {'predicted':>10} {'oracle terms':>13}")
for n in ns:
    amps = builtin_amplitude_function("uniform", n)
    circ, layout = build_s_circuit(n, compile_state_prep(amps), ReferencePoint.zero(n))
    state = circ.apply_to(basis_state(layout.num_qubits, 0))
    target = probability_of(state, [(layout.omega, 0)])
    plan = plan_amplification(target)
    rows.append((n, plan.j_opt))
    print(f"{n:>3} {layout.num_qubits:>7} {target:>13.8f} {plan.j_opt:>6} "
          f"{plan.predicted_success:>10.6f} {2**n:>13}")

slope = np.polyfit([r[0] for r in rows], np.log2([r[1] for r in rows]), 1)[0]
print(f"\nlog2(j_opt) slope per n: {slope:.4f}  (square-root scaling is 0.5)")
print("the CLI runs the same sweep up to n=10 and writes JSON + CSV:")
print("  qmean --mode scaling-sweep --n 10 --out sweep.json")
