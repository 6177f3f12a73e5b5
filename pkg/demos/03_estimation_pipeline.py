"""End-to-end estimation: counts in, |mean| out.

Runs the full pipeline (compile, build, amplify, measure) at increasing
shot counts and compares the sampled |mean| estimate and its 95% interval
against the brute-force oracle. Also shows the two failure modes: a zero
reference amplitude and a starved null branch.
"""

import numpy as np

from qmean import (
    AmplitudeFunction,
    NullStarvationError,
    ReferencePoint,
    ReferencePointError,
    builtin_amplitude_function,
    classical_mean,
    generate_random_amps,
    sampled_estimate,
    suggest_reference,
)

amps = generate_random_amps(4, seed=2)
y = suggest_reference(amps)
truth = abs(classical_mean(amps, y).mean)
print(f"n=4 random table, y={y.as_string()}, true |mean| = {truth:.6f}\n")

print(f"{'shots':>9} {'estimate':>10} {'95% interval':>24} {'discarded':>10}")
for k, shots in enumerate((10**3, 10**4, 10**5, 10**6)):
    rep = sampled_estimate(amps, y, shots, seed=100 + k)
    ci = f"[{rep.ci_low:.6f}, {rep.ci_high:.6f}]"
    print(f"{shots:>9} {rep.mean_magnitude_estimate:>10.6f} {ci:>24} {rep.discarded:>10}")

print("\nfailure mode 1: reference amplitude is zero")
point = builtin_amplitude_function("point", 2)
try:
    sampled_estimate(point, ReferencePoint.from_string("11"), 1000, 0)
except ReferencePointError as exc:
    print(f"  ReferencePointError: {exc}")
rescue = sampled_estimate(point, suggest_reference(point), 100_000, 7)
print(f"  retried with suggested y={rescue.y}: estimate {rescue.mean_magnitude_estimate:.4f}")

print("\nfailure mode 2: null events too rare (mean >> reference)")
values = np.full(8, 1.0, dtype=complex)
values[0] = 1e-3
values /= np.linalg.norm(values)
lopsided = AmplitudeFunction(3, values)
try:
    rep = sampled_estimate(lopsided, ReferencePoint.zero(3), 1_000_000, 77)
    print(f"  report flagged comparable_size_warning={rep.comparable_size_warning}, "
          f"n0={rep.n0} of {rep.shots}")
except NullStarvationError as exc:
    print(f"  NullStarvationError (flag={exc.comparable_size_warning}): {exc}")
