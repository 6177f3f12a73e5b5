"""Classical brute-force oracle and the two-hypothesis sampling estimator.

The oracle averages the amplitude table term by term in O(2**n) time; it
is the baseline every simulated quantity is checked against. The sampling
estimator builds the start state, amplifies it, measures, and recovers
|mean| = |A(y)| * sqrt(n1/n0) from the non-null/null count ratio. Only the
magnitude is recoverable from counts; the complex mean reported by the
oracle is a simulator-side diagnostic.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import NullStarvationError, ReferencePointError
from .grover import grover_iterate, plan_amplification
from .mean_circuit import (
    QubitLayout,
    ReferencePoint,
    build_s_circuit,
    decompose_s,
)
from .state_prep import AmplitudeFunction, compile_state_prep
from .statevector import (
    QuantumState,
    basis_state,
    probability_of,
    sample_measurements,
)

# two-sided 95% normal quantile
_Z95 = 1.959963984540054

# |z0|^2 below this multiple of |z1|^2 makes null events impractically rare
COMPARABLE_SIZE_RATIO = 1e-4

_NULL_PROB_FLOOR = 1e-300
_REFERENCE_TOL = 1e-12


@dataclass(frozen=True)
class OracleResult:
    """Exact mean and reference amplitude; magnitude_ratio is None when
    A(y) = 0 and the ratio is undefined."""

    mean: complex
    ref_amplitude: complex
    magnitude_ratio: float | None

    def to_dict(self) -> dict:
        return {
            "mean": [self.mean.real, self.mean.imag],
            "ref_amplitude": [self.ref_amplitude.real, self.ref_amplitude.imag],
            "magnitude_ratio": self.magnitude_ratio,
        }


@dataclass(frozen=True)
class EstimationReport:
    """Counts and derived estimates from one amplified sampling run."""

    n: int
    y: str
    seed: int
    shots: int
    n1: int
    n0: int
    discarded: int
    ratio_estimate: float
    mean_magnitude_estimate: float
    ci_low: float
    ci_high: float
    j_used: int
    predicted_success: float
    target_prob: float
    ref_magnitude: float
    comparable_size_warning: bool

    def to_dict(self) -> dict:
        return asdict(self)


def classical_mean(amps: AmplitudeFunction, y: ReferencePoint) -> OracleResult:
    """Brute-force mean 2**-n * sum A(x), summed in ascending index order
    so the result is bit-reproducible."""
    if len(y) != amps.n:
        raise ValueError(f"reference point has {len(y)} bits, expected {amps.n}")
    total = 0j
    for value in amps.values.tolist():
        total += value
    mean = total / (1 << amps.n)
    ref = complex(amps.values[y.index])
    ratio = abs(mean) / abs(ref) if ref != 0 else None
    return OracleResult(mean=mean, ref_amplitude=ref, magnitude_ratio=ratio)


def exact_ratio(state: QuantumState, layout: QubitLayout) -> float:
    """sqrt(P(gamma=1, omega=0) / P(gamma=0, omega=0)) from exact
    probabilities; invariant under amplification."""
    p1 = probability_of(state, [(layout.gamma, 1), (layout.omega, 0)])
    p0 = probability_of(state, [(layout.gamma, 0), (layout.omega, 0)])
    if p0 < _NULL_PROB_FLOOR:
        raise NullStarvationError(
            f"null-event probability {p0} is vanishingly small; the mean and "
            "the reference amplitude are not of comparable size",
            null_prob=p0,
        )
    return math.sqrt(p1 / p0)


def suggest_reference(amps: AmplitudeFunction) -> ReferencePoint:
    """The y maximizing |A(y)| (smallest index on ties); its magnitude is
    always at least 2**(-n/2)."""
    idx = int(np.argmax(np.abs(amps.values)))
    return ReferencePoint.from_index(idx, amps.n)


def _wilson_interval(successes: int, trials: int, z: float = _Z95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion; stays inside [0, 1]
    and returns a 0-anchored interval when successes = 0."""
    phat = successes / trials
    denom = 1.0 + z * z / trials
    center = (phat + z * z / (2.0 * trials)) / denom
    half = z * math.sqrt(phat * (1.0 - phat) / trials + z * z / (4.0 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def classify_counts(counts: dict[int, int], layout: QubitLayout) -> tuple[int, int, int]:
    """Split measured counts into (non-null, null, discarded): omega=1 shots
    are discarded, the rest split on the gamma bit."""
    n1 = n0 = discarded = 0
    for index, count in counts.items():
        if (index >> layout.omega) & 1:
            discarded += count
        elif (index >> layout.gamma) & 1:
            n1 += count
        else:
            n0 += count
    return n1, n0, discarded


def sampled_estimate(
    amps: AmplitudeFunction, y: ReferencePoint, shots: int, seed: int
) -> EstimationReport:
    """Full pipeline: build the start state, amplify with the planned
    iteration count, measure ``shots`` times, and estimate |mean| from the
    count ratio.

    The 95% interval comes from a Wilson score interval on the non-null
    fraction p = n1/(n1+n0), pushed through the monotone map
    r(p) = |A(y)| * sqrt(p/(1-p)).

    Raises ReferencePointError when A(y) is numerically zero and
    NullStarvationError when no null events arrive at all.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    if len(y) != amps.n:
        raise ValueError(f"reference point has {len(y)} bits, expected {amps.n}")
    ref_magnitude = abs(complex(amps.values[y.index]))
    if ref_magnitude <= _REFERENCE_TOL:
        suggestion = suggest_reference(amps)
        raise ReferencePointError(
            f"reference amplitude A(y) is zero at y={y.as_string()}; pick a point "
            f"with nonzero amplitude, e.g. y={suggestion.as_string()}"
        )

    prep = compile_state_prep(amps)
    circ, layout = build_s_circuit(amps.n, prep, y)
    start = circ.apply_to(basis_state(layout.num_qubits, 0))
    dec = decompose_s(start, layout)
    warning = abs(dec.z0) ** 2 < COMPARABLE_SIZE_RATIO * abs(dec.z1) ** 2

    plan = plan_amplification(probability_of(start, [(layout.omega, 0)]))
    final = start
    for _ in range(plan.j_opt):
        final = grover_iterate(final, circ, layout)
    counts = sample_measurements(final, shots, seed)
    n1, n0, discarded = classify_counts(counts, layout)
    if n0 == 0:
        raise NullStarvationError(
            f"no null events in {shots} shots ({n1} non-null); the mean and the "
            "reference amplitude are not of comparable size",
            n1=n1,
            comparable_size_warning=warning,
        )

    ratio = math.sqrt(n1 / n0)
    p_low, p_high = _wilson_interval(n1, n1 + n0)
    ci_low = ref_magnitude * math.sqrt(p_low / (1.0 - p_low))
    ci_high = ref_magnitude * math.sqrt(p_high / (1.0 - p_high))
    return EstimationReport(
        n=amps.n,
        y=y.as_string(),
        seed=seed,
        shots=shots,
        n1=n1,
        n0=n0,
        discarded=discarded,
        ratio_estimate=ratio,
        mean_magnitude_estimate=ref_magnitude * ratio,
        ci_low=ci_low,
        ci_high=ci_high,
        j_used=plan.j_opt,
        predicted_success=plan.predicted_success,
        target_prob=dec.target_prob,
        ref_magnitude=ref_magnitude,
        comparable_size_warning=warning,
    )
