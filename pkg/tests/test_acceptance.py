"""Acceptance suite: every exit criterion at its stated tolerance, one
printed PASS/FAIL line per criterion (run with ``pytest -s`` to see them)."""

import json
import math
import time

import numpy as np
import pytest

from qmean import (
    AmplitudeFunction,
    NullStarvationError,
    ReferencePoint,
    ReferencePointError,
    amplify,
    basis_state,
    build_s_circuit,
    builtin_amplitude_function,
    classical_mean,
    compile_state_prep,
    decompose_s,
    exact_ratio,
    generate_random_amps,
    grover_iterate,
    plan_amplification,
    prepared_state,
    probability_of,
    sampled_estimate,
    suggest_reference,
    verify_claim,
)
from qmean.cli import ExperimentConfig, run


def _criterion(num: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"[criterion {num}] {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def claim_corpus():
    """100 random tables per n in 1..6 with y = 0^n: worst claim errors and
    worst exact-vs-oracle ratio error, shared by criteria 1 and 2."""
    worst_z1 = worst_z0 = worst_ratio = 0.0
    for n in range(1, 7):
        for i in range(100):
            amps = generate_random_amps(n, 1000 * n + i)
            y = ReferencePoint.zero(n)
            check = verify_claim(amps, y)
            worst_z1 = max(worst_z1, check.z1_error)
            worst_z0 = max(worst_z0, check.z0_error)
            circ, layout = build_s_circuit(n, compile_state_prep(amps), y)
            state = circ.apply_to(basis_state(layout.num_qubits, 0))
            oracle = classical_mean(amps, y)
            worst_ratio = max(
                worst_ratio, abs(exact_ratio(state, layout) - oracle.magnitude_ratio)
            )
    return worst_z1, worst_z0, worst_ratio


def test_criterion_1_claim_reproduction(claim_corpus):
    worst_z1, worst_z0, _ = claim_corpus
    ok = worst_z1 < 1e-10 and worst_z0 < 1e-10
    _criterion(
        1,
        "claim reproduction over 600 random tables",
        ok,
        f"worst z1 err {worst_z1:.2e}, worst z0 err {worst_z0:.2e}",
    )


def test_criterion_2_ratio_law(claim_corpus):
    _, _, worst_ratio = claim_corpus
    worst_shifted = 0.0
    count = 0
    for i in range(20):
        n = 3 + (i % 2)
        amps = generate_random_amps(n, 7700 + i)
        rng = np.random.default_rng(50 + i)
        while True:
            idx = int(rng.integers(1, 1 << n))
            if abs(amps.values[idx]) > 0.01 * 2.0 ** (-n / 2):
                break
        y = ReferencePoint.from_index(idx, n)
        circ, layout = build_s_circuit(n, compile_state_prep(amps), y)
        state = circ.apply_to(basis_state(layout.num_qubits, 0))
        oracle = classical_mean(amps, y)
        worst_shifted = max(
            worst_shifted, abs(exact_ratio(state, layout) - oracle.magnitude_ratio)
        )
        count += 1
    ok = worst_ratio < 1e-10 and worst_shifted < 1e-10 and count == 20
    _criterion(
        2,
        "count-ratio law, incl. 20 shifted reference points",
        ok,
        f"worst ratio err {worst_ratio:.2e}, shifted {worst_shifted:.2e}",
    )


def test_criterion_3_rotation_law_and_ratio_invariance():
    worst_rot = worst_ratio = 0.0
    for n in range(1, 6):
        for i in range(2):
            amps = generate_random_amps(n, 3000 * n + i)
            y = suggest_reference(amps)
            circ, layout = build_s_circuit(n, compile_state_prep(amps), y)
            state = circ.apply_to(basis_state(layout.num_qubits, 0))
            dec = decompose_s(state, layout)
            want_ratio = abs(dec.z1 / dec.z0) ** 2
            plan = plan_amplification(probability_of(state, [(layout.omega, 0)]))
            for j in range(2 * plan.j_opt + 1):
                prob = probability_of(state, [(layout.omega, 0)])
                worst_rot = max(
                    worst_rot, abs(prob - math.sin((2 * j + 1) * plan.theta) ** 2)
                )
                p1 = probability_of(state, [(layout.gamma, 1), (layout.omega, 0)])
                p0 = probability_of(state, [(layout.gamma, 0), (layout.omega, 0)])
                worst_ratio = max(worst_ratio, abs(p1 / p0 - want_ratio))
                state = grover_iterate(state, circ, layout)
    ok = worst_rot < 1e-10 and worst_ratio < 1e-9
    _criterion(
        3,
        "rotation law and conditional-ratio invariance",
        ok,
        f"worst rotation err {worst_rot:.2e}, worst ratio err {worst_ratio:.2e}",
    )


def test_criterion_4_deterministic_showcase():
    amps = builtin_amplitude_function("uniform", 2)
    circ, layout = build_s_circuit(2, compile_state_prep(amps), ReferencePoint.zero(2))
    state = circ.apply_to(basis_state(layout.num_qubits, 0))
    target_prob = probability_of(state, [(layout.omega, 0)])
    plan = plan_amplification(target_prob)
    final_prob = probability_of(amplify(circ, layout, plan.j_opt), [(layout.omega, 0)])
    ok = (
        abs(target_prob - 0.25) < 1e-10
        and plan.j_opt == 1
        and abs(final_prob - 1.0) < 1e-10
    )
    _criterion(
        4,
        "n=2 uniform showcase (target 0.25, one step to certainty)",
        ok,
        f"target_prob {target_prob:.12f}, j_opt {plan.j_opt}, final {final_prob:.12f}",
    )


def test_criterion_5_iteration_scaling(tmp_path):
    out = tmp_path / "sweep.json"
    started = time.monotonic()
    code = run(ExperimentConfig(mode="scaling-sweep", n=10, out=str(out)))
    elapsed = time.monotonic() - started
    report = json.loads(out.read_text())
    slope = report["log2_jopt_slope"]
    rows = report["rows"]
    ok = (
        code == 0
        and [row["n"] for row in rows] == list(range(2, 11))
        and abs(slope - 0.5) <= 0.05
        and elapsed < 60.0
    )
    _criterion(
        5,
        "sqrt-size iteration scaling over n=2..10",
        ok,
        f"slope {slope:.4f}, elapsed {elapsed:.1f}s",
    )


def test_criterion_6_sampled_estimator_soundness():
    inside = 0
    for i in range(100):
        amps = generate_random_amps(4, 9000 + i)
        y = suggest_reference(amps)
        report = sampled_estimate(amps, y, 1_000_000, 5000 + i)
        truth = abs(classical_mean(amps, y).mean)
        if report.ci_low <= truth <= report.ci_high:
            inside += 1

    shot_grid = [10**3, 10**4, 10**5, 10**6]
    slopes = []
    for case_seed in (21, 22, 23):
        amps = generate_random_amps(4, case_seed)
        y = suggest_reference(amps)
        widths = [
            (lambda r: r.ci_high - r.ci_low)(
                sampled_estimate(amps, y, shots, 400 + k)
            )
            for k, shots in enumerate(shot_grid)
        ]
        slopes.append(
            float(np.polyfit(np.log10(shot_grid), np.log10(widths), 1)[0])
        )
    ok = inside >= 93 and all(abs(s + 0.5) <= 0.1 for s in slopes)
    _criterion(
        6,
        "95% CI coverage and 1/sqrt(shots) width shrinkage",
        ok,
        f"covered {inside}/100, width slopes {[round(s, 3) for s in slopes]}",
    )


def test_criterion_7_failure_mode_detection():
    values = np.full(8, 1.0, dtype=complex)
    values[0] = 1e-3
    values /= np.linalg.norm(values)
    amps = AmplitudeFunction(3, values)
    y0 = ReferencePoint.zero(3)

    circ, layout = build_s_circuit(3, compile_state_prep(amps), y0)
    state = circ.apply_to(basis_state(layout.num_qubits, 0))
    dec = decompose_s(state, layout)
    lopsided = abs(dec.z0) ** 2 / abs(dec.z1) ** 2 < 1e-4

    flagged = False
    try:
        flagged = sampled_estimate(amps, y0, 1_000_000, 77).comparable_size_warning
    except NullStarvationError as exc:
        flagged = exc.comparable_size_warning

    point = builtin_amplitude_function("point", 2)
    raised = False
    try:
        sampled_estimate(point, ReferencePoint.from_string("11"), 1000, 0)
    except ReferencePointError:
        raised = True
    suggestion = suggest_reference(point)
    rescue = sampled_estimate(point, suggestion, 100_000, 7)
    usable = abs(rescue.mean_magnitude_estimate - 0.25) < 0.01

    ok = lopsided and flagged and raised and usable
    _criterion(
        7,
        "null starvation flag and zero-reference recovery",
        ok,
        f"lopsided {lopsided}, flagged {flagged}, raised {raised}, usable {usable}",
    )


def test_criterion_8_compiler_fidelity():
    worst = 1.0
    for n in range(1, 7):
        rng = np.random.default_rng(300 + n)
        for i in range(100):
            v = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
            if i % 10 == 0 and n > 1:  # degenerate zero-branch inputs
                kill = rng.choice(1 << n, size=int(rng.integers(1, 1 << n)), replace=False)
                v[kill] = 0.0
            v /= np.linalg.norm(v)
            amps = AmplitudeFunction(n, v)
            out = prepared_state(compile_state_prep(amps), n)
            worst = min(worst, abs(np.vdot(amps.values, out.amplitudes)))
    ok = worst >= 1 - 1e-12
    _criterion(
        8,
        "state-prep round-trip fidelity over 600 tables",
        ok,
        f"worst fidelity deficit {1 - worst:.2e}",
    )
