"""Batch experiment runner.

Modes:
  verify-claim   simulate the start state and report how far its two
                 target amplitudes sit from mean/sqrt(2) and A(y)/sqrt(2)
  exact          classical oracle next to the exact simulated ratio
  sample         full amplified sampling run (EstimationReport JSON)
  scaling-sweep  (n, target_prob, j_opt, predicted_success) rows for the
                 uniform table over n = 2..N, plus a CSV alongside

Exit codes: 0 ok; 2 invalid input (bad JSON, wrong vector length,
non-normalized table); 3 estimation failure (null starvation, zero
reference amplitude, degenerate target).

The environment variable QMEAN_THREADS, when set, caps statevector
parallelism; the bundled backend runs single-threaded either way, so any
positive cap is honored as-is.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    DegenerateTargetError,
    NullStarvationError,
    ReferencePointError,
)
from .estimator import classical_mean, exact_ratio, sampled_estimate, suggest_reference
from .grover import plan_amplification
from .mean_circuit import ReferencePoint, build_s_circuit, decompose_s, verify_claim
from .state_prep import (
    BUILTIN_NAMES,
    AmplitudeFunction,
    builtin_amplitude_function,
    compile_state_prep,
    generate_random_amps,
    load_amplitude_function,
)
from .statevector import basis_state, probability_of

MODES = ("verify-claim", "exact", "sample", "scaling-sweep")

CLAIM_TOL = 1e-10


@dataclass
class ExperimentConfig:
    mode: str
    n: int
    input_path: str | None = None
    builtin: str | None = None
    random_seed: int | None = None
    y: str = "auto"
    shots: int = 100_000
    seed: int = 0
    out: str | None = None

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.mode == "scaling-sweep":
            if self.n < 3:
                raise ValueError("scaling-sweep needs n >= 3 (rows run from n=2)")
            return
        sources = [self.input_path, self.builtin, self.random_seed]
        if sum(s is not None for s in sources) != 1:
            raise ValueError(
                "exactly one amplitude source is required: --input, --builtin "
                "or --random-seed"
            )
        if self.builtin is not None and self.builtin not in BUILTIN_NAMES:
            raise ValueError(
                f"builtin must be one of {BUILTIN_NAMES}, got {self.builtin!r}"
            )
        if self.mode == "sample" and self.shots < 1:
            raise ValueError(f"shots must be >= 1, got {self.shots}")


def _read_thread_cap() -> int | None:
    raw = os.environ.get("QMEAN_THREADS")
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"QMEAN_THREADS must be a positive integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"QMEAN_THREADS must be a positive integer, got {raw!r}")
    return cap


def _load_amps(config: ExperimentConfig) -> tuple[AmplitudeFunction, dict]:
    if config.input_path is not None:
        amps = load_amplitude_function(config.input_path)
        if amps.n != config.n:
            raise ValueError(
                f"input file holds an n={amps.n} table but --n is {config.n}"
            )
        return amps, {"kind": "file", "path": str(config.input_path)}
    if config.builtin is not None:
        return (
            builtin_amplitude_function(config.builtin, config.n),
            {"kind": "builtin", "name": config.builtin},
        )
    return (
        generate_random_amps(config.n, config.random_seed),
        {"kind": "random", "seed": config.random_seed},
    )


def _resolve_y(config: ExperimentConfig, amps: AmplitudeFunction) -> ReferencePoint:
    if config.y == "auto":
        return suggest_reference(amps)
    point = ReferencePoint.from_string(config.y)
    if len(point) != amps.n:
        raise ValueError(f"--y has {len(point)} bits, expected {amps.n}")
    return point


def _run_verify_claim(config: ExperimentConfig) -> dict:
    amps, source = _load_amps(config)
    y = _resolve_y(config, amps)
    check = verify_claim(amps, y)
    return {
        "mode": "verify-claim",
        "n": config.n,
        "y": y.as_string(),
        "source": source,
        "z1": [check.z1.real, check.z1.imag],
        "z0": [check.z0.real, check.z0.imag],
        "expected_z1": [check.expected_z1.real, check.expected_z1.imag],
        "expected_z0": [check.expected_z0.real, check.expected_z0.imag],
        "z1_error": check.z1_error,
        "z0_error": check.z0_error,
        "tolerance": CLAIM_TOL,
        "passed": check.z1_error < CLAIM_TOL and check.z0_error < CLAIM_TOL,
    }


def _run_exact(config: ExperimentConfig) -> dict:
    amps, source = _load_amps(config)
    y = _resolve_y(config, amps)
    oracle = classical_mean(amps, y)
    circ, layout = build_s_circuit(amps.n, compile_state_prep(amps), y)
    state = circ.apply_to(basis_state(layout.num_qubits, 0))
    dec = decompose_s(state, layout)
    ratio = exact_ratio(state, layout)
    report = {
        "mode": "exact",
        "n": config.n,
        "y": y.as_string(),
        "source": source,
        "oracle": oracle.to_dict(),
        "simulation": {
            "z1": [dec.z1.real, dec.z1.imag],
            "z0": [dec.z0.real, dec.z0.imag],
            "target_prob": dec.target_prob,
            "chi_sq_norm": dec.chi_sq_norm,
            "exact_ratio": ratio,
        },
        "ratio_abs_error": (
            abs(ratio - oracle.magnitude_ratio)
            if oracle.magnitude_ratio is not None
            else None
        ),
        "note": "complex mean values come from the classical oracle and the "
        "exact simulator only; sampling recovers just the magnitude ratio",
    }
    return report


def _run_sample(config: ExperimentConfig) -> dict:
    amps, source = _load_amps(config)
    y = _resolve_y(config, amps)
    report = sampled_estimate(amps, y, config.shots, config.seed)
    payload = {"mode": "sample", "source": source}
    payload.update(report.to_dict())
    return payload


def _run_scaling_sweep(config: ExperimentConfig) -> dict:
    rows = []
    for n in range(2, config.n + 1):
        amps = builtin_amplitude_function("uniform", n)
        circ, layout = build_s_circuit(n, compile_state_prep(amps), ReferencePoint.zero(n))
        state = circ.apply_to(basis_state(layout.num_qubits, 0))
        target_prob = probability_of(state, [(layout.omega, 0)])
        plan = plan_amplification(target_prob)
        rows.append(
            {
                "n": n,
                "target_prob": target_prob,
                "j_opt": plan.j_opt,
                "predicted_success": plan.predicted_success,
            }
        )
    ns = np.array([row["n"] for row in rows], dtype=float)
    log_j = np.log2([max(row["j_opt"], 1) for row in rows])
    slope = float(np.polyfit(ns, log_j, 1)[0])
    return {
        "mode": "scaling-sweep",
        "n_min": 2,
        "n_max": config.n,
        "rows": rows,
        "log2_jopt_slope": slope,
    }


_RUNNERS = {
    "verify-claim": _run_verify_claim,
    "exact": _run_exact,
    "sample": _run_sample,
    "scaling-sweep": _run_scaling_sweep,
}


def _write_sweep_csv(path: Path, rows: list[dict]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["n", "target_prob", "j_opt", "predicted_success"]
        )
        writer.writeheader()
        writer.writerows(rows)


def run(config: ExperimentConfig) -> int:
    """Execute one experiment; returns the process exit code."""
    try:
        config.validate()
        _read_thread_cap()
        report = _RUNNERS[config.mode](config)
    except (NullStarvationError, ReferencePointError, DegenerateTargetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    text = json.dumps(report, indent=2)
    if config.out is None:
        print(text)
    else:
        out_path = Path(config.out)
        out_path.write_text(text + "\n", encoding="utf-8")
        if config.mode == "scaling-sweep":
            _write_sweep_csv(out_path.with_suffix(".csv"), report["rows"])
        print(f"wrote {out_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmean",
        description="Estimate the mean of a normalized amplitude table via "
        "Grover-style amplification, cross-checked against a brute-force oracle.",
    )
    parser.add_argument("--mode", required=True, choices=MODES)
    parser.add_argument("--n", type=int, required=True,
                        help="register size; for scaling-sweep, the largest n (rows run 2..n)")
    parser.add_argument("--input", dest="input_path", default=None,
                        help='amplitude JSON file: {"n": int, "amplitudes": [[re, im], ...]}')
    parser.add_argument("--builtin", default=None, choices=BUILTIN_NAMES,
                        help="use a named builtin table")
    parser.add_argument("--random-seed", dest="random_seed", type=int, default=None,
                        help="generate a random normalized table from this seed")
    parser.add_argument("--y", default="auto",
                        help='reference point: bits y_0..y_{n-1} (e.g. "010"), or "auto" '
                        "for the largest-|A| point")
    parser.add_argument("--shots", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=0,
                        help="measurement sampling seed (sample mode)")
    parser.add_argument("--out", default=None,
                        help="report path; JSON to stdout when omitted. scaling-sweep "
                        "also writes a .csv next to the JSON")
    return parser


def config_from_args(argv: list[str] | None = None) -> ExperimentConfig:
    args = build_parser().parse_args(argv)
    return ExperimentConfig(
        mode=args.mode,
        n=args.n,
        input_path=args.input_path,
        builtin=args.builtin,
        random_seed=args.random_seed,
        y=args.y,
        shots=args.shots,
        seed=args.seed,
        out=args.out,
    )


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(config_from_args(argv)))


if __name__ == "__main__":
    main()
