"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.  Criterion 8's envelope-fill target is known to be out of
reach for plain uniform sampling at 10^6 draws (see its docstring); it is
asserted as stated and fails honestly rather than being loosened.
"""

import math
import os
import time

import numpy as np

from pumplimit import (
    SweepConfig,
    apply_channel,
    build_density_matrix,
    build_density_matrix_oracle,
    concurrence,
    concurrence_many,
    construct_max_entangled_state,
    embed_pump,
    is_majorized_by,
    is_two_d,
    random_mixed_unitary_channel,
    run_sweep,
    saturating_config,
    sweep_to_csv,
    unitary_max_concurrence,
    verify_bounds,
)
from pumplimit.scheme import SchemeParams
from pumplimit.sweep import DEFAULT_RANGES
from oracles import (
    basis_projector,
    bell_phi,
    bell_psi,
    random_density,
    random_spectrum,
    random_unitary_stack,
    werner,
)

SEED = 20250808


def _report(num, label, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {label}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def test_criterion_1_general_bound_at_scale():
    t0 = time.time()
    records = run_sweep(SweepConfig(n_samples=100_000, seed=SEED, mode="general"))
    elapsed = time.time() - t0
    report = verify_bounds(records)
    over = sum(r.concurrence > (1.0 + r.params.pump_p) / 2.0 + 1e-9 for r in records)
    _report(
        1,
        "general bound C <= (1+P)/2 + 1e-9 over 1e5 samples",
        report.violations == 0 and over == 0 and elapsed < 10.0,
        f"violations={report.violations}, elapsed={elapsed:.2f}s",
    )


def test_criterion_2_two_level_bound_at_scale():
    records = run_sweep(SweepConfig(n_samples=100_000, seed=SEED + 1, mode="two_d"))
    over = sum(r.concurrence > r.params.pump_p + 1e-9 for r in records)
    not_two_d = 0
    for r in records:
        if not is_two_d(build_density_matrix(r.params), tol=1e-9):
            not_two_d += 1
    _report(
        2,
        "two-level bound C <= P + 1e-9 and two-level support over 1e5 samples",
        over == 0 and not_two_d == 0,
        f"bound breaches={over}, non-2D states={not_two_d}",
    )


def test_criterion_3_saturating_setting():
    worst = 0.0
    for k in range(11):
        pump_p = k / 10.0
        _, achieved = saturating_config(pump_p)
        worst = max(worst, abs(achieved - (1.0 + pump_p) / 2.0))
    _report(
        3,
        "saturating setting reaches (1+P)/2 within 1e-9 for P in {0, 0.1, ..., 1}",
        worst <= 1e-9,
        f"worst |C-(1+P)/2|={worst:.3e}",
    )


def test_criterion_4_orbit_maximum_tight_and_unbeaten():
    rng = np.random.default_rng(SEED + 2)
    worst_gap = 0.0
    for _ in range(1000):
        spec = random_spectrum(rng)
        rho = construct_max_entangled_state(spec)
        worst_gap = max(worst_gap, abs(concurrence(rho) - unitary_max_concurrence(spec)))
    tight = worst_gap <= 1e-9

    worst_excess = -math.inf
    for _ in range(1000):
        spec = random_spectrum(rng)
        bound = unitary_max_concurrence(spec)
        us = random_unitary_stack(rng, 100, 4)
        rhos = us @ np.diag(spec).astype(complex) @ np.conj(np.swapaxes(us, -1, -2))
        worst_excess = max(worst_excess, float(np.max(concurrence_many(rhos)) - bound))
    unbeaten = worst_excess <= 1e-9
    _report(
        4,
        "spectrum formula is attained (1e3 spectra) and never beaten (1e3 x 1e2 orbit points)",
        tight and unbeaten,
        f"worst attainment gap={worst_gap:.3e}, worst orbit excess={worst_excess:.3e}",
    )


def test_criterion_5_majorization_under_random_channels():
    rng = np.random.default_rng(SEED + 3)
    pumps = [embed_pump(random_density(rng, 2)).sigma for _ in range(100)]
    failures = 0
    for i in range(1000):
        ch = random_mixed_unitary_channel(1 + i % 8, seed=SEED + i)
        for sigma in pumps:
            out = apply_channel(ch, sigma)
            if not is_majorized_by(out, sigma, tol=1e-9).holds:
                failures += 1
    _report(
        5,
        "channel output majorized by the embedded pump (1e3 channels x 1e2 pumps)",
        failures == 0,
        f"failures={failures}",
    )


def test_criterion_6_element_formulas_match_moment_algebra():
    rng = np.random.default_rng(SEED + 4)
    worst = 0.0
    for _ in range(10_000):
        params = SchemeParams(
            pump_p=float(rng.uniform(*DEFAULT_RANGES["pump_p"])),
            t=float(rng.uniform(*DEFAULT_RANGES["t"])),
            theta1=float(rng.uniform(*DEFAULT_RANGES["theta1"])),
            theta2=float(rng.uniform(*DEFAULT_RANGES["theta2"])),
            alpha1=float(rng.uniform(*DEFAULT_RANGES["alpha1"])),
            alpha2=float(rng.uniform(*DEFAULT_RANGES["alpha2"])),
            mu=float(rng.uniform(*DEFAULT_RANGES["mu"])),
            gamma0=float(rng.uniform(*DEFAULT_RANGES["gamma0"])),
        )
        delta = np.max(np.abs(build_density_matrix(params) - build_density_matrix_oracle(params)))
        worst = max(worst, float(delta))
    _report(
        6,
        "analytic elements equal the moment-algebra oracle within 1e-12 over 1e4 draws",
        worst <= 1e-12,
        f"worst max-norm difference={worst:.3e}",
    )


def test_criterion_7_concurrence_reference_values():
    worst = 0.0
    for k in range(11):
        p = k / 10.0
        worst = max(worst, abs(concurrence(werner(p)) - max(0.0, (3.0 * p - 1.0) / 2.0)))
    werner_ok = worst <= 1e-10
    bells_ok = all(
        abs(concurrence(rho) - 1.0) <= 1e-10
        for rho in (bell_phi(), bell_phi(-1.0), bell_psi(), bell_psi(-1.0))
    )
    product_ok = concurrence(basis_projector(0)) == 0.0 and concurrence(basis_projector(1)) == 0.0
    _report(
        7,
        "Werner family matches max{0,(3p-1)/2} within 1e-10; Bell -> 1, product -> 0",
        werner_ok and bells_ok and product_ok,
        f"worst Werner error={worst:.3e}",
    )


def test_criterion_8_envelope_coverage_at_one_million():
    """Envelope fill of the general sweep at n = 10^6.

    Known limitation, asserted as stated instead of being loosened: with
    plain uniform independent sampling the probability of a draw landing
    within 0.05 of the concurrence ceiling is ~2.5e-6 in the middle pump-P
    deciles (measured), so 1e6 samples leave per-decile gaps of ~0.07-0.11.
    Matching figure-style envelope fill at 0.05 needs roughly 2e7 uniform
    samples or a non-uniform sampling strategy, both outside this harness's
    runtime budget.  The runtime half of the criterion holds comfortably.
    """
    t0 = time.time()
    report = sweep_to_csv(
        SweepConfig(n_samples=1_000_000, seed=SEED + 5, workers=4), os.devnull
    )
    elapsed = time.time() - t0
    mids = np.arange(10) / 10.0 + 0.05
    gaps = np.abs(report.decile_max - (1.0 + mids) / 2.0)
    worst = float(np.max(gaps))
    _report(
        8,
        "1e6-sample sweep fills each P-decile to within 0.05 of (1+P)/2 in under 2 min",
        report.violations == 0 and elapsed < 120.0 and worst <= 0.05,
        f"violations={report.violations}, elapsed={elapsed:.1f}s, worst decile gap={worst:.3f}",
    )


def test_criterion_9_csv_bytes_identical_across_workers(tmp_path):
    digests = []
    for workers in (1, 2, 8):
        path = tmp_path / f"workers{workers}.csv"
        sweep_to_csv(SweepConfig(n_samples=20_000, seed=SEED + 6, workers=workers), path)
        digests.append(path.read_bytes())
        path.unlink()
    _report(
        9,
        "CSV bytes identical for worker counts 1, 2, 8",
        digests[0] == digests[1] == digests[2],
        f"sizes={[len(d) for d in digests]}",
    )
