"""Exit criteria. Each test records one PASS/FAIL line shown in the terminal summary."""
import time

import numpy as np

from fefbound.bloch import decompose, reconstruct
from fefbound.distill import figure1_thresholds, reduction_criterion
from fefbound.fef import fef_two_qubit_bell, fef_two_qubit_kyfan, fef_upper_bound
from fefbound.generators import build_generator_basis, check_completeness, rotate_basis
from fefbound.linalg_core import random_orthogonal, random_unitary
from fefbound.oracle import OracleConfig, oracle_fef
from fefbound.state import (
    example_family_rho_x_fig1, local_unitary, max_entangled_projector, maximally_mixed, random_state)
from fefbound.tripartite import (
    WParams, concurrence_ab_c, random_tri_pure_state, reduced_ab, theorem3_check, w_closed_forms,
    w_params_equal, w_state)
from fefbound.fef import normalized_fef

from conftest import ACCEPTANCE_LINES


def record(name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_c1_bound_extremes():
    dev_p = max(abs(fef_upper_bound(max_entangled_projector(d)) - 1) for d in (2, 3, 4))
    dev_i = max(abs(fef_upper_bound(maximally_mixed(d)) - 1 / d**2) for d in (2, 3, 4))
    record("C1 bound extremes", dev_p < 1e-10 and dev_i < 1e-12,
           f"max|bound(P+)-1|={dev_p:.2e} (tol 1e-10), max|bound(I/d^2)-1/d^2|={dev_i:.2e} (tol 1e-12)")


def test_c2_two_qubit_triple_agreement():
    rng = np.random.default_rng(2)
    n = 1000
    kb_fail = oracle_fail = oracle_vs_bell_fail = 0
    worst_kb = 0.0
    t0 = time.perf_counter()
    for k in range(n):
        rho = random_state(2, rng)
        kf, bell = fef_two_qubit_kyfan(rho), fef_two_qubit_bell(rho)
        worst_kb = max(worst_kb, abs(kf - bell))
        kb_fail += abs(kf - bell) > 1e-9
        best = oracle_fef(rho, OracleConfig(seed=k)).best_value
        oracle_fail += not (kf - 1e-4 <= best <= kf + 1e-9)
        oracle_vs_bell_fail += not (bell - 1e-4 <= best <= bell + 1e-9)
    elapsed = time.perf_counter() - t0
    record("C2 two-qubit kyfan/bell/oracle agreement",
           kb_fail == 0 and oracle_fail == 0,
           f"kyfan!=bell on {kb_fail}/{n} (worst {worst_kb:.3e}, tol 1e-9); "
           f"oracle outside [kyfan-1e-4, kyfan+1e-9] on {oracle_fail}/{n}; "
           f"oracle outside the same window around bell on {oracle_vs_bell_fail}/{n}; {elapsed:.1f}s")


def test_c3_figure1_thresholds():
    t0 = time.perf_counter()
    roots = figure1_thresholds(1000, family="fig1")
    elapsed = time.perf_counter() - t0
    got = roots["fidelity"] + roots["bound"]
    quoted = [0.0722, 0.9278, 0.1188, 0.8811]
    ok = len(got) == 4 and all(abs(g - q) <= 2e-3 for g, q in zip(got, quoted))
    record("C3 Fig. 1 sign changes (unnormalized rank-one sigma)", ok and elapsed <= 30,
           "found " + ", ".join(f"{g:.5f}" for g in got)
           + f" vs quoted {quoted} (tol 2e-3); {elapsed:.1f}s")


def test_c4_reduction_constant():
    worst = max(abs(reduction_criterion(example_family_rho_x_fig1(x))[0] + 2 / 27)
                for x in np.linspace(0, 1, 101))
    record("C4 reduction eigenvalue -2/27 (unnormalized rank-one sigma)", worst < 1e-9,
           f"max deviation {worst:.2e} over 101 points (tol 1e-9)")


def test_c5_theorem3():
    rng = np.random.default_rng(5)
    worst = {m: np.inf for m in ("exact", "kyfan")}
    for _ in range(1000):
        psi = random_tri_pure_state(rng)
        for m in worst:
            worst[m] = min(worst[m], theorem3_check(psi, m).slack)
    sat = max(abs(theorem3_check(w_state(w_params_equal(g))).slack)
              for g in np.linspace(0, np.sqrt(2) / 2, 200))
    gap = theorem3_check(w_state(w_params_equal(0.9))).slack
    ok = min(worst.values()) >= -1e-9 and sat < 1e-9 and gap > 0
    record("C5 Theorem 3", ok,
           f"min slack {worst['exact']:.2e} (exact FEF) / {worst['kyfan']:.2e} (kyfan) on 1000 states; "
           f"max |slack| on saturation line {sat:.2e}; gap at gamma=0.9 {gap:.4f}")


def test_c6_w_closed_forms():
    rng = np.random.default_rng(6)
    worst_f = worst_f_bell = worst_c = 0.0
    for _ in range(500):
        v = np.abs(rng.standard_normal(3))
        v /= np.linalg.norm(v)
        p = WParams(*v)
        psi = w_state(p, rng.uniform(0, 2 * np.pi, 3))
        fef_n, c = w_closed_forms(p)
        rho_ab = reduced_ab(psi)
        worst_f = max(worst_f, abs(normalized_fef(min(fef_two_qubit_kyfan(rho_ab), 1)) - fef_n))
        worst_f_bell = max(worst_f_bell, abs(normalized_fef(fef_two_qubit_bell(rho_ab)) - fef_n))
        worst_c = max(worst_c, abs(concurrence_ab_c(psi) - c))
    record("C6 W-state closed forms", max(worst_f, worst_f_bell, worst_c) < 1e-9,
           f"max |F_N| deviation {worst_f:.2e} (kyfan) / {worst_f_bell:.2e} (bell), "
           f"max |C| deviation {worst_c:.2e} (tol 1e-9)")


def test_c7_structural_invariants():
    rng = np.random.default_rng(7)
    comp = max(check_completeness(build_generator_basis(d)) for d in (2, 3, 4))
    rt = 0.0
    for d in (2, 3):
        basis = build_generator_basis(d)
        for _ in range(100):
            rho = random_state(d, rng)
            rt = max(rt, np.max(np.abs(reconstruct(decompose(rho, basis), basis).matrix - rho.matrix)))
    rot = lu = 0.0
    for d in (2, 3, 4):
        basis = build_generator_basis(d)
        for _ in range(20):
            rho = random_state(d, rng)
            b0 = fef_upper_bound(rho, basis)
            rb = rotate_basis(basis, random_orthogonal(len(basis), rng))
            rot = max(rot, abs(fef_upper_bound(rho, rb) - b0))
            lu = max(lu, abs(fef_upper_bound(local_unitary(rho, random_unitary(d, rng), "B"), basis) - b0))
    ok = comp < 1e-12 and rt < 1e-10 and rot < 1e-9 and lu < 1e-9
    record("C7 structural invariants", ok,
           f"completeness {comp:.2e} (1e-12), round trip {rt:.2e} (1e-10), "
           f"basis rotation {rot:.2e} (1e-9), side-B unitary {lu:.2e} (1e-9)")


def test_c8_oracle_sandwich():
    rng = np.random.default_rng(8)
    t0 = time.perf_counter()
    worst = -np.inf
    fails = 0
    for d in (2, 3):
        for k in range(200):
            rho = random_state(d, rng)
            excess = oracle_fef(rho, OracleConfig(seed=1000 * d + k)).best_value - fef_upper_bound(rho)
            worst = max(worst, excess)
            fails += excess > 1e-7
    elapsed = time.perf_counter() - t0
    record("C8 oracle <= bound", fails == 0,
           f"violations {fails}/400, max(oracle - bound) {worst:.2e} (tol 1e-7); {elapsed:.1f}s")
