"""Exit criteria. Each test prints one ``ACCEPTANCE <n> PASS|FAIL`` line."""

import math
import time

import numpy as np
import pytest

from fermat_zeros import gauss
from fermat_zeros.arith import PrimeContext, is_prime, odd_primes_up_to
from fermat_zeros.cli import main
from fermat_zeros.fermat import kappa, quotient_table
from fermat_zeros.mirimanoff import (
    derivative_check,
    gamma_eval,
    gamma_values_direct,
    gamma_via_quotients,
    orbit_report,
    symmetry_check,
    zero_profile,
)
from fermat_zeros.relations import (
    COPRIME_DENSITY_FLOOR,
    coprime_pair_counts,
    coprime_pairs,
    ed_form_report,
    prop2_report,
    three_term_report,
    verify_lemma,
    verify_prop4,
    verify_square_implication,
)
from fermat_zeros.suites import cocycle_report, gauss_report


@pytest.fixture
def announce(capsys):
    def _announce(n, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return _announce


def test_1_wieferich_regression(tmp_path, announce):
    out = tmp_path / "scan.csv"
    start = time.perf_counter()
    code = main(["scan", "2", "4000", "--jobs", "1", "--out", str(out)])
    elapsed = time.perf_counter() - start
    hits = [int(line.split(",")[0]) for line in out.read_text().splitlines()[1:]]
    ok = code == 0 and hits == [1093, 3511] and elapsed < 5
    announce(1, ok, f"scan 2 4000 -> {hits} in {elapsed:.2f}s (limit 5s)")


def test_2_kappa_consistency(announce):
    start = time.perf_counter()
    bad = []
    primes = odd_primes_up_to(2000)
    for p in primes:
        ctx = PrimeContext(p)
        k_quot = kappa(ctx)  # pointwise Fermat quotients, no table
        k_gamma = zero_profile(ctx).kappa_from_gamma
        if not (k_quot == k_gamma and is_prime(k_quot) and k_quot <= ctx.bound_quarter and k_quot <= ctx.bound_half):
            bad.append((p, k_quot, k_gamma))
    elapsed = time.perf_counter() - start
    announce(2, not bad and elapsed < 60, f"{len(primes)} primes, mismatches={bad[:5]}, {elapsed:.2f}s (limit 60s)")


def test_3_formula_equivalence(announce):
    bad = []
    checked = 0
    for p in odd_primes_up_to(2000):
        ctx = PrimeContext(p)
        table = quotient_table(ctx)
        direct = gamma_values_direct(ctx)  # defining sum, all t at once
        quot = zero_profile(ctx, table).values
        checked += p - 2
        diff = np.flatnonzero(direct[2:] != quot[2:]) + 2
        bad += [(p, int(t)) for t in diff]
        # scalar entry points on a fixed stride through [2, p-1]
        for t in range(2, p, max(1, p // 7)):
            if gamma_eval(ctx, t) != gamma_via_quotients(table, t):
                bad.append((p, t))
    announce(3, not bad, f"{checked} (p, t) pairs compared, disagreements={bad[:5]}")


def test_4_symmetries_and_orbits(announce):
    failures = []
    for p in odd_primes_up_to(2000):
        prof = zero_profile(PrimeContext(p))
        for rep in (symmetry_check(prof), orbit_report(prof)):
            if not rep.passed:
                failures.append((p, rep.relation_name, rep.violations[:3]))
    for p in odd_primes_up_to(500):
        rep = derivative_check(PrimeContext(p))
        if not rep.passed:
            failures.append((p, "derivative", rep.violations[:3]))
    announce(4, not failures, f"symmetries/orbits p<=2000, derivative p<=500, failures={failures[:5]}")


def test_5_identity_lattice(announce):
    start = time.perf_counter()
    failures = []
    counts = {"prop2": 0, "three-term": 0, "ed-form": 0, "prop4": 0, "square": 0}
    for p in odd_primes_up_to(2000):
        ctx = PrimeContext(p)
        table = quotient_table(ctx)
        prof = zero_profile(ctx, table)
        reps = [verify_prop4(ctx, kappa(ctx, table), prof), verify_square_implication(prof)]
        if p <= 500:
            reps.append(prop2_report(prof))
        if p <= 100:
            reps += [three_term_report(prof), ed_form_report(prof)]
        for rep in reps:
            counts[rep.relation_name] += rep.cases_checked
            if not rep.passed:
                failures.append((p, rep.relation_name, rep.violations[:3]))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300 and counts["square"] > 0
    announce(5, ok, f"cases={counts}, failures={failures[:5]}, {elapsed:.1f}s (limit 300s)")


def test_6_gauss_sum_exactness(announce):
    start = time.perf_counter()
    failures = []
    for p in (3, 5, 7, 11, 13):
        rep = gauss_report(p)
        if not rep.passed:
            failures.append((p, rep.violations[:3]))
        # exact integer representation throughout
        assert gauss.tau(PrimeContext(p), 1).coeffs.dtype == np.int64
    for p in (3, 5, 7):
        rep = cocycle_report(p)
        if not rep.passed:
            failures.append((p, "cocycle", rep.violations[:3]))
    elapsed = time.perf_counter() - start
    announce(6, not failures and elapsed < 30, f"failures={failures}, {elapsed:.2f}s (limit 30s)")


def test_7_lemma_brute_force(announce):
    bad = []
    cases = 0
    for p in odd_primes_up_to(1000):
        rep = verify_lemma(PrimeContext(p))
        cases += rep.cases_checked
        if not rep.passed:
            bad.append((p, rep.violations[:3]))
    announce(7, not bad, f"{cases} (a,b,c,d) cases for p<=1000, counterexamples={bad[:5]}")


def test_8_coprime_bound(announce):
    s = coprime_pair_counts(1000)
    below = [q for q in range(1, 1001) if s[q] < q * q * (2 - math.pi**2 / 6)]
    anchors = coprime_pairs(1) == 1 and coprime_pairs(2) == 3
    ok = not below and anchors and COPRIME_DENSITY_FLOOR == 2 - math.pi**2 / 6
    announce(8, ok, f"q<=1000 below bound: {below[:5]}, s_1=1 and s_2=3: {anchors}")


def test_9_survey_determinism(tmp_path, announce):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    start = time.perf_counter()
    code_a = main(["survey", "--max-p", "100000", "--out", str(a)])
    code_b = main(["survey", "--max-p", "100000", "--out", str(b)])
    elapsed = time.perf_counter() - start
    text = a.read_text()
    footer = [line for line in text.splitlines() if line.startswith("#")]
    rows = len(text.splitlines()) - 1 - len(footer)
    ok = (
        code_a == code_b == 0
        and a.read_bytes() == b.read_bytes()
        and rows == len(odd_primes_up_to(100000))
        and any(line.startswith("# max_ratio=") for line in footer)
        and any(line.startswith("# exceeds_sqrt=") for line in footer)
        and elapsed / 2 < 600
    )
    announce(9, ok, f"{rows} rows, identical={a.read_bytes() == b.read_bytes()}, {footer}, {elapsed:.1f}s for two runs")
