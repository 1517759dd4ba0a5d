"""Named verification suites run per prime and merged in ascending prime order."""

from __future__ import annotations

import random
from collections.abc import Callable

import numpy as np

from . import gauss
from .arith import PrimeContext, is_prime, mul_mod, odd_primes_up_to, pow_mod, pow_mod_array
from .config import DEFAULT_RANGES, VerifyRanges
from .fermat import fermat_quotient, kappa, quotient_table
from .mirimanoff import derivative_check, formula_report, orbit_report, symmetry_check, zero_profile
from .parallel import ordered_map
from .relations import (
    coprime_bound_report,
    ed_form_report,
    prop2_report,
    three_term_report,
    verify_lemma,
    verify_prop4,
    verify_square_implication,
)
from .report import VerificationReport, timed


def _profile(p: int):
    ctx = PrimeContext(p)
    table = quotient_table(ctx)
    return ctx, table, zero_profile(ctx, table)


def kappa_report(p: int) -> VerificationReport:
    """Both kappa derivations agree, kappa is prime and respects both elementary bounds."""
    ctx, table, profile = _profile(p)
    rep = VerificationReport(p, "kappa", expected_cases=4)
    with timed(rep):
        k = kappa(ctx, table)
        checks = [
            k == profile.kappa_from_gamma,
            is_prime(k),
            k <= ctx.bound_quarter,
            k <= ctx.bound_half,
        ]
        rep.violations = [(i, k) for i, ok in enumerate(checks) if not ok]
        rep.cases_checked = len(checks)
    return rep


def _symmetries(p):
    ctx, _, profile = _profile(p)
    return [symmetry_check(profile), orbit_report(profile)]


def _derivative(p):
    return [derivative_check(PrimeContext(p))]


def _formula(p):
    return [formula_report(_profile(p)[2])]


def _kappa(p):
    return [kappa_report(p)]


def _prop2(p):
    return [prop2_report(_profile(p)[2])]


def _three_term(p):
    return [three_term_report(_profile(p)[2])]


def _ed_form(p):
    return [ed_form_report(_profile(p)[2])]


def _prop4(p):
    ctx, table, profile = _profile(p)
    return [verify_prop4(ctx, kappa(ctx, table), profile)]


def _lemma(p):
    return [verify_lemma(PrimeContext(p))]


def _square(p):
    return [verify_square_implication(_profile(p)[2])]


def gauss_report(p: int) -> VerificationReport:
    """Exact Gauss-sum facts at one prime.

    Violation tags: 0 tau(chi) != p*zeta, 1 closed form of tau(chi^k),
    2 factor system, 3 Galois action, 4 norm, 5 principal character.
    """
    ctx = PrimeContext(p)
    units = [k for k in range(1, ctx.p_squared) if k % p]
    pairs = [(k, l) for k in range(1, p) for l in range(1, p) if (k + l) % p]
    rep = VerificationReport(p, "gauss", expected_cases=2 + 2 * len(units) + len(pairs) + (p - 1))
    with timed(rep):
        tau1 = gauss.tau(ctx, 1)
        checks: list[tuple[tuple, bool]] = [
            ((0,), tau1 == gauss.CycloElement.monomial(ctx, 1, p)),
            ((5,), gauss.tau(ctx, 0) == gauss.CycloElement.zero(ctx)),
        ]
        checks += [((1, k), gauss.tau(ctx, k) == gauss.gauss_sum_formula(ctx, k)) for k in units]
        checks += [((2, k, l), gauss.factor_system_check(ctx, k, l)) for k, l in pairs]
        checks += [((3, k), gauss.galois_identity_check(ctx, k)) for k in units]
        p2 = gauss.CycloElement.monomial(ctx, 0, p * p)
        checks += [
            ((4, k), gauss.tau(ctx, k) * gauss.galois_apply(gauss.tau(ctx, k), -1) == p2)
            for k in range(1, p)
        ]
        rep.violations = [tag for tag, ok in checks if not ok]
        rep.cases_checked = len(checks)
    return rep


def cocycle_report(p: int) -> VerificationReport:
    ctx = PrimeContext(p)
    rep = VerificationReport(p, "cocycle", expected_cases=(p - 1) * (p - 2) * (p - 3))
    with timed(rep):
        for k in range(1, p):
            for l in range(1, p):
                for j in range(1, p):
                    if (k + l) % p and (l + j) % p and (k + l + j) % p:
                        rep.cases_checked += 1
                        if not gauss.cocycle_identity_check(ctx, k, l, j):
                            rep.violations.append((k, l, j))
    return rep


def _gauss(p):
    return [gauss_report(p)]


def _cocycle(p):
    return [cocycle_report(p)]


def arith_report(samples: int, seed: int) -> VerificationReport:
    """Randomised spot checks of the kernel against Python big integers and direct quotients.

    Violation tags: 0 mul_mod, 1 pow_mod, 2 vectorised pow, 3 quotient table entry.
    """
    rng = random.Random(seed)
    rep = VerificationReport(0, "arith", expected_cases=4 * samples)
    with timed(rep):
        primes = odd_primes_up_to(100_000)
        for _ in range(samples):
            m = rng.randrange(2, 1 << 62)
            a, b = rng.randrange(m), rng.randrange(m)
            if mul_mod(a, b, m) != int(a) * int(b) % m:
                rep.violations.append((0, a, b, m))
            e = rng.randrange(1 << 40)
            if pow_mod(a, e, m) != pow(a, e, m):
                rep.violations.append((1, a, e, m))
            m2 = rng.randrange(2, 1 << 40)
            x = rng.randrange(m2)
            if int(pow_mod_array([x], e, m2)[0]) != pow(x, e, m2):
                rep.violations.append((2, x, e, m2))
            p = rng.choice(primes)
            k = rng.randrange(1, p)
            ctx = PrimeContext(p)
            if quotient_table(ctx)[k] != fermat_quotient(ctx, k):
                rep.violations.append((3, p, k))
            rep.cases_checked += 4
    return rep


_PER_PRIME: dict[str, tuple[Callable[[int], list[VerificationReport]], str]] = {
    "symmetries": (_symmetries, "symmetries"),
    "derivative": (_derivative, "derivative"),
    "formula": (_formula, "formula"),
    "kappa": (_kappa, "kappa"),
    "prop2": (_prop2, "prop2"),
    "three-term": (_three_term, "three_term"),
    "ed-form": (_ed_form, "ed_form"),
    "prop4": (_prop4, "prop4"),
    "lemma": (_lemma, "lemma"),
    "square": (_square, "square"),
    "gauss": (_gauss, "gauss"),
    "cocycle": (_cocycle, "cocycle"),
}

SUITES = tuple(_PER_PRIME) + ("sq-bound", "arith", "all")


def run_suite(
    name: str,
    max_p: int | None = None,
    jobs: int = 1,
    seed: int = 0,
    ranges: VerifyRanges = DEFAULT_RANGES,
) -> dict[str, list[VerificationReport]]:
    """Run one suite (or ``all``); returns reports keyed by suite name, primes ascending.

    ``max_p`` replaces the default range of a single suite; under ``all`` it only
    lowers each default, so the cubic suites never run past their own limits.
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if name == "all":
        out: dict[str, list[VerificationReport]] = {}
        for sub in SUITES[:-1]:
            sub_max = max_p
            if max_p is not None and sub in _PER_PRIME:
                sub_max = min(max_p, getattr(ranges, _PER_PRIME[sub][1]))
            elif max_p is not None and sub == "sq-bound":
                sub_max = min(max_p, ranges.sq_bound)
            out.update(run_suite(sub, sub_max, jobs, seed, ranges))
        return out
    if name == "sq-bound":
        return {name: [coprime_bound_report(max_p or ranges.sq_bound)]}
    if name == "arith":
        return {name: [arith_report(ranges.arith_samples, seed)]}
    fn, field_name = _PER_PRIME[name]
    limit = getattr(ranges, field_name)
    if max_p is not None:
        limit = max_p
    if name in ("gauss", "cocycle"):
        limit = min(limit, gauss.MAX_GAUSS_PRIME)
    primes = odd_primes_up_to(limit)
    reports: list[VerificationReport] = []
    for part in ordered_map(fn, primes, jobs=jobs):
        reports.extend(part)
    return {name: reports}


def summarize(results: dict[str, list[VerificationReport]]) -> dict:
    suites = {}
    for name, reports in results.items():
        suites[name] = {
            "passed": all(r.passed for r in reports),
            "primes_checked": len(reports),
            "cases_checked": int(np.sum([r.cases_checked for r in reports])) if reports else 0,
            "violation_count": sum(len(r.violations) for r in reports),
            "reports": [r.to_dict() for r in reports],
        }
    return {"passed": all(s["passed"] for s in suites.values()), "suites": suites}
