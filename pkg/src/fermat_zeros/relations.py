"""Exhaustive checks of the relations satisfied by gamma_p, plus the kappa survey."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .arith import PrimeContext, odd_primes_up_to
from .fermat import kappa, quotient_table
from .mirimanoff import ZeroProfile, _inverses, gamma_eval, zero_profile
from .parallel import ordered_map
from .report import VerificationReport, timed

COPRIME_DENSITY_FLOOR = 2 - math.pi**2 / 6


def _gamma_fn(ctx: PrimeContext, values: np.ndarray | None):
    if values is None:
        return lambda t: gamma_eval(ctx, t)
    return lambda t: int(values[t % ctx.p])


def _require(cond: bool, what: str, ctx: PrimeContext):
    if not cond:
        raise ValueError(f"hypothesis violated mod {ctx.p}: {what}")


def verify_prop2(ctx: PrimeContext, a: int, b: int, values: np.ndarray | None = None) -> bool:
    """Two-variable relation, for ``a, b, ab`` not 0 or 1 mod p.

    ``(1-ab) g((1-b)/(1-ab)) + (1-b) g(a) = (1-ab) g((1-a)/(1-ab)) + (1-a) g(b)``
    """
    p = ctx.p
    a, b = a % p, b % p
    for name, v in (("a", a), ("b", b), ("ab", a * b % p)):
        _require(v not in (0, 1), f"{name} = {v} must not be 0 or 1", ctx)
    g = _gamma_fn(ctx, values)
    u = (1 - a * b) % p
    w = ctx.inv(u)
    lhs = u * g((1 - b) * w) + (1 - b) * g(a)
    rhs = u * g((1 - a) * w) + (1 - a) * g(b)
    return (lhs - rhs) % p == 0


def verify_three_term(ctx: PrimeContext, k: int, l: int, j: int, values: np.ndarray | None = None) -> bool:
    """``(k+l+j) g(k/(k+l+j)) + (l+j) g(l/(l+j)) = (k+l+j) g((k+l)/(k+l+j)) + (k+l) g(k/(k+l))``"""
    p = ctx.p
    for name, v in (("k", k), ("l", l), ("j", j), ("k+l", k + l), ("l+j", l + j), ("k+l+j", k + l + j)):
        _require(v % p != 0, f"{name} = 0 mod p", ctx)
    g = _gamma_fn(ctx, values)
    s, lj, kl = (k + l + j) % p, (l + j) % p, (k + l) % p
    lhs = s * g(k * ctx.inv(s)) + lj * g(l * ctx.inv(lj))
    rhs = s * g(kl * ctx.inv(s)) + kl * g(k * ctx.inv(kl))
    return (lhs - rhs) % p == 0


def verify_ed_form(ctx: PrimeContext, e: int, d: int, values: np.ndarray | None = None) -> bool:
    """``(e+d-1) (g((d-1)/(e+d-1)) - g(d/(e+d-1))) = g(e) - g(d)``"""
    p = ctx.p
    e, d = e % p, d % p
    _require(e not in (0, 1), f"e = {e} must not be 0 or 1", ctx)
    _require(d not in (0, 1), f"d = {d} must not be 0 or 1", ctx)
    _require((e + d) % p != 1, "e + d = 1 mod p", ctx)
    g = _gamma_fn(ctx, values)
    s = (e + d - 1) % p
    w = ctx.inv(s)
    lhs = s * (g((d - 1) * w) - g(d * w))
    return (lhs - (g(e) - g(d))) % p == 0


# Vectorised exhaustive sweeps. Each one returns a report whose expected_cases
# is the closed-form size of the valid input set.


def prop2_report(profile: ZeroProfile) -> VerificationReport:
    """All ``a, b`` in ``[2, p-1]`` with ``ab != 1``: ``(p-2)(p-3)`` pairs."""
    ctx = profile.context
    p = ctx.p
    rep = VerificationReport(p, "prop2", expected_cases=(p - 2) * (p - 3))
    with timed(rep):
        g, inv = profile.values, _inverses(p)
        a = np.arange(2, p, dtype=np.int64)[:, None]
        b = np.arange(2, p, dtype=np.int64)[None, :]
        ab = a * b % p
        valid = ab != 1
        u = (1 - ab) % p
        w = inv[u]
        lhs = u * g[(1 - b) * w % p] + (1 - b) * g[a]
        rhs = u * g[(1 - a) * w % p] + (1 - a) * g[b]
        bad = valid & ((lhs - rhs) % p != 0)
        ia, ib = np.nonzero(bad)
        rep.violations = [(int(x) + 2, int(y) + 2) for x, y in zip(ia, ib)]
        rep.cases_checked = int(valid.sum())
    return rep


def three_term_report(profile: ZeroProfile) -> VerificationReport:
    """All nonzero ``k, l, j`` with ``k+l, l+j, k+l+j`` nonzero: ``(p-1)(p-2)(p-3)`` triples."""
    ctx = profile.context
    p = ctx.p
    rep = VerificationReport(p, "three-term", expected_cases=(p - 1) * (p - 2) * (p - 3))
    with timed(rep):
        g, inv = profile.values, _inverses(p)
        l = np.arange(1, p, dtype=np.int64)[:, None]
        j = np.arange(1, p, dtype=np.int64)[None, :]
        lj = (l + j) % p
        count = 0
        for k in range(1, p):
            kl = (k + l) % p
            s = (kl + j) % p
            valid = (lj != 0) & (kl != 0) & (s != 0)
            lhs = s * g[k * inv[s] % p] + lj * g[l * inv[lj] % p]
            rhs = s * g[kl * inv[s] % p] + kl * g[k * inv[kl] % p]
            bad = valid & ((lhs - rhs) % p != 0)
            count += int(valid.sum())
            for il, ij in zip(*np.nonzero(bad)):
                rep.violations.append((k, int(il) + 1, int(ij) + 1))
        rep.cases_checked = count
    return rep


def ed_form_report(profile: ZeroProfile) -> VerificationReport:
    """All ``e, d`` in ``[2, p-1]`` with ``e + d != 1``: ``(p-2)(p-3)`` pairs."""
    ctx = profile.context
    p = ctx.p
    rep = VerificationReport(p, "ed-form", expected_cases=(p - 2) * (p - 3))
    with timed(rep):
        g, inv = profile.values, _inverses(p)
        e = np.arange(2, p, dtype=np.int64)[:, None]
        d = np.arange(2, p, dtype=np.int64)[None, :]
        s = (e + d - 1) % p
        valid = s != 0
        w = inv[s]
        lhs = s * (g[(d - 1) * w % p] - g[d * w % p])
        rhs = g[e] - g[d]
        bad = valid & ((lhs - rhs) % p != 0)
        ie, id_ = np.nonzero(bad)
        rep.violations = [(int(x) + 2, int(y) + 2) for x, y in zip(ie, id_)]
        rep.cases_checked = int(valid.sum())
    return rep


def verify_square_implication(profile: ZeroProfile) -> VerificationReport:
    """If ``z`` and ``z+1`` are zeros with ``z`` nontrivial, then ``z^2`` is a zero.

    When ``z != -1`` the two-variable relation at ``a = z, b = 1/(z+1)`` is
    evaluated as well; a failure there is recorded as ``(z, -1)``.
    """
    ctx = profile.context
    p = ctx.p
    rep = VerificationReport(p, "square")
    with timed(rep):
        for z in profile.zeros:
            if z in (0, 1) or not profile.is_zero(z + 1):
                continue
            rep.cases_checked += 1
            if not profile.is_zero(z * z):
                rep.violations.append((z, z * z % p))
            if z != p - 1 and not verify_prop2(ctx, z, ctx.inv(z + 1), profile.values):
                rep.violations.append((z, -1))
    return rep


def verify_prop4(ctx: PrimeContext, kappa_p: int, profile: ZeroProfile) -> VerificationReport:
    """Every ratio ``u/v`` with ``1 <= u, v < kappa_p`` is a zero; ``(kappa_p - 1)^2`` cases."""
    p = ctx.p
    rep = VerificationReport(p, "prop4", expected_cases=(kappa_p - 1) ** 2)
    with timed(rep):
        inv = _inverses(p)
        u = np.arange(1, kappa_p, dtype=np.int64)[:, None]
        v = np.arange(1, kappa_p, dtype=np.int64)[None, :]
        ratios = u * inv[v] % p
        bad = profile.values[ratios] != 0
        rep.violations = [(int(x) + 1, int(y) + 1) for x, y in zip(*np.nonzero(bad))]
        rep.cases_checked = int(ratios.size)
    return rep


def verify_lemma(ctx: PrimeContext) -> VerificationReport:
    """No ``1 - a/b`` equals ``c/d`` with ``a > b`` and ``a, b, c, d`` in ``[1, isqrt(p)]``.

    Cases: ``C(s, 2) * s^2`` with ``s = isqrt(p)``; violations are ``(a, b, c, d)``.
    """
    p, s = ctx.p, ctx.sqrt_floor
    rep = VerificationReport(p, "lemma", expected_cases=(s * (s - 1) // 2) * s * s)
    with timed(rep):
        inv = _inverses(p)
        r = np.arange(1, s + 1, dtype=np.int64)
        ia, ib = np.nonzero(r[:, None] > r[None, :])
        a, b = r[ia], r[ib]
        lhs = (1 - a * inv[b]) % p
        c, d = np.meshgrid(r, r, indexing="ij")
        c, d = c.ravel(), d.ravel()
        rhs = c * inv[d] % p
        hit = lhs[:, None] == rhs[None, :]
        for x, y in zip(*np.nonzero(hit)):
            rep.violations.append((int(a[x]), int(b[x]), int(c[y]), int(d[y])))
        rep.cases_checked = int(hit.size)
    return rep


def _totients(n: int) -> np.ndarray:
    phi = np.arange(n + 1, dtype=np.int64)
    for i in range(2, n + 1):
        if phi[i] == i:
            phi[i::i] -= phi[i::i] // i
    return phi


def coprime_pair_counts(q_max: int) -> np.ndarray:
    """``s[q]`` for ``0 <= q <= q_max`` via ``s_q = 2 * sum_{k<=q} phi(k) - 1``."""
    phi = _totients(q_max)
    s = 2 * np.cumsum(phi) - 1  # phi[0] = 0 contributes nothing
    s[0] = 0
    return s


def coprime_pairs(q: int) -> int:
    """Number of ``(u, v)`` in ``[1, q]^2`` with ``gcd(u, v) = 1``."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return int(coprime_pair_counts(q)[q])


def coprime_bound_report(q_max: int) -> VerificationReport:
    """``s_q >= q^2 (2 - pi^2/6)`` for ``1 <= q <= q_max``; violations are ``(q, s_q)``."""
    rep = VerificationReport(0, "sq-bound", expected_cases=q_max)
    with timed(rep):
        s = coprime_pair_counts(q_max)
        for q in range(1, q_max + 1):
            if s[q] < q * q * COPRIME_DENSITY_FLOOR:
                rep.violations.append((q, int(s[q])))
        rep.cases_checked = q_max
    return rep


@dataclass(frozen=True)
class SurveyRow:
    p: int
    kappa_p: int
    eta_0: int
    ratio: float
    bound_quarter: int
    sqrt_floor: int
    exceeds_sqrt: bool
    wieferich_base2: bool

    def as_dict(self) -> dict:
        d = asdict(self)
        d["ratio"] = float(f"{self.ratio:.6f}")
        return d


def survey_row(p: int) -> SurveyRow:
    ctx = PrimeContext(p)
    table = quotient_table(ctx)
    profile = zero_profile(ctx, table)
    k = kappa(ctx, table)
    if k != profile.kappa_from_gamma:
        raise AssertionError(f"kappa mismatch at p={p}: {k} vs {profile.kappa_from_gamma}")
    if k > ctx.bound_quarter:
        raise AssertionError(f"kappa_{p} = {k} exceeds floor((p+5)/4) = {ctx.bound_quarter}")
    eta0 = profile.eta0
    return SurveyRow(
        p=p,
        kappa_p=k,
        eta_0=eta0,
        ratio=k / math.sqrt(eta0),
        bound_quarter=ctx.bound_quarter,
        sqrt_floor=ctx.sqrt_floor,
        exceeds_sqrt=k > ctx.sqrt_floor,
        wieferich_base2=table[2] == 0,
    )


def sqrt_claim_survey(max_p: int, jobs: int = 1) -> list[SurveyRow]:
    """One row per odd prime up to ``max_p``; reports, never asserts, the sqrt claims."""
    if max_p < 3:
        raise ValueError("max_p must be >= 3")
    return ordered_map(survey_row, odd_primes_up_to(max_p), jobs=jobs)
