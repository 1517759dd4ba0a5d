"""Mirimanoff polynomial values, zero profiles and zero orbits modulo p."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import PrimeContext, sqrt_mod
from .fermat import QuotientTable, quotient_table
from .report import VerificationReport, timed


@lru_cache(maxsize=32)
def _inverses(p: int) -> np.ndarray:
    inv = PrimeContext(p).inverse_table()
    inv.setflags(write=False)
    return inv


def gamma_eval(ctx: PrimeContext, t: int) -> int:
    """``sum_{j=1}^{p-1} t**j / j mod p`` by Horner's rule."""
    p = ctx.p
    t %= p
    inv = _inverses(p).tolist()
    acc = 0
    for j in range(p - 1, 0, -1):
        acc = (acc + inv[j]) * t % p
    return acc


def gamma_values_direct(ctx: PrimeContext) -> np.ndarray:
    """The defining sum evaluated at every residue at once (O(p^2), no quotients)."""
    p = ctx.p
    inv = _inverses(p)
    t = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for j in range(p - 1, 0, -1):
        acc = (acc + inv[j]) * t % p
    return acc


def gamma_via_quotients(table: QuotientTable, t: int) -> int:
    """``(t-1) q_p(t-1) - t q_p(t) mod p`` for ``2 <= t <= p-1``."""
    p = table.context.p
    if not 2 <= t <= p - 1:
        raise ValueError(f"t={t} outside [2, p-1]; 0 and 1 are the trivial zeros")
    return ((t - 1) * table[t - 1] - t * table[t]) % p


def gamma_values_from_table(table: QuotientTable) -> np.ndarray:
    p = table.context.p
    q = table.q
    values = np.zeros(p, dtype=np.int64)
    t = np.arange(2, p, dtype=np.int64)
    values[2:] = ((t - 1) * q[1 : p - 1] - t * q[2:p]) % p
    return values


@dataclass(frozen=True, eq=False)
class ZeroProfile:
    context: PrimeContext
    values: np.ndarray
    histogram: np.ndarray
    zeros: tuple[int, ...]
    kappa_from_gamma: int

    @property
    def eta0(self) -> int:
        return int(self.histogram[0])

    def is_zero(self, t: int) -> bool:
        return self.values[t % self.context.p] == 0

    def gamma(self, t: int) -> int:
        return int(self.values[t % self.context.p])


def zero_profile(ctx: PrimeContext, table: QuotientTable | None = None) -> ZeroProfile:
    if table is None:
        table = quotient_table(ctx)
    p = ctx.p
    values = gamma_values_from_table(table)
    values.setflags(write=False)
    histogram = np.bincount(values, minlength=p)
    zeros = tuple(np.flatnonzero(values == 0).tolist())
    nonzero = np.flatnonzero(values[1:])
    if nonzero.size == 0:
        raise AssertionError(f"gamma_{p} vanishes on every residue")
    return ZeroProfile(ctx, values, histogram, zeros, int(nonzero[0]) + 1)


def derivative_check(ctx: PrimeContext) -> VerificationReport:
    """Differentiate the coefficient vector of gamma_p and evaluate everywhere.

    Expected: 1 at t=0, p-1 at t=1 and 0 elsewhere. Violations are ``(t, value)``.
    """
    p = ctx.p
    rep = VerificationReport(p, "derivative", expected_cases=p)
    with timed(rep):
        inv = _inverses(p)
        # derivative of t^j / j is (j * inv(j)) t^(j-1)
        dcoef = (np.arange(p, dtype=np.int64) * inv) % p
        t = np.arange(p, dtype=np.int64)
        acc = np.zeros(p, dtype=np.int64)
        for j in range(p - 1, 0, -1):
            acc = (acc * t + dcoef[j]) % p
        expected = np.zeros(p, dtype=np.int64)
        expected[0] = 1
        expected[1] = p - 1
        bad = np.flatnonzero(acc != expected)
        rep.violations = [(int(x), int(acc[x])) for x in bad]
        rep.cases_checked = p
    return rep


def symmetry_check(profile: ZeroProfile) -> VerificationReport:
    """``gamma(a) = gamma(1-a)`` for every a and ``gamma(a) = -a gamma(1/a)`` for a != 0.

    Violations are ``(which, a)`` with ``which`` 1 for the reflection and 2 for the inversion.
    """
    ctx = profile.context
    p = ctx.p
    rep = VerificationReport(p, "symmetries", expected_cases=2 * p - 1)
    with timed(rep):
        g = profile.values
        a = np.arange(p, dtype=np.int64)
        bad1 = np.flatnonzero(g != g[(1 - a) % p])
        units = a[1:]
        inv = _inverses(p)[1:]
        bad2 = units[g[1:] != (-units * g[inv]) % p]
        rep.violations = [(1, int(x)) for x in bad1] + [(2, int(x)) for x in bad2]
        rep.cases_checked = p + units.size
    return rep


class OrbitLabel(str, enum.Enum):
    GENERIC = "generic"
    HALF_ORBIT = "half_orbit"
    SIXTH_ROOT = "sixth_root"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class Orbit:
    members: frozenset[int]
    label: OrbitLabel

    def __len__(self):
        return len(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)


def sixth_roots(ctx: PrimeContext) -> tuple[int, int] | None:
    """The two roots of ``t^2 - t + 1`` mod p, present iff ``p = 1 (mod 3)``."""
    p = ctx.p
    if p % 3 != 1:
        return None
    s = sqrt_mod(-3, p)
    if s is None:
        raise AssertionError(f"-3 has no square root mod {p} although p = 1 mod 3")
    half = ctx.inv(2)
    r1, r2 = (1 + s) * half % p, (1 - s) * half % p
    return (min(r1, r2), max(r1, r2))


def half_orbit(ctx: PrimeContext) -> frozenset[int]:
    return frozenset({2, (ctx.p + 1) // 2, ctx.p - 1})


def orbit_of(ctx: PrimeContext, z: int) -> frozenset[int]:
    """Closure of a nontrivial residue under ``z -> 1-z`` and ``z -> 1/z``."""
    p = ctx.p
    seen = {z % p}
    todo = deque(seen)
    while todo:
        x = todo.popleft()
        for y in ((1 - x) % p, ctx.inv(x) if x else None):
            if y is not None and y not in seen:
                seen.add(y)
                todo.append(y)
    return frozenset(seen)


def orbit_decompose(profile: ZeroProfile) -> list[Orbit]:
    """Partition the zero set into orbits, trivial orbit first, then by least member."""
    ctx = profile.context
    zeros = set(profile.zeros)
    if not {0, 1} <= zeros:
        raise AssertionError(f"trivial zeros missing for p={ctx.p}")
    orbits = [Orbit(frozenset({0, 1}), OrbitLabel.TRIVIAL)]
    special_half = half_orbit(ctx)
    sixth = sixth_roots(ctx)
    special_sixth = frozenset(sixth) if sixth else None
    remaining = sorted(zeros - {0, 1})
    done: set[int] = set()
    for z in remaining:
        if z in done:
            continue
        members = orbit_of(ctx, z)
        escaped = members - zeros
        if escaped:
            raise AssertionError(
                f"orbit of zero {z} mod {ctx.p} leaves the zero set at {sorted(escaped)}"
            )
        if members == special_half:
            label = OrbitLabel.HALF_ORBIT
        elif members == special_sixth:
            label = OrbitLabel.SIXTH_ROOT
        elif len(members) == 6:
            label = OrbitLabel.GENERIC
        else:
            raise AssertionError(f"unexpected orbit {sorted(members)} mod {ctx.p}")
        orbits.append(Orbit(members, label))
        done |= members
    return orbits


def formula_report(profile: ZeroProfile) -> VerificationReport:
    """Defining sum against the quotient formula for every ``t`` in ``[2, p-1]``."""
    ctx = profile.context
    p = ctx.p
    rep = VerificationReport(p, "formula", expected_cases=p - 2)
    with timed(rep):
        direct = gamma_values_direct(ctx)
        bad = np.flatnonzero(direct[2:] != profile.values[2:]) + 2
        rep.violations = [(int(t), int(direct[t]), int(profile.values[t])) for t in bad]
        rep.cases_checked = p - 2
    return rep


def orbit_report(profile: ZeroProfile) -> VerificationReport:
    """Closure of the zero set, orbit sizes and exceptional labels.

    Violations: ``(z, image)`` for an image that is not a zero, ``(z, size)``
    for a bad orbit size, ``(z, -1)`` for a mislabelled orbit.
    """
    ctx = profile.context
    p = ctx.p
    nontrivial = [z for z in profile.zeros if z > 1]
    rep = VerificationReport(p, "orbits", expected_cases=len(nontrivial))
    with timed(rep):
        zeros = set(profile.zeros)
        for z in nontrivial:
            for image in ((1 - z) % p, ctx.inv(z)):
                if image not in zeros:
                    rep.violations.append((z, image))
        rep.cases_checked = len(nontrivial)
        if rep.violations:
            return rep
        sixth = sixth_roots(ctx)
        for orbit in orbit_decompose(profile):
            z = min(orbit.members)
            size = len(orbit)
            if orbit.label is OrbitLabel.TRIVIAL:
                continue
            if size not in (2, 3, 6):
                rep.violations.append((z, size))
            expected = {2: OrbitLabel.SIXTH_ROOT, 3: OrbitLabel.HALF_ORBIT, 6: OrbitLabel.GENERIC}.get(size)
            if orbit.label is not expected:
                rep.violations.append((z, -1))
        if sixth is not None and not all(profile.is_zero(r) for r in sixth):
            rep.violations.append((sixth[0], sixth[1]))
    return rep
