"""Exact arithmetic in Z[zeta], zeta a primitive p^2-th root of unity, and the Gauss sums
of the order-p characters of conductor p^2.

Elements are integer vectors in the power basis 1, zeta, ..., zeta^(p^2-p-1),
reduced modulo the cyclotomic polynomial 1 + x^p + ... + x^((p-1)p).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import PrimeContext, pow_mod_array
from .mirimanoff import gamma_eval

MAX_GAUSS_PRIME = 13
_COEFF_LIMIT = 1 << 62


def _reduce(ctx: PrimeContext, full: np.ndarray) -> np.ndarray:
    """Reduce a length-p^2 vector of exponents mod p^2 to the canonical basis."""
    p = ctx.p
    n = ctx.p_squared - p
    out = full[:n].copy()
    # x^(p(p-1)+r) = -(x^r + x^(p+r) + ... + x^((p-2)p+r))
    out.reshape(p - 1, p)[:] -= full[n:][None, :]
    return out


class CycloElement:
    __slots__ = ("context", "coeffs")

    def __init__(self, context: PrimeContext, coeffs):
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.shape != (context.p_squared - context.p,):
            raise ValueError(f"expected {context.p_squared - context.p} coefficients, got {coeffs.shape}")
        coeffs.setflags(write=False)
        self.context = context
        self.coeffs = coeffs

    @classmethod
    def zero(cls, ctx: PrimeContext) -> CycloElement:
        return cls(ctx, np.zeros(ctx.p_squared - ctx.p, dtype=np.int64))

    @classmethod
    def monomial(cls, ctx: PrimeContext, exponent: int, coeff: int = 1) -> CycloElement:
        """``coeff * zeta^exponent`` for any integer exponent."""
        full = np.zeros(ctx.p_squared, dtype=np.int64)
        full[exponent % ctx.p_squared] = coeff
        return cls(ctx, _reduce(ctx, full))

    @classmethod
    def from_exponents(cls, ctx: PrimeContext, exponents, coeffs=None) -> CycloElement:
        """``sum coeffs[i] * zeta^exponents[i]``."""
        exps = np.asarray(exponents, dtype=np.int64) % ctx.p_squared
        weights = np.ones_like(exps) if coeffs is None else np.asarray(coeffs, dtype=np.int64)
        full = np.zeros(ctx.p_squared, dtype=np.int64)
        np.add.at(full, exps, weights)
        return cls(ctx, _reduce(ctx, full))

    def _same(self, other: CycloElement):
        if not isinstance(other, CycloElement):
            return NotImplemented
        if other.context.p != self.context.p:
            raise ValueError(f"context mismatch: p={self.context.p} vs p={other.context.p}")
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return cyclo_add(self, other)

    def __neg__(self):
        return CycloElement(self.context, -self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        other = self._same(other)
        if other is NotImplemented:
            return other
        return cyclo_mul(self, other)

    __rmul__ = __mul__

    def scale(self, c: int) -> CycloElement:
        _check_bound(int(np.abs(self.coeffs).max(initial=0)) * abs(c))
        return CycloElement(self.context, self.coeffs * c)

    def __eq__(self, other):
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.context.p == other.context.p and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.context.p, self.coeffs.tobytes()))

    def __repr__(self):
        nz = np.flatnonzero(self.coeffs)
        terms = " + ".join(f"{self.coeffs[i]}*z^{i}" for i in nz[:8])
        more = " + ..." if nz.size > 8 else ""
        return f"CycloElement(p={self.context.p}: {terms or '0'}{more})"


def _check_bound(bound: int):
    if bound >= _COEFF_LIMIT:
        raise OverflowError(f"coefficient bound {bound} exceeds 2**62")


def cyclo_add(x: CycloElement, y: CycloElement) -> CycloElement:
    if x.context.p != y.context.p:
        raise ValueError("context mismatch")
    _check_bound(int(np.abs(x.coeffs).max(initial=0)) + int(np.abs(y.coeffs).max(initial=0)))
    return CycloElement(x.context, x.coeffs + y.coeffs)


def cyclo_mul(x: CycloElement, y: CycloElement) -> CycloElement:
    """Schoolbook product, folded by zeta^(p^2) = 1 and reduced."""
    ctx = x.context
    if ctx.p != y.context.p:
        raise ValueError("context mismatch")
    n = x.coeffs.size
    # every convolution entry sums at most n products; the reduction adds at most p - 1 more
    _check_bound(int(np.abs(x.coeffs).max(initial=0)) * int(np.abs(y.coeffs).max(initial=0)) * 2 * n * ctx.p)
    prod = np.convolve(x.coeffs, y.coeffs)
    m = ctx.p_squared
    full = np.zeros(m, dtype=np.int64)
    full[: min(m, prod.size)] += prod[:m]
    full[: prod.size - m] += prod[m:]
    return CycloElement(ctx, _reduce(ctx, full))


def galois_apply(x: CycloElement, k: int) -> CycloElement:
    """Image of ``x`` under ``zeta -> zeta^k``."""
    ctx = x.context
    if k % ctx.p == 0:
        raise ValueError(f"k={k} is not a unit mod {ctx.p}")
    exps = np.arange(x.coeffs.size, dtype=np.int64) * (k % ctx.p_squared)
    return CycloElement.from_exponents(ctx, exps, x.coeffs)


def zeta_p_power(ctx: PrimeContext, e: int, coeff: int = 1) -> CycloElement:
    """``coeff * zeta_p^e`` where ``zeta_p = zeta^p``."""
    return CycloElement.monomial(ctx, ctx.p * e, coeff)


@lru_cache(maxsize=16)
def _unit_quotients(p: int) -> tuple[np.ndarray, np.ndarray]:
    """Units ``a`` mod p^2 and their Fermat quotients."""
    m = p * p
    a = np.arange(1, m, dtype=np.int64)
    a = a[a % p != 0]
    q, rem = np.divmod(pow_mod_array(a, p - 1, m) - 1, p)
    if rem.any():
        raise ArithmeticError("inexact Fermat quotient division")
    return a, q


@dataclass(frozen=True)
class CharacterPower:
    """``chi^k`` with ``chi(a) = zeta_p^(q_p(a))``; ``value(a)`` is the exponent of zeta_p."""

    context: PrimeContext
    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % self.context.p)

    def value(self, a: int) -> int:
        p, m = self.context.p, self.context.p_squared
        if a % p == 0:
            raise ValueError(f"{a} is not a unit mod {m}")
        q = (pow(a % m, p - 1, m) - 1) // p
        return self.k * q % p

    def values(self) -> tuple[np.ndarray, np.ndarray]:
        """All units mod p^2 and their character exponents."""
        a, q = _unit_quotients(self.context.p)
        return a, self.k * q % self.context.p


def gauss_sum(ctx: PrimeContext, char: CharacterPower) -> CycloElement:
    """``sum over units a mod p^2 of chi^k(a) zeta^a``."""
    a, v = char.values()
    return CycloElement.from_exponents(ctx, ctx.p * v + a)


@lru_cache(maxsize=256)
def _gauss_cached(p: int, k: int) -> CycloElement:
    ctx = PrimeContext(p)
    return gauss_sum(ctx, CharacterPower(ctx, k))


def tau(ctx: PrimeContext, k: int) -> CycloElement:
    return _gauss_cached(ctx.p, k % ctx.p)


def _check_gauss_prime(ctx: PrimeContext):
    if ctx.p > MAX_GAUSS_PRIME:
        raise ValueError(f"Gauss-sum checks are limited to p <= {MAX_GAUSS_PRIME}")


def omega_formula(ctx: PrimeContext, k: int, l: int) -> CycloElement:
    """``p * zeta_p^(-(k+l) * gamma_p(k/(k+l)))``."""
    p = ctx.p
    s = (k + l) % p
    if k % p == 0 or l % p == 0 or s == 0:
        raise ValueError(f"k, l, k+l must be nonzero mod {p}: k={k}, l={l}")
    g = gamma_eval(ctx, k * ctx.inv(s) % p)
    return zeta_p_power(ctx, (-s * g) % p, p)


def factor_system_check(ctx: PrimeContext, k: int, l: int) -> bool:
    """``tau(chi^k) tau(chi^l) == omega * tau(chi^(k+l))`` with omega from the gamma formula."""
    _check_gauss_prime(ctx)
    omega = omega_formula(ctx, k, l)
    return tau(ctx, k) * tau(ctx, l) == omega * tau(ctx, k + l)


def cocycle_identity_check(ctx: PrimeContext, k: int, l: int, j: int) -> bool:
    """``w(k, l+j) w(l, j) == w(k+l, j) w(k, l)`` for the formula values ``w``."""
    _check_gauss_prime(ctx)
    p = ctx.p
    for name, v in (("k", k), ("l", l), ("j", j), ("k+l", k + l), ("l+j", l + j), ("k+l+j", k + l + j)):
        if v % p == 0:
            raise ValueError(f"{name} = 0 mod {p}")
    w = lambda x, y: omega_formula(ctx, x, y)  # noqa: E731
    return w(k, l + j) * w(l, j) == w(k + l, j) * w(k, l)


def gauss_sum_formula(ctx: PrimeContext, k: int) -> CycloElement:
    """``chi^k(k) * p * zeta^k``, the closed form of ``tau(chi^k)``."""
    return CycloElement.monomial(ctx, ctx.p * (CharacterPower(ctx, k).value(k)) + k, ctx.p)


def galois_identity_check(ctx: PrimeContext, k: int) -> bool:
    """``sigma_k(tau(chi)) == conj(chi^k)(k) * tau(chi^k)``."""
    _check_gauss_prime(ctx)
    lhs = galois_apply(tau(ctx, 1), k)
    conj = zeta_p_power(ctx, -CharacterPower(ctx, k).value(k))
    return lhs == conj * tau(ctx, k)
