"""Fermat quotients, quotient tables built with the logarithm law, kappa and Wieferich scans."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import PrimeContext, odd_primes_up_to, pow_mod, pow_mod_array, primes_up_to, smallest_prime_factors
from .parallel import ordered_map


def fermat_quotient(ctx: PrimeContext, k: int) -> int:
    """Residue ``r`` in ``[0, p)`` with ``k**(p-1) = 1 + r*p (mod p**2)``."""
    p, m = ctx.p, ctx.p_squared
    if k % p == 0:
        raise ValueError(f"Fermat quotient undefined: p={p} divides k={k}")
    power = pow_mod(k % m, p - 1, m)
    r, rem = divmod(power - 1, p)
    if rem:
        raise ArithmeticError(f"inexact division computing q_{p}({k})")
    return r


class _FactorLayers:
    """Integers ``2..n`` grouped by number of prime factors, with their least prime factor."""

    def __init__(self, n: int):
        self.n = n
        self.spf = smallest_prime_factors(n)
        k = np.arange(n + 1, dtype=np.int64)
        cofactor = np.ones(n + 1, dtype=np.int64)
        cofactor[2:] = k[2:] // self.spf[2:]
        self.cofactor = cofactor
        omega = np.zeros(n + 1, dtype=np.int64)
        for i in range(2, n + 1):
            omega[i] = omega[cofactor[i]] + 1
        self.layers = [np.flatnonzero(omega == w) for w in range(1, int(omega.max(initial=0)) + 1)]


@lru_cache(maxsize=4)
def _layers_for(n: int) -> _FactorLayers:
    return _FactorLayers(n)


def _layers_covering(n: int) -> _FactorLayers:
    size = 1024
    while size < n:
        size *= 2
    return _layers_for(size)


@dataclass(frozen=True, eq=False)
class QuotientTable:
    """``q[k]`` is ``q_p(k)`` for ``1 <= k <= p-1``; ``q[0]`` is an unused 0."""

    context: PrimeContext
    q: np.ndarray

    def __getitem__(self, k: int) -> int:
        if not 1 <= k < self.context.p:
            raise IndexError(f"quotient table index {k} outside [1, {self.context.p - 1}]")
        return int(self.q[k])


def quotient_table(ctx: PrimeContext) -> QuotientTable:
    """Fermat quotients of ``1..p-1``.

    Exponentiation happens only at primes; every composite ``k`` is filled as
    ``q[spf(k)] + q[k / spf(k)] mod p``, layer by layer in the number of prime
    factors so each layer is a single vectorised step.
    """
    p, m = ctx.p, ctx.p_squared
    fl = _layers_covering(p)
    q = np.zeros(p, dtype=np.int64)
    if not fl.layers:
        return QuotientTable(ctx, q)
    primes = fl.layers[0]
    primes = primes[: np.searchsorted(primes, p)]
    r, rem = np.divmod(pow_mod_array(primes, p - 1, m) - 1, p)
    if rem.any():
        raise ArithmeticError(f"inexact division in the quotient table for p={p}")
    q[primes] = r
    for layer in fl.layers[1:]:
        idx = layer[: np.searchsorted(layer, p)]
        if idx.size == 0:
            break
        q[idx] = (q[fl.spf[idx]] + q[fl.cofactor[idx]]) % p
    q.setflags(write=False)
    return QuotientTable(ctx, q)


def kappa(ctx: PrimeContext, table: QuotientTable | None = None) -> int:
    """Least ``n > 0`` with ``q_p(n) != 0``; only primes are tried."""
    for ell in _small_primes(ctx.bound_half):
        qv = table[ell] if table is not None else fermat_quotient(ctx, ell)
        if qv != 0:
            return ell
    raise AssertionError(
        f"kappa search for p={ctx.p} passed (p+1)/2 = {ctx.bound_half} without a nonzero quotient"
    )


@lru_cache(maxsize=64)
def _small_primes(n: int) -> tuple[int, ...]:
    return tuple(primes_up_to(n))


def _scan_chunk(args: tuple[int, list[int]]) -> list[int]:
    base, primes = args
    return [p for p in primes if base % p and pow(base, p - 1, p * p) == 1]


def wieferich_scan(
    base: int,
    limit: int,
    congruence: tuple[int, int] | None = None,
    jobs: int = 1,
    chunk: int = 20000,
) -> list[int]:
    """Odd primes ``p <= limit`` with ``p`` not dividing ``base`` and ``q_p(base) = 0``.

    ``congruence=(r, m)`` restricts the candidates to ``p = r (mod m)``.
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if limit < 3:
        raise ValueError(f"limit must be >= 3, got {limit}")
    primes = odd_primes_up_to(limit)
    if congruence is not None:
        r, mod = congruence
        primes = [p for p in primes if p % mod == r % mod]
    chunks = [(base, primes[i : i + chunk]) for i in range(0, len(primes), chunk)]
    hits: list[int] = []
    for part in ordered_map(_scan_chunk, chunks, jobs=jobs):
        hits.extend(part)
    return hits
