"""Exact modular arithmetic for moduli up to 2**62, primality and sieving."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

MODULUS_CAP = 1 << 62

# Deterministic Miller-Rabin witnesses; correct for every n < 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NotInvertibleError(ArithmeticError):
    """Raised when an inverse is requested for a non-unit."""


def _check_modulus(m: int) -> None:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if m > MODULUS_CAP:
        raise ValueError(f"modulus {m} exceeds the 2**62 cap")


def mul_mod(a: int, b: int, m: int) -> int:
    _check_modulus(m)
    # Python ints are arbitrary precision, so the product never loses bits.
    return (a * b) % m


def pow_mod(base: int, exp: int, m: int) -> int:
    """Square-and-multiply ``base**exp mod m``."""
    _check_modulus(m)
    if exp < 0:
        raise ValueError("negative exponent; use inv_mod first")
    result = 1 % m
    base %= m
    while exp:
        if exp & 1:
            result = result * base % m
        base = base * base % m
        exp >>= 1
    return result


_VEC_MODULUS_LIMIT = 1 << 40
_SPLIT = 21


def _mul_mod_array(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    # a, b < m < 2**40: split b at 21 bits so no int64 product exceeds 2**62
    hi, lo = b >> _SPLIT, b & ((1 << _SPLIT) - 1)
    return (((a * hi) % m << _SPLIT) + a * lo) % m


def pow_mod_array(bases, exp: int, m: int) -> np.ndarray:
    """Elementwise ``bases**exp mod m`` with exact int64 arithmetic.

    Moduli at or above 2**40 fall back to Python integers.
    """
    _check_modulus(m)
    bases = np.asarray(bases, dtype=np.int64) % m
    if m >= _VEC_MODULUS_LIMIT:
        return np.array([pow(int(x), exp, m) for x in bases], dtype=np.int64)
    result = np.full(bases.shape, 1 % m, dtype=np.int64)
    while exp:
        if exp & 1:
            result = _mul_mod_array(result, bases, m)
        bases = _mul_mod_array(bases, bases, m)
        exp >>= 1
    return result


def inv_mod(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` by the extended Euclidean algorithm."""
    _check_modulus(m)
    r0, r1 = a % m, m
    s0, s1 = 1, 0
    while r1:
        quot = r0 // r1
        r0, r1 = r1, r0 - quot * r1
        s0, s1 = s1, s0 - quot * s1
    if r0 != 1:
        raise NotInvertibleError(f"{a} is not invertible mod {m} (gcd={r0})")
    return s0 % m


def is_prime(n: int) -> bool:
    """Deterministic primality for ``n < 2**64``."""
    if n >= 1 << 64:
        raise ValueError("is_prime is only certified below 2**64")
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_mask(n: int) -> np.ndarray:
    """Boolean array ``mask[k]`` telling whether ``k`` is prime, for ``0 <= k <= n``."""
    mask = np.ones(max(n + 1, 2), dtype=bool)
    mask[:2] = False
    for i in range(2, math.isqrt(n) + 1):
        if mask[i]:
            mask[i * i :: i] = False
    return mask[: n + 1]


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    return np.flatnonzero(prime_mask(n)).tolist()


def odd_primes_up_to(n: int) -> list[int]:
    return [p for p in primes_up_to(n) if p > 2]


def smallest_prime_factors(n: int) -> np.ndarray:
    """``spf[k]`` is the least prime dividing ``k`` (``spf[0] = spf[1] = 0``)."""
    spf = np.zeros(max(n + 1, 2), dtype=np.int64)
    for i in range(2, math.isqrt(n) + 1):
        if spf[i] == 0:
            block = spf[i * i :: i]
            block[block == 0] = i
    rest = np.flatnonzero(spf == 0)
    spf[rest[rest >= 2]] = rest[rest >= 2]
    spf[:2] = 0
    return spf[: n + 1]


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of ``a`` modulo the odd prime ``p`` (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


@dataclass(frozen=True)
class PrimeContext:
    """An odd prime together with the constants every other module needs."""

    p: int
    p_squared: int = field(init=False)
    sqrt_floor: int = field(init=False)
    bound_half: int = field(init=False)
    bound_quarter: int = field(init=False)

    def __post_init__(self):
        p = self.p
        if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
            raise TypeError(f"p must be an integer, got {type(p).__name__}")
        p = int(p)
        object.__setattr__(self, "p", p)
        if p < 3 or p % 2 == 0 or not is_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        if p * p > MODULUS_CAP:
            raise ValueError(f"p**2 exceeds the 2**62 modulus cap for p={p}")
        object.__setattr__(self, "p_squared", p * p)
        object.__setattr__(self, "sqrt_floor", math.isqrt(p))
        object.__setattr__(self, "bound_half", (p + 1) // 2)
        object.__setattr__(self, "bound_quarter", (p + 5) // 4)

    def inv(self, a: int) -> int:
        return inv_mod(a, self.p)

    def inverse_table(self) -> np.ndarray:
        """``inv[j] = j**-1 mod p`` for ``1 <= j < p`` (``inv[0] = 0``)."""
        p = self.p
        inv = np.zeros(p, dtype=np.int64)
        if p > 1:
            inv[1] = 1
        for j in range(2, p):
            inv[j] = (p - (p // j) * int(inv[p % j]) % p) % p
        return inv
