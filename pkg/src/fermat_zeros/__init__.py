"""Fermat quotients, Mirimanoff polynomial zeros and the Gauss sums tied to them."""

from .arith import PrimeContext, inv_mod, is_prime, mul_mod, pow_mod, primes_up_to
from .fermat import QuotientTable, fermat_quotient, kappa, quotient_table, wieferich_scan
from .mirimanoff import Orbit, OrbitLabel, ZeroProfile, gamma_eval, gamma_via_quotients, orbit_decompose, zero_profile
from .report import VerificationReport

__all__ = [
    "PrimeContext",
    "QuotientTable",
    "ZeroProfile",
    "Orbit",
    "OrbitLabel",
    "VerificationReport",
    "mul_mod",
    "pow_mod",
    "inv_mod",
    "is_prime",
    "primes_up_to",
    "fermat_quotient",
    "quotient_table",
    "kappa",
    "wieferich_scan",
    "gamma_eval",
    "gamma_via_quotients",
    "zero_profile",
    "orbit_decompose",
]
