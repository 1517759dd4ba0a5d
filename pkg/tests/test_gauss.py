import cmath

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from fermat_zeros.arith import PrimeContext
from fermat_zeros.gauss import (
    CharacterPower,
    CycloElement,
    cocycle_identity_check,
    cyclo_add,
    cyclo_mul,
    factor_system_check,
    galois_apply,
    galois_identity_check,
    gauss_sum,
    gauss_sum_formula,
    omega_formula,
    tau,
    zeta_p_power,
)
from fermat_zeros.relations import verify_three_term

GAUSS_PRIMES = [3, 5, 7, 11, 13]
X = sympy.Symbol("x")


def as_sympy(el: CycloElement):
    return sum(int(c) * X**i for i, c in enumerate(el.coeffs))


def elements(p, max_coeff=20):
    n = p * p - p
    return st.lists(st.integers(-max_coeff, max_coeff), min_size=n, max_size=n).map(
        lambda c: CycloElement(PrimeContext(p), c)
    )


def embed(el: CycloElement):
    p2 = el.context.p_squared
    return sum(int(c) * cmath.exp(2j * cmath.pi * i / p2) for i, c in enumerate(el.coeffs))


class TestRing:
    def test_one_is_identity(self):
        ctx = PrimeContext(5)
        one = CycloElement.monomial(ctx, 0)
        x = CycloElement(ctx, np.arange(20) - 7)
        assert x * one == x

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_exponent_law(self, p):
        ctx = PrimeContext(p)
        for a in range(0, p * p, 3):
            for b in range(0, p * p, 5):
                prod = CycloElement.monomial(ctx, a) * CycloElement.monomial(ctx, b)
                assert prod == CycloElement.monomial(ctx, (a + b) % (p * p))

    @pytest.mark.parametrize("p", GAUSS_PRIMES)
    def test_cyclotomic_relation(self, p):
        ctx = PrimeContext(p)
        total = CycloElement.zero(ctx)
        for i in range(p):
            total = total + zeta_p_power(ctx, i)
        assert total == CycloElement.zero(ctx)

    @pytest.mark.parametrize("p", [3, 5])
    @given(data=st.data())
    def test_mul_matches_sympy_remainder(self, p, data):
        x = data.draw(elements(p))
        y = data.draw(elements(p))
        phi = sympy.cyclotomic_poly(p * p, X)
        expected = sympy.Poly(sympy.rem(as_sympy(x) * as_sympy(y), phi, X), X)
        got = sympy.Poly(as_sympy(cyclo_mul(x, y)), X)
        assert (expected - got).is_zero

    @given(elements(7, 5), elements(7, 5))
    def test_mul_matches_complex_embedding(self, x, y):
        assert abs(embed(x * y) - embed(x) * embed(y)) < 1e-6 * (1 + abs(embed(x)) * abs(embed(y)))

    @given(elements(5), elements(5))
    def test_add_commutes(self, x, y):
        assert cyclo_add(x, y) == cyclo_add(y, x)
        assert x - x == CycloElement.zero(x.context)

    def test_context_mismatch(self):
        with pytest.raises(ValueError):
            CycloElement.monomial(PrimeContext(3), 1) * CycloElement.monomial(PrimeContext(5), 1)

    def test_overflow_detected(self):
        ctx = PrimeContext(3)
        big = CycloElement(ctx, [1 << 40] * 6)
        with pytest.raises(OverflowError):
            big * big

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            CycloElement(PrimeContext(3), [1, 2, 3])


class TestGalois:
    def test_identity(self):
        ctx = PrimeContext(7)
        x = tau(ctx, 3) + CycloElement.monomial(ctx, 11, 4)
        assert galois_apply(x, 1) == x

    @pytest.mark.parametrize("p", [5, 7])
    def test_group_law(self, p):
        ctx = PrimeContext(p)
        x = CycloElement(ctx, np.arange(p * p - p) % 7 - 3)
        units = [k for k in range(1, p * p) if k % p][:12]
        for k in units:
            for k2 in units:
                assert galois_apply(galois_apply(x, k), k2) == galois_apply(x, k * k2 % (p * p))

    @given(elements(5, 10), elements(5, 10), st.integers(1, 24).filter(lambda k: k % 5))
    def test_homomorphism(self, x, y, k):
        assert galois_apply(x + y, k) == galois_apply(x, k) + galois_apply(y, k)
        assert galois_apply(x * y, k) == galois_apply(x, k) * galois_apply(y, k)

    def test_rejects_non_unit(self):
        with pytest.raises(ValueError):
            galois_apply(tau(PrimeContext(5), 1), 10)

    def test_tau_action_p5_k2(self):
        ctx = PrimeContext(5)
        lhs = galois_apply(tau(ctx, 1), 2)
        chi_bar = zeta_p_power(ctx, -CharacterPower(ctx, 2).value(2))
        assert lhs == chi_bar * tau(ctx, 2)
        assert galois_identity_check(ctx, 2)


class TestCharacter:
    @pytest.mark.parametrize("p", GAUSS_PRIMES)
    def test_invariants(self, p):
        ctx = PrimeContext(p)
        m = p * p
        units = [a for a in range(1, m) if a % p]
        for k in range(p):
            chi = CharacterPower(ctx, k)
            assert chi.value(m - 1) == 0  # even
            assert chi.value(1 - p + m) == k % p  # normalisation at 1 - p
            for a in units[:: max(1, len(units) // 15)]:
                for b in units[:: max(1, len(units) // 15)]:
                    assert chi.value(a * b % m) == (chi.value(a) + chi.value(b)) % p
        # order p: chi^p is principal
        assert all(CharacterPower(ctx, p).value(a) == 0 for a in units)

    def test_values_table_matches_pointwise(self):
        ctx = PrimeContext(7)
        chi = CharacterPower(ctx, 3)
        a, v = chi.values()
        assert v.tolist() == [chi.value(int(x)) for x in a]


class TestGaussSums:
    @pytest.mark.parametrize("p", GAUSS_PRIMES)
    def test_principal_is_zero(self, p):
        ctx = PrimeContext(p)
        assert gauss_sum(ctx, CharacterPower(ctx, 0)) == CycloElement.zero(ctx)

    @pytest.mark.parametrize("p", GAUSS_PRIMES)
    def test_tau_chi(self, p):
        ctx = PrimeContext(p)
        expected = np.zeros(p * p - p, dtype=np.int64)
        expected[1] = p
        assert np.array_equal(tau(ctx, 1).coeffs, expected)

    @pytest.mark.parametrize("p", GAUSS_PRIMES)
    def test_closed_form(self, p):
        ctx = PrimeContext(p)
        for k in range(1, p * p):
            if k % p:
                assert gauss_sum(ctx, CharacterPower(ctx, k)) == gauss_sum_formula(ctx, k)

    def test_tau_embedding_magnitude(self):
        ctx = PrimeContext(11)
        for k in range(1, 11):
            assert abs(abs(embed(tau(ctx, k))) - 11) < 1e-9

    @pytest.mark.parametrize("p", GAUSS_PRIMES)
    def test_norm(self, p):
        ctx = PrimeContext(p)
        p2 = CycloElement.monomial(ctx, 0, p * p)
        for k in range(1, p):
            assert tau(ctx, k) * galois_apply(tau(ctx, k), -1) == p2


class TestFactorSystem:
    def test_p3_derived(self):
        ctx = PrimeContext(3)
        assert omega_formula(ctx, 1, 1) == zeta_p_power(ctx, 1, 3)
        assert tau(ctx, 1) * tau(ctx, 1) == CycloElement.monomial(ctx, 2, 9)
        assert tau(ctx, 2) == CycloElement.monomial(ctx, 3 * 2 + 2, 3)
        assert factor_system_check(ctx, 1, 1)

    @pytest.mark.parametrize("p", GAUSS_PRIMES)
    def test_exhaustive(self, p):
        ctx = PrimeContext(p)
        for k in range(1, p):
            for l in range(1, p):
                if (k + l) % p:
                    assert factor_system_check(ctx, k, l)
                    assert omega_formula(ctx, k, l) == omega_formula(ctx, l, k)

    def test_precondition(self):
        with pytest.raises(ValueError):
            factor_system_check(PrimeContext(5), 2, 3)

    def test_capped_at_13(self):
        with pytest.raises(ValueError):
            factor_system_check(PrimeContext(17), 1, 1)


class TestCocycle:
    def test_111_p5(self):
        assert cocycle_identity_check(PrimeContext(5), 1, 1, 1)

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_exhaustive_and_matches_three_term(self, p):
        ctx = PrimeContext(p)
        for k in range(1, p):
            for l in range(1, p):
                for j in range(1, p):
                    if (k + l) % p and (l + j) % p and (k + l + j) % p:
                        assert cocycle_identity_check(ctx, k, l, j)
                        assert verify_three_term(ctx, k, l, j)

    def test_precondition_named(self):
        with pytest.raises(ValueError, match="l\\+j"):
            cocycle_identity_check(PrimeContext(7), 1, 3, 4)
