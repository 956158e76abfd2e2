import random

import pytest

from phinewton.polyring import (
    IntPoly,
    gauss_valuation,
    is_power_of_phibar,
    phi_expand,
    poly_divmod,
)
from phinewton.valuation import INFINITY, ValuationDomain

D2 = ValuationDomain.p_adic(2)
D3 = ValuationDomain.p_adic(3)


def random_poly(rng, max_degree, bound=50, monic=False):
    deg = rng.randint(0 if not monic else 1, max_degree)
    coeffs = [rng.randint(-bound, bound) for _ in range(deg + 1)]
    if monic:
        coeffs[-1] = 1
    elif all(c == 0 for c in coeffs):
        coeffs[-1] = 1
    return IntPoly(coeffs)


class TestIntPoly:
    def test_zero_polynomial(self):
        z = IntPoly()
        assert z.is_zero
        assert z.degree == -1
        assert z == IntPoly([0, 0])
        assert not z

    def test_trailing_zeros_stripped(self):
        assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)

    def test_arithmetic(self):
        x = IntPoly.x()
        f = x**2 + 2 * x + 3
        assert f.coeffs == (3, 2, 1)
        assert (f - f).is_zero
        assert (x + 1) * (x - 1) == x**2 - 1
        assert (x + 1) ** 2 == x**2 + 2 * x + 1
        assert f.evaluate(2) == 11

    def test_rejects_non_integer_coefficients(self):
        with pytest.raises(TypeError):
            IntPoly([1.5])

    def test_hash_eq(self):
        assert hash(IntPoly([1, 2])) == hash(IntPoly((1, 2)))
        assert IntPoly([5]) == 5


class TestDivmod:
    def test_phi_equals_x_reads_off_coefficients(self):
        q, r = poly_divmod(IntPoly([3, 2, 1]), IntPoly.x())
        assert q == IntPoly([2, 1])
        assert r == IntPoly([3])

    def test_exact_square(self):
        phi = IntPoly([1, 1, 1])
        q, r = poly_divmod(phi * phi, phi)
        assert q == phi
        assert r.is_zero

    def test_x3_plus_5_by_x_plus_1(self):
        q, r = poly_divmod(IntPoly([5, 0, 0, 1]), IntPoly([1, 1]))
        assert q == IntPoly([1, -1, 1])
        assert r == IntPoly([4])
        assert q * IntPoly([1, 1]) + r == IntPoly([5, 0, 0, 1])

    def test_non_monic_divisor_rejected(self):
        with pytest.raises(ValueError):
            poly_divmod(IntPoly([1, 1]), IntPoly([1, 2]))
        with pytest.raises(ValueError):
            poly_divmod(IntPoly([1, 1]), IntPoly())

    def test_multiply_back_random(self):
        rng = random.Random(5)
        for _ in range(300):
            den = random_poly(rng, 6, monic=True)
            num = random_poly(rng, 12)
            q, r = poly_divmod(num, den)
            assert q * den + r == num
            assert r.degree < den.degree


class TestPhiExpand:
    def test_degree12_expansion(self):
        phi = IntPoly([1, 1, 1])
        x = IntPoly.x()
        f = (
            phi**6
            + 24 * x * phi**3
            + 9 * IntPoly([32, 16]) * phi
            + 3 * IntPoly([16, 16])
        )
        exp = phi_expand(f, phi, D2)
        assert exp.coeffs == (
            IntPoly([48, 48]),
            IntPoly([288, 144]),
            IntPoly(),
            IntPoly([0, 24]),
            IntPoly(),
            IntPoly(),
            IntPoly([1]),
        )
        assert exp.valuations == (4, 4, INFINITY, 3, INFINITY, INFINITY, 0)
        assert exp.recompose() == f

    def test_exact_power(self):
        phi = IntPoly([3, 1, 1])
        exp = phi_expand(phi**2, phi, D2)
        assert exp.coeffs == (IntPoly(), IntPoly(), IntPoly.one())
        assert exp.valuations == (INFINITY, INFINITY, 0)

    def test_x4_plus_4(self):
        # x^4 + 4 = phi^2 - 4*phi + 8 for phi = x^2 + 2
        phi = IntPoly([2, 0, 1])
        f = IntPoly([4, 0, 0, 0, 1])
        exp = phi_expand(f, phi, D2)
        assert exp.coeffs == (IntPoly([8]), IntPoly([-4]), IntPoly([1]))
        assert exp.valuations == (3, 2, 0)
        assert exp.recompose() == f

    def test_recomposition_random(self):
        rng = random.Random(17)
        for _ in range(200):
            phi = random_poly(rng, 4, bound=8, monic=True)
            if phi.degree < 1:
                continue
            f = random_poly(rng, 40, bound=1000, monic=True)
            exp = phi_expand(f, phi, D2)
            assert exp.recompose() == f
            assert all(a.degree < phi.degree for a in exp.coeffs)

    def test_uniqueness(self):
        # any coefficient list with deg a_i < deg phi recomposes and re-expands
        # to itself
        rng = random.Random(23)
        phi = IntPoly([2, 3, 1])
        for _ in range(100):
            coeffs = [
                IntPoly([rng.randint(-9, 9), rng.randint(-9, 9)])
                for _ in range(rng.randint(1, 6))
            ]
            coeffs.append(IntPoly.one())
            f = IntPoly.zero()
            for i, a in enumerate(coeffs):
                f = f + a * phi**i
            exp = phi_expand(f, phi, D2)
            assert list(exp.coeffs) == coeffs

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            phi_expand(IntPoly(), IntPoly.x(), D2)
        with pytest.raises(ValueError):
            phi_expand(IntPoly.one(), IntPoly([2, 2]), D2)
        with pytest.raises(ValueError):
            phi_expand(IntPoly.one(), IntPoly([5]), D2)


class TestGaussValuation:
    def test_examples(self):
        assert gauss_valuation(IntPoly([480, 240]), D2) == 4
        assert gauss_valuation(IntPoly(), D2) is INFINITY
        assert gauss_valuation(IntPoly([27, 9]), D3) == 2

    def test_per_coefficient_oracle(self):
        rng = random.Random(29)
        for _ in range(100):
            a = random_poly(rng, 8, bound=10**6)
            expected = min(
                D3.valuation(c) for c in a.coeffs if c != 0
            )
            assert gauss_valuation(a, D3) == expected

    def test_gauss_lemma_multiplicativity(self):
        rng = random.Random(31)
        for domain in (D2, D3):
            for _ in range(200):
                a = random_poly(rng, 6)
                b = random_poly(rng, 6)
                assert gauss_valuation(a * b, domain) == gauss_valuation(
                    a, domain
                ) + gauss_valuation(b, domain)


class TestIsPowerOfPhibar:
    def test_difference_divisible(self):
        assert is_power_of_phibar(IntPoly([3, 1, 1]), IntPoly([1, 1, 1]), D2)

    def test_nonzero_constant(self):
        assert not is_power_of_phibar(IntPoly([1, 0, 1]), IntPoly.x(), D3)

    def test_degree12_case(self):
        phi = IntPoly([1, 1, 1])
        x = IntPoly.x()
        f = (
            phi**6
            + 24 * x * phi**3
            + 9 * IntPoly([32, 16]) * phi
            + 3 * IntPoly([16, 16])
        )
        assert is_power_of_phibar(f, phi, D2)

    def test_degree_mismatch(self):
        assert not is_power_of_phibar(IntPoly([1, 0, 0, 1]), IntPoly([1, 1, 1]), D2)

    def test_requires_monic(self):
        with pytest.raises(ValueError):
            is_power_of_phibar(IntPoly([1, 2]), IntPoly.x(), D2)
