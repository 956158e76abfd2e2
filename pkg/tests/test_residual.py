import random

import pytest

from phinewton.oracles import gen_power_family
from phinewton.polygon import Side, build_polygon
from phinewton.polyring import IntPoly, phi_expand
from phinewton.residual import residual_coefficient, residual_polynomial
from phinewton.residue_field import ExtPoly, FpPoly, ext_field
from phinewton.valuation import ValuationDomain

D2 = ValuationDomain.p_adic(2)


def expansion_polygon(f, phi, domain):
    exp = phi_expand(f, phi, domain)
    return exp, build_polygon(exp.points())


class TestResidualCoefficient:
    def test_point_strictly_above_is_zero(self):
        phi = IntPoly([1, 1, 1])
        x = IntPoly.x()
        f = (
            phi**6
            + 24 * x * phi**3
            + 9 * IntPoly([32, 16]) * phi
            + 3 * IntPoly([16, 16])
        )
        exp, np_ = expansion_polygon(f, phi, D2)
        side = np_.sides[0]
        phibar = FpPoly(2, [1, 1, 1])
        # (3, 3) sits strictly above the line, whose height at 3 is 2
        assert side.height_at(3) == 2
        assert residual_coefficient(exp, side, 3, phibar).is_zero
        # vanished expansion coefficient also gives zero
        assert residual_coefficient(exp, side, 2, phibar).is_zero
        # start vertex: class of (48x+48)/2^4 = 3x+3 = x+1 mod (2, phibar)
        field = ext_field(phibar)
        assert residual_coefficient(exp, side, 0, phibar) == field.gen + field.one

    def test_index_out_of_range(self):
        exp, np_ = expansion_polygon(IntPoly([2, 2, 1]), IntPoly.x(), D2)
        phibar = FpPoly.x(2)
        with pytest.raises(ValueError):
            residual_coefficient(exp, np_.sides[0], 3, phibar)
        with pytest.raises(ValueError):
            residual_coefficient(exp, np_.sides[0], -1, phibar)

    def test_mismatched_phibar_rejected(self):
        exp, np_ = expansion_polygon(IntPoly([2, 2, 1]), IntPoly.x(), D2)
        with pytest.raises(ValueError):
            residual_coefficient(exp, np_.sides[0], 0, FpPoly(2, [1, 1]))


class TestResidualPolynomial:
    def test_eisenstein_linear(self):
        # x^2 + 2x + 2: side (0,1)->(2,0), e=2, d=1, residual y + 1
        exp, np_ = expansion_polygon(IntPoly([2, 2, 1]), IntPoly.x(), D2)
        rp = residual_polynomial(exp, np_.sides[0], FpPoly.x(2))
        field = ext_field(FpPoly.x(2))
        assert rp.degree == 1
        assert rp.ts == (field.one, field.one)

    def test_height4_length6_zero_middle_coefficient(self):
        # the quadratic residual of the single (0,4)->(6,0) side has a zero
        # y-coefficient because (3,3) lies strictly above the side
        x = IntPoly.x()
        for phi in (IntPoly.x(), IntPoly([1, 1])):
            f = (
                phi**6
                + 24 * x * phi**4
                + 24 * phi**3
                + 15 * IntPoly([32, 16]) * phi
                + IntPoly([48])
            )
            exp, np_ = expansion_polygon(f, phi, D2)
            assert len(np_.sides) == 1
            phibar = phi.reduce_mod(2)
            rp = residual_polynomial(exp, np_.sides[0], phibar)
            field = ext_field(phibar)
            assert rp.ts == (field.one, field.zero, field.one)
            assert rp.as_ext_poly() == ExtPoly(field, [1, 0, 1])  # y^2 + 1
            assert rp.as_ext_poly() != ExtPoly(field, [1, 1, 1])  # not y^2+y+1
            assert str(rp) == "y^2 + 1"

    def test_degree12_extension_residual(self):
        phi = IntPoly([1, 1, 1])
        x = IntPoly.x()
        f = (
            phi**6
            + 24 * x * phi**3
            + 9 * IntPoly([32, 16]) * phi
            + 3 * IntPoly([16, 16])
        )
        exp, np_ = expansion_polygon(f, phi, D2)
        phibar = FpPoly(2, [1, 1, 1])
        rp = residual_polynomial(exp, np_.sides[0], phibar)
        field = ext_field(phibar)
        b = field.gen
        assert rp.ts == (b + field.one, field.zero, field.one)
        assert str(rp) == "(x + 1)*y^2 + 1"

    def test_slope_zero_side_is_reduction_mod_p(self):
        # unit coefficients, phi = x: the slope-0 residual coefficients match
        # the plain mod-p reduction of f coefficient by coefficient
        rng = random.Random(61)
        for p in (2, 3, 5):
            domain = ValuationDomain.p_adic(p)
            for _ in range(30):
                n = rng.randint(2, 9)
                coeffs = [rng.randrange(1, p) for _ in range(n)] + [1]
                f = IntPoly(coeffs)
                exp, np_ = expansion_polygon(f, IntPoly.x(), domain)
                assert len(np_.sides) == 1 and np_.sides[0].slope == 0
                rp = residual_polynomial(exp, np_.sides[0], FpPoly.x(p))
                got = [t.value.coeffs[0] if t.value.coeffs else 0 for t in rp.ts]
                assert got == [c % p for c in coeffs]

    def test_positive_slope_rejected(self):
        exp, _ = expansion_polygon(IntPoly([2, 2, 1]), IntPoly.x(), D2)
        rising = Side.from_endpoints((0, 0), (2, 2))
        with pytest.raises(ValueError):
            residual_polynomial(exp, rising, FpPoly.x(2))

    def test_endpoints_nonzero_random(self):
        rng = random.Random(67)
        for p in (2, 3):
            domain = ValuationDomain.p_adic(p)
            phi = IntPoly([1, 1])
            for f in gen_power_family(domain, phi, 40, seed=rng.randrange(2**30)):
                exp, np_ = expansion_polygon(f, phi, domain)
                for side in np_.principal_part().sides:
                    rp = residual_polynomial(exp, side, phi.reduce_mod(p))
                    assert not rp.ts[0].is_zero
                    assert not rp.ts[-1].is_zero
                    assert rp.degree == side.degree


class TestResidualMultiplicativity:
    def test_product_residuals_match_up_to_scalar(self):
        rng = random.Random(71)
        for p in (2, 3, 5):
            domain = ValuationDomain.p_adic(p)
            for phi in (IntPoly.x(), IntPoly([1, 1, 1])):
                if p == 3 and phi.degree == 2:
                    continue
                phibar = phi.reduce_mod(p)
                gs = gen_power_family(domain, phi, 20, seed=rng.randrange(2**30))
                for g, h in zip(gs[::2], gs[1::2]):
                    self._check_pair(domain, phi, phibar, g, h)

    @staticmethod
    def _check_pair(domain, phi, phibar, g, h):
        field = ext_field(phibar)
        exp_g = phi_expand(g, phi, domain)
        exp_h = phi_expand(h, phi, domain)
        exp_gh = phi_expand(g * h, phi, domain)
        np_g = build_polygon(exp_g.points())
        np_h = build_polygon(exp_h.points())
        np_gh = build_polygon(exp_gh.points())
        for side in np_gh.sides:
            expected = ExtPoly(field, [field.one])
            for exp_f, np_f in ((exp_g, np_g), (exp_h, np_h)):
                s = np_f.side_at_slope(side.slope)
                if s is not None:
                    expected = expected * residual_polynomial(
                        exp_f, s, phibar
                    ).as_ext_poly()
            got = residual_polynomial(exp_gh, side, phibar).as_ext_poly()
            assert got.degree == expected.degree
            # equality up to a nonzero scalar of F_phi
            assert got.scale(expected.lead) == expected.scale(got.lead)
