"""Worked integrals: exact tables, reference digits, structure checks."""

import cmath
import math
from fractions import Fraction

import pytest

from saddlepoint.classic import (agreement_digits,
                                 center_d_values, center_fs_polynomial,
                                 center_gamma, center_normal_form,
                                 center_q_coeffs, center_saddle,
                                 equation_of_center, gamma_report,
                                 gamma_stirling, kepler_d_table, kepler_plain,
                                 parabolic, parabolic_d_table,
                                 parabolic_q_table)
from saddlepoint.series import TruncatedSeries

# reference values for the worked integrals at N = 50 (12-digit
# evaluations of the integrals themselves)
KEPLER_REF = 0.762835382546
CENTER_REF = 2.8171413884e-14
PARABOLIC_REF = -9.357585773084


class TestExactTables:
    def test_stirling_rationals(self):
        assert gamma_stirling(3) == [
            Fraction(1, 12), Fraction(1, 288), Fraction(-139, 51840)]

    def test_kepler_d(self):
        d = kepler_d_table(8)
        assert d[0] == 1
        assert d[2] == Fraction(1, 20)
        assert d[4] == Fraction(1, 280)
        assert d[6] == Fraction(1, 3600)
        assert d[8] == Fraction(387, 17248000)
        assert all(d[s] == 0 for s in (1, 3, 5, 7))

    def test_parabolic_dstar(self):
        d = parabolic_d_table(8)
        assert d[0] == 2
        assert d[2] == Fraction(1, 5)
        assert d[4] == Fraction(27, 1400)
        assert d[6] == Fraction(23, 12600)
        assert d[8] == Fraction(947, 5544000)
        assert all(d[s] == 0 for s in (1, 3, 5, 7))

    def test_parabolic_q_against_series_recip_oracle(self):
        # z^2/(1 - cos z) built independently by inverting the series
        # of (1 - cos z)/z^2
        order = 12
        inv = [0.0] * (order + 1)
        for k in range(0, order + 1, 2):
            inv[k] = (-1) ** (k // 2) / math.factorial(k + 2)
        oracle = TruncatedSeries(0.0, inv).recip()
        table = parabolic_q_table(order)
        for s in range(order + 1):
            assert abs(float(table[s]) - oracle.coeffs[s].real) < 1e-13
            assert abs(oracle.coeffs[s].imag) < 1e-15


class TestGammaReport:
    def test_agreement(self):
        report = gamma_report(50.0, 3)
        assert report.agreement_digits >= 9
        assert report.oracle.converged
        # relative to the factorial integral over the whole half line
        from scipy.special import gammaln
        full = math.exp(gammaln(51.0) - 51.0 * math.log(50.0))
        assert abs(report.oracle_value - full) / full < 1e-11

    def test_table_contents(self):
        report = gamma_report(50.0, 3)
        assert report.coefficient_table == (
            Fraction(1, 12), Fraction(1, 288), Fraction(-139, 51840))
        assert report.name == "gamma"

    def test_digits_nondecreasing_in_corrections(self):
        quad = gamma_report(50.0, 1).oracle_value
        prev = -1
        for m in range(1, 5):
            report = gamma_report(50.0, m)
            digits = agreement_digits(report.expansion_value, quad)
            assert digits >= prev
            prev = digits


class TestKepler:
    def test_reference_digits(self):
        report = kepler_plain(10, 50.0)
        assert report.oracle.converged
        assert abs(report.oracle_value - KEPLER_REF) / KEPLER_REF < 2e-12
        rel = abs(report.expansion_value - report.oracle_value) / abs(report.oracle_value)
        assert rel < 5e-9
        assert report.agreement_digits >= 8
        assert f"{report.expansion_value.real:.8f}".startswith("0.76283538")

    def test_digits_nondecreasing_in_order(self):
        quad = kepler_plain(1, 50.0).oracle_value
        prev = -1
        for s_count in range(1, 11):
            report = kepler_plain(s_count, 50.0)
            digits = agreement_digits(report.expansion_value, quad)
            assert digits >= prev
            prev = digits

    def test_term_closed_form(self):
        # coefficient of N^{-(s+1)/3} is
        # (2/3) cos(pi (s+1)/6) Gamma((s+1)/3) d(s) 6^{(s+1)/3}
        from scipy.special import gamma as cgamma
        report = kepler_plain(10, 50.0)
        d = kepler_d_table(9)
        for t in report.expansion.terms:
            s = t.s
            want = (2.0 / 3.0 * math.cos(math.pi * (s + 1) / 6)
                    * cgamma((s + 1) / 3) * float(d[s]) * 6.0 ** ((s + 1) / 3))
            assert abs(t.coefficient - want) < 1e-12 * max(1.0, abs(want))
            assert abs(t.exponent - (s + 1) / 3) < 1e-15


class TestCenter:
    def test_q_formula_against_series_oracle(self):
        # q = (z - z0)/(1 - eps cos z): the denominator expands at z0
        # as 1 - cos h + i sqrt(1-eps^2) sin h, so dividing h out and
        # inverting the series rebuilds q independently
        eps = 0.4
        w = math.sqrt(1 - eps * eps)
        z0 = center_saddle(eps)
        order = 14
        den = [0.0 + 0.0j] * (order + 2)
        for k in range(2, order + 2, 2):
            den[k] = -((-1) ** (k // 2)) / math.factorial(k)
        for k in range(1, order + 2, 2):
            den[k] += 1j * w * ((-1) ** ((k - 1) // 2)) / math.factorial(k)
        oracle = TruncatedSeries(z0, den[1:]).recip()
        got = center_q_coeffs(eps, order)
        assert max(abs(a - b) for a, b in zip(got, oracle.coeffs)) < 1e-13

    def test_phase_ratios_against_taylor_oracle(self):
        # i(z - eps sin z) - p(z0) at z0 has the closed Taylor series
        # i h - i eps sin(z0 + h) + i eps sin z0; compare the ratios
        eps = 0.4
        z0 = center_saddle(eps)
        nf = center_normal_form(eps, 10)
        rebuilt = nf.reconstruct()
        for k in range(0, 13):
            h_coeff = 0.0 + 0.0j
            if k == 0:
                h_coeff = 1j * (z0 - eps * cmath.sin(z0))
            elif k == 1:
                h_coeff = 1j * (1 - eps * cmath.cos(z0))
            else:
                # -i eps d^k/dh^k sin(z0 + h) / k!
                cycle = (cmath.sin(z0), cmath.cos(z0),
                         -cmath.sin(z0), -cmath.cos(z0))[k % 4]
                h_coeff = -1j * eps * cycle / math.factorial(k)
            if k <= rebuilt.order:
                assert abs(rebuilt.coeffs[k] - h_coeff) < 1e-14, k

    def test_reference_digits(self):
        report = equation_of_center(0.4, 13, 50.0)
        assert report.oracle.converged
        assert abs(report.oracle_value - CENTER_REF) / CENTER_REF < 1e-10
        assert report.agreement_digits >= 10
        short = equation_of_center(0.4, 5, 50.0)
        assert short.agreement_digits >= 5
        assert f"{short.expansion_value.real:.4e}".startswith("2.8171")

    def test_degenerate_term_constant(self):
        eps = 0.4
        report = equation_of_center(eps, 3, 50.0)
        c0 = report.expansion.terms[0].coefficient
        target = math.pi / math.sqrt(1 - eps * eps)
        assert abs(c0 - target) < 1e-12 * target
        assert report.expansion.terms[0].exponent == 0

    def test_even_terms_vanish(self):
        report = equation_of_center(0.4, 9, 50.0)
        for t in report.expansion.terms[2::2]:
            assert abs(t.coefficient) < 1e-13

    @pytest.mark.parametrize("eps", [0.1 * k for k in range(1, 10)])
    def test_polynomial_structure_f1_f3(self, eps):
        d = center_d_values(eps, 3)
        x = eps * eps
        assert abs(d[1].real * (1 - x) - 2.0 / 3.0) < 1e-12
        assert abs(d[1].imag) < 1e-12
        want3 = -(46 + 189 * x) / 540
        assert abs(d[3].real * (1 - x) ** 2 - want3) < 1e-12

    def test_fs_polynomial_recovery(self):
        coeffs1, res1 = center_fs_polynomial(1)
        assert res1 < 1e-10
        assert abs(coeffs1[0] - 2 / 3) < 1e-10
        coeffs3, res3 = center_fs_polynomial(3)
        assert res3 < 1e-10
        assert abs(coeffs3[0] + 46 / 540) < 1e-9
        assert abs(coeffs3[1] + 189 / 540) < 1e-9
        coeffs5, res5 = center_fs_polynomial(5)
        assert res5 < 1e-10
        for got, want in zip(coeffs5, (92 / 36288, 6228 / 36288, 4887 / 36288)):
            assert abs(got - want) < 1e-8

    def test_prefactor_contracts(self):
        for k in range(1, 10):
            eps = k / 10
            nf = center_normal_form(eps, 4)
            gam = center_gamma(eps)
            want = math.exp(math.sqrt(1 - eps * eps)) / gam
            assert abs(abs(cmath.exp(nf.p_at_z0)) - want) < 1e-13
            assert want < 1.0

    def test_digits_nondecreasing_in_order(self):
        quad = equation_of_center(0.4, 1, 50.0).oracle_value
        prev = -1
        for s_count in range(1, 14):
            report = equation_of_center(0.4, s_count, 50.0)
            digits = agreement_digits(report.expansion_value, quad)
            assert digits >= prev
            prev = digits

    def test_eps_range_rejected(self):
        with pytest.raises(ValueError):
            equation_of_center(1.2, 5, 50.0)
        with pytest.raises(ValueError):
            center_gamma(0.0)


class TestParabolic:
    def test_reference_digits(self):
        report = parabolic(8, 50.0)
        assert report.oracle.converged
        assert abs(report.oracle_value - PARABOLIC_REF) / abs(PARABOLIC_REF) < 1e-10
        assert report.agreement_digits >= 6
        assert f"{report.expansion_value.real:.5f}".startswith("-9.35758")

    def test_first_term_grows_with_n(self):
        # leading exponent (0 - 1)/3 < 0: the main term carries N^{1/3}
        report = parabolic(8, 50.0)
        assert report.expansion.terms[0].exponent.real == pytest.approx(-1 / 3)

    def test_s1_term_vanishes_via_dstar(self):
        report = parabolic(8, 50.0)
        assert report.expansion.terms[1].coefficient == 0

    def test_nonzero_pattern(self):
        report = parabolic(8, 50.0)
        for t in report.expansion.terms:
            if t.s % 6 in (0, 2):
                assert abs(t.coefficient) > 1e-12
            else:
                assert abs(t.coefficient) < 1e-13

    def test_digits_nondecreasing_in_order(self):
        quad = parabolic(1, 50.0).oracle_value
        prev = -1
        for s_count in range(1, 9):
            report = parabolic(s_count, 50.0)
            digits = agreement_digits(report.expansion_value, quad)
            assert digits >= prev
            prev = digits


class TestAgreementDigits:
    def test_formula(self):
        assert agreement_digits(1.0 + 1e-7, 1.0) == 6
        assert agreement_digits(1.0, 1.0) == 16
        assert agreement_digits(2.0, 1.0) == 0

    def test_zero_reference(self):
        assert agreement_digits(0.0, 0.0) == 16
        assert agreement_digits(1.0, 0.0) == 0
