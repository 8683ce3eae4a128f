"""
Unit tests for the quartic analogue
"""
import unittest
import pathlib
from math import cos, pi, sin, sqrt

import numpy as np

import sys
sys.path.insert(0, str(pathlib.Path(__file__).parent.parent))

from src.classifier.quartic import (
    chebyshev_U3, classify_general_quartic, classify_quartic, eval_f4, f4_prime,
    quartic_bridge_value, quartic_label, reduce_quartic, sample_f4, solve_critical_quartic,
)
from src.classifier.report import Flag, Method
from src.exceptions import InvalidInput, MethodNotApplicable


def numpy_real_count(coeffs, gap=1e-4):
    """Real-root count from numpy.roots, or None when roots sit too close to call"""
    values = np.roots(coeffs)
    if np.any((values.imag != 0.0) & (np.abs(values.imag) < gap)):
        return None
    real = np.sort(values[values.imag == 0.0].real)
    if np.any(np.diff(real) < gap):
        return None
    return len(real)


class TestReduceQuartic(unittest.TestCase):
    """Test cases for reduce_quartic"""

    def test_double_root_example(self):
        r = reduce_quartic(-2.0, 0.0, 0.0)
        self.assertAlmostEqual(r.u, sqrt(2.0), places=15)
        self.assertEqual(r.a, 0.0)
        self.assertAlmostEqual(r.b, -1.0, places=14)
        # f4 = cos 4 theta - 1 vanishes at 0, pi/2 and pi
        for theta in (0.0, pi / 2.0, pi):
            self.assertAlmostEqual(eval_f4(r, theta), 0.0, places=12)

    def test_constant_term(self):
        r = reduce_quartic(-2.0, 0.0, 0.75)
        self.assertEqual(r.a, 0.0)
        self.assertAlmostEqual(r.b, 0.5, places=14)

    def test_positive_m(self):
        with self.assertRaises(MethodNotApplicable):
            reduce_quartic(1.0, 0.0, 0.0)

    def test_boundary_values(self):
        r = reduce_quartic(-4.0, 1.0, 2.0)
        f0, fpi = r.boundary_values()
        self.assertAlmostEqual(f0, eval_f4(r, 0.0), places=12)
        self.assertAlmostEqual(fpi, eval_f4(r, pi), places=12)

    def test_parameters_have_no_beta(self):
        self.assertIsNone(reduce_quartic(-2.0, 1.0, 0.0).parameters()[1])


class TestQuarticIdentities(unittest.TestCase):
    """Test cases for f4 against the polynomial"""

    def test_bridge_identity(self):
        rng = np.random.default_rng(43)
        for m, p, q in rng.uniform(-10.0, 10.0, size=(100, 3)):
            if m >= -0.5:
                continue
            r = reduce_quartic(m, p, q)
            for theta in np.linspace(0.0, pi, 200):
                self.assertLessEqual(abs(eval_f4(r, theta) - quartic_bridge_value(r, theta)),
                                     1e-10 * r.scale())

    def test_u3_identity(self):
        for theta in np.linspace(0.0, pi, 500):
            self.assertLessEqual(abs(sin(theta) * chebyshev_U3(cos(theta)) - sin(4.0 * theta)), 1e-12)

    def test_derivative_factorization(self):
        """f4' = -sin(theta) (32x^3 - 16x + a)"""
        r = reduce_quartic(-3.0, 2.0, 1.0)
        g = r.critical_poly()
        for theta in np.linspace(0.05, 3.1, 40):
            self.assertAlmostEqual(f4_prime(r, theta), -sin(theta) * g(cos(theta)), places=11)

    def test_critical_points_by_finite_difference(self):
        rng = np.random.default_rng(47)
        h = 1e-6
        for a, b in rng.uniform(-10.0, 10.0, size=(100, 2)):
            r = reduce_quartic(-1.0, a / 8.0, (b + 1.0) / 8.0)
            for theta in solve_critical_quartic(r).thetas:
                numeric = (eval_f4(r, theta + h) - eval_f4(r, theta - h)) / (2.0 * h)
                self.assertLessEqual(abs(numeric), 1e-6 * r.scale())

    def test_sample_matches_scalar(self):
        r = reduce_quartic(-2.0, 1.0, -0.5)
        thetas = np.linspace(0.0, pi, 33)
        np.testing.assert_allclose(sample_f4(r, thetas), [eval_f4(r, t) for t in thetas], atol=1e-13)


class TestClassifyQuartic(unittest.TestCase):
    """Test cases for quartic classification"""

    def test_four_real(self):
        report = classify_quartic(-2.0, 0.0, 0.5)
        self.assertEqual(report.degree, 4)
        self.assertEqual(report.n_real, 4)
        self.assertEqual(report.method, Method.TRIG)
        self.assertEqual(report.scenario, "Quartic(4)")
        self.assertIsNone(report.beta)
        expected = sorted(s * sqrt(1.0 + d * sqrt(0.5)) for s in (1, -1) for d in (1, -1))
        np.testing.assert_allclose(report.roots, expected, atol=1e-9)

    def test_no_real(self):
        report = classify_quartic(-2.0, 0.0, 5.0)
        self.assertEqual(report.n_real, 0)
        self.assertEqual(report.n_complex, 4)
        self.assertEqual(report.scenario, "Quartic(0)")
        self.assertEqual(report.roots, [])

    def test_two_real(self):
        report = classify_quartic(-2.0, 0.0, -3.0)
        self.assertEqual(report.n_real, 2)
        self.assertEqual((report.n_int, report.n_ext_plus, report.n_ext_minus), (0, 1, 1))
        self.assertEqual(report.method, Method.TRIG)
        np.testing.assert_allclose(report.roots, [-sqrt(3.0), sqrt(3.0)], atol=1e-9)

    def test_double_root_is_flagged(self):
        """t^2 (t^2 - 2): three distinct roots, resolved by the oracle"""
        report = classify_quartic(-2.0, 0.0, 0.0)
        self.assertEqual(report.method, Method.ORACLE)
        self.assertIn(Flag.MULTIPLE_ROOT, report.degenerate)
        self.assertEqual(report.n_real, 3)
        self.assertEqual(report.n_complex, 0)

    def test_two_exterior_roots_on_one_side(self):
        """t^4 - t^2 - 10t + 11 has both real roots beyond u = 1"""
        report = classify_quartic(-1.0, -10.0, 11.0)
        self.assertEqual(report.n_real, 2)
        self.assertEqual((report.n_int, report.n_ext_plus, report.n_ext_minus), (0, 2, 0))
        self.assertIn(Flag.NON_GENERIC_EXTERIOR, report.degenerate)
        self.assertEqual(report.method, Method.TRIG)
        self.assertEqual(report.scenario, "Quartic(2)")

    def test_positive_m_falls_back(self):
        report = classify_quartic(1.0, 0.0, -1.0)
        self.assertEqual(report.method, Method.ORACLE)
        self.assertEqual(report.degenerate, [Flag.METHOD_NOT_APPLICABLE])
        self.assertEqual(report.n_real, 2)
        self.assertIsNone(report.scenario)

    def test_non_finite(self):
        with self.assertRaises(InvalidInput):
            classify_quartic(-2.0, float("nan"), 0.0)

    def test_even_counts_random(self):
        rng = np.random.default_rng(53)
        checked = 0
        for m, p, q in rng.uniform(-10.0, 10.0, size=(500, 3)):
            report = classify_quartic(m, p, q, refine_roots=False)
            self.assertIn(report.n_real, (0, 2, 4))
            expected = numpy_real_count([1.0, 0.0, m, p, q])
            if expected is not None:
                self.assertEqual(report.n_real, expected)
                checked += 1
        self.assertGreater(checked, 450)

    def test_small_u_without_real_roots(self):
        """u ~ 0.065 and no real roots: no spurious exterior root on either side"""
        report = classify_quartic(-0.004274328045991815, 9.076583880110574, 14.370358252697912)
        self.assertEqual(report.n_real, 0)
        self.assertEqual(report.n_complex, 4)
        self.assertEqual((report.n_int, report.n_ext_plus, report.n_ext_minus), (0, 0, 0))
        self.assertEqual(report.oracle_n_real, 0)
        self.assertEqual(report.roots, [])
        self.assertNotIn(Flag.NON_GENERIC_EXTERIOR, report.degenerate)

    def test_labels(self):
        self.assertEqual(quartic_label(2, 1, 1), "Quartic(4)")
        self.assertEqual(quartic_label(0, 0, 0), "Quartic(0)")
        self.assertIsNone(quartic_label(1, 0, 0))


class TestGeneralQuartic(unittest.TestCase):
    """Test cases for classify_general_quartic"""

    def test_shifted_roots(self):
        """(z-1)(z-2)(z-3)(z-4)"""
        report = classify_general_quartic([1, -10, 35, -50, 24])
        self.assertEqual(report.n_real, 4)
        self.assertAlmostEqual(report.shift, -2.5, places=12)
        np.testing.assert_allclose(report.roots, [1.0, 2.0, 3.0, 4.0], atol=1e-9)

    def test_normalizes_leading_coefficient(self):
        report = classify_general_quartic([2, 0, -4, 0, 1])
        self.assertEqual(report.n_real, 4)

    def test_invalid(self):
        with self.assertRaises(InvalidInput):
            classify_general_quartic([0, 1, 0, 0, 0])
        with self.assertRaises(InvalidInput):
            classify_general_quartic([1, 0, 0, 0])
        with self.assertRaises(InvalidInput):
            classify_general_quartic([1, 0, float("inf"), 0, 0])


if __name__ == '__main__':
    unittest.main()
