"""
Unit tests for the Sturm-sequence oracle
"""
import unittest
import pathlib

import numpy as np

import sys
sys.path.insert(0, str(pathlib.Path(__file__).parent.parent))

from src.exceptions import ZeroPolynomial
from src.polynomial.oracle import (
    SturmChain, analyze, build_chain, cauchy_bound, companion_count, count_distinct, count_roots,
    has_multiple_roots, isolate_and_refine, poly_gcd, root_multiplicity,
)
from src.polynomial.poly_core import Poly, derivative, from_roots, multiply

ALL_FIVE = Poly.from_descending([1, 0, -5, 0, 5, 0])
THREE_REAL = Poly.from_descending([1, 0, -5, 0, 1, -5])
ONE_REAL = Poly.from_descending([1, 0, -5, 1, 2, 5])
# remainders of this chain grow to ~5e7 before normalization
NEAR_PAIR = Poly.from_descending(
    [1, 2.173273495147871, -8.054272622781147, 4.383578596215635, 7.675788613741709, 9.5272077355202]
)


class TestSturmChain(unittest.TestCase):
    """Test cases for chain construction and counting"""

    def test_two_root_textbook_chain(self):
        chain = build_chain(Poly.from_descending([1, 0, -1]))
        self.assertEqual([P.coeffs for P in chain.polys], [(-1.0, 0.0, 1.0), (0.0, 1.0), (1.0,)])
        self.assertTrue(chain.square_free)

    def test_members_after_head_have_unit_scale(self):
        chain = build_chain(NEAR_PAIR)
        self.assertEqual(chain.head, NEAR_PAIR)
        for Q in chain.polys[1:]:
            self.assertAlmostEqual(Q.max_abs(), 1.0, places=15)

    def test_square_free_chain_reaches_a_constant(self):
        """A chain ending above degree 0 would claim a common factor of P and P'"""
        for P in (NEAR_PAIR, ALL_FIVE, THREE_REAL, ONE_REAL):
            chain = build_chain(P)
            self.assertTrue(chain.square_free)
            self.assertEqual(chain.polys[-1].degree, 0)
            self.assertEqual([Q.degree for Q in chain.polys], [5, 4, 3, 2, 1, 0])

    def test_near_pair_single_real_root(self):
        """One real root near -4.2436; the other four roots are complex"""
        B = cauchy_bound(NEAR_PAIR)
        chain = build_chain(NEAR_PAIR)
        self.assertEqual(count_roots(chain, -B, B), 1)
        self.assertEqual(count_distinct(chain, -B, B), 1)
        report = analyze(NEAR_PAIR)
        self.assertEqual(report.n_real, 1)
        self.assertAlmostEqual(report.roots[0], -4.243608, places=5)
        self.assertEqual(companion_count(NEAR_PAIR), 1)

    def test_multiple_root_chain_keeps_common_factor(self):
        chain = build_chain(from_roots([1.0, 1.0, -2.0]))
        self.assertFalse(chain.square_free)
        self.assertEqual(chain.polys[-1].degree, 1)

    def test_chain_degrees_decrease(self):
        for P in (ALL_FIVE, THREE_REAL, ONE_REAL):
            chain = build_chain(P)
            degrees = [Q.degree for Q in chain.polys]
            self.assertEqual(degrees, sorted(degrees, reverse=True))
            self.assertEqual(len(set(degrees)), len(degrees))
            self.assertLessEqual(len(chain), P.degree + 1)

    def test_zero_polynomial_rejected(self):
        with self.assertRaises(ZeroPolynomial):
            build_chain(Poly(coeffs=(0.0,)))
        with self.assertRaises(ZeroPolynomial):
            cauchy_bound(Poly(coeffs=(0.0,)))

    def test_all_five_chain_length(self):
        chain = build_chain(ALL_FIVE)
        self.assertEqual(len(chain), 6)
        self.assertEqual(count_roots(chain, -6.0, 6.0), 5)

    def test_count_examples(self):
        self.assertEqual(count_roots(build_chain(ALL_FIVE), -2.0000001, 2.0000001), 5)
        self.assertEqual(count_roots(build_chain(THREE_REAL), 2.0, cauchy_bound(THREE_REAL)), 1)
        self.assertEqual(count_roots(build_chain(ONE_REAL), -6.0, 6.0), 1)

    def test_count_between_adjacent_roots(self):
        # roots of ALL_FIVE are 0, +-1.1756, +-1.9021
        self.assertEqual(count_roots(build_chain(ALL_FIVE), 0.2, 1.1), 0)

    def test_endpoint_root_is_counted(self):
        """(lo, hi] with P(hi) = 0 includes the root at hi"""
        chain = build_chain(Poly.from_descending([1, 0, -1]))
        self.assertEqual(count_roots(chain, 0.0, 1.0), 1)
        self.assertEqual(count_roots(chain, -1.0, 0.0), 1)

    def test_count_requires_ordered_interval(self):
        with self.assertRaises(ValueError):
            count_roots(build_chain(ALL_FIVE), 1.0, 1.0)

    def test_cauchy_bound_examples(self):
        self.assertEqual(cauchy_bound(ALL_FIVE), 6.0)
        self.assertEqual(cauchy_bound(Poly.from_descending([1, 0, 0, 0, 0, 0])), 1.0)
        self.assertEqual(cauchy_bound(THREE_REAL), 6.0)


class TestIsolation(unittest.TestCase):
    """Test cases for isolation and refinement"""

    def test_three_real_roots(self):
        roots = isolate_and_refine(THREE_REAL, -6.0, 6.0)
        np.testing.assert_allclose(roots, [-2.043, -1.205, 2.286], atol=1e-3)

    def test_difference_of_squares(self):
        roots = isolate_and_refine(Poly.from_descending([1, 0, -1]), -2.0, 2.0)
        np.testing.assert_allclose(roots, [-1.0, 1.0], atol=1e-12)

    def test_one_real_root(self):
        roots = isolate_and_refine(ONE_REAL, -6.0, 6.0)
        self.assertEqual(len(roots), 1)
        self.assertAlmostEqual(roots[0], -2.335, places=3)

    def test_all_five_roots_closed_form(self):
        expected = sorted([0.0] + [s * 2.0 * np.cos(k * np.pi / 10.0) for k in (1, 3) for s in (1, -1)])
        roots = isolate_and_refine(ALL_FIVE, -6.0, 6.0)
        np.testing.assert_allclose(roots, expected, atol=1e-12)

    def test_double_root_is_refined(self):
        """Even multiplicity gives no sign change; Sturm counts still locate it"""
        P = from_roots([0.5, 0.5, -2.0])
        roots = isolate_and_refine(P, -3.0, 3.0)
        np.testing.assert_allclose(roots, [-2.0, 0.5], atol=1e-6)

    def test_count_consistency_random(self):
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            degree = int(rng.integers(1, 6))
            coeffs = rng.uniform(-10.0, 10.0, size=degree + 1)
            coeffs[-1] = rng.choice([-1.0, 1.0]) * rng.uniform(0.5, 10.0)
            P = Poly(coeffs=tuple(coeffs))
            B = cauchy_bound(P)
            chain = build_chain(P)
            self.assertEqual(count_roots(chain, -B, B), len(isolate_and_refine(P, -B, B, chain=chain)))

    def test_conjugate_parity_random(self):
        rng = np.random.default_rng(99)
        for _ in range(300):
            P = Poly(coeffs=(*rng.uniform(-10.0, 10.0, size=5), 1.0))
            if has_multiple_roots(P):
                continue
            B = cauchy_bound(P)
            self.assertEqual(count_distinct(build_chain(P), -B, B) % 2, 1)

    def test_spurious_chain_root_dropped(self):
        """t^2 + 1 with a chain claiming one root: P never changes sign"""
        P = Poly.from_descending([1, 0, 1])
        bogus = SturmChain(polys=(P, Poly.from_descending([1, 0])), square_free=True)
        self.assertEqual(count_roots(bogus, -2.0, 2.0), 1)
        self.assertEqual(count_distinct(bogus, -2.0, 2.0), 0)

    def test_spurious_chain_pair_dropped(self):
        P = Poly.from_descending([1, 0, 1])
        bogus = SturmChain(polys=(P, Poly.from_descending([1, 0]), Poly(coeffs=(1.0,))),
                           square_free=True)
        self.assertEqual(count_roots(bogus, -2.0, 2.0), 2)
        self.assertEqual(count_distinct(bogus, -2.0, 2.0), 0)

    def test_missed_root_recovered(self):
        """A chain that sees no root is overruled by a sign change of P"""
        P = Poly.from_descending([1, 0, -1])
        bogus = SturmChain(polys=(P,), square_free=True)
        self.assertEqual(count_roots(bogus, -2.0, 0.5), 0)
        roots = isolate_and_refine(P, -2.0, 0.5, chain=bogus)
        self.assertEqual(len(roots), 1)
        self.assertAlmostEqual(roots[0], -1.0, places=9)


class TestMultipleRoots(unittest.TestCase):
    """Test cases for gcd(P, P') and multiplicities"""

    def test_square_free(self):
        for P in (ALL_FIVE, THREE_REAL, ONE_REAL):
            self.assertFalse(has_multiple_roots(P))

    def test_constructed_double_root(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            r = rng.uniform(-3.0, 3.0)
            cubic = Poly(coeffs=(*rng.uniform(-3.0, 3.0, size=3), 1.0))
            P = multiply(from_roots([r, r]), cubic)
            self.assertTrue(has_multiple_roots(P))

    def test_gcd_is_monic_common_factor(self):
        P = from_roots([1.0, 1.0, -2.0])
        G = poly_gcd(P, derivative(P))
        np.testing.assert_allclose(G.coeffs, (-1.0, 1.0), atol=1e-9)

    def test_root_multiplicity(self):
        P = Poly.from_descending([1, 0, -2, 0, 0])  # t^2 (t^2 - 2)
        self.assertEqual(root_multiplicity(P, 0.0), 2)
        self.assertEqual(root_multiplicity(P, np.sqrt(2.0)), 1)
        self.assertEqual(root_multiplicity(Poly.from_descending([1, 0, 0, 0, 0, 0]), 0.0), 5)

    def test_analyze_fifth_power(self):
        """t^5: one distinct root at 0 with multiplicity 5"""
        report = analyze(Poly.from_descending([1, 0, 0, 0, 0, 0]))
        self.assertEqual(report.n_real, 1)
        self.assertAlmostEqual(report.roots[0], 0.0, places=6)
        self.assertFalse(report.square_free)
        self.assertEqual(len(report.multiplicities), 1)
        self.assertEqual(report.multiplicities[0].multiplicity, 5)

    def test_analyze_all_five(self):
        report = analyze(ALL_FIVE)
        self.assertEqual(report.degree, 5)
        self.assertEqual(report.n_real, 5)
        self.assertEqual(report.cauchy_bound, 6.0)
        self.assertTrue(report.square_free)
        self.assertEqual(report.multiplicities, [])


if __name__ == '__main__':
    unittest.main()
