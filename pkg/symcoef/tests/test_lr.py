# symcoef/tests/test_lr.py
from fractions import Fraction

from django.test import SimpleTestCase, override_settings, tag

from symcoef.exceptions import ArgumentError, ResourceLimitError
from symcoef.lr import (
    bicolored_count,
    hook_content_bound,
    hw_coefficient,
    lr_coefficient,
    lr_coefficient_bound_check,
    lr_expand,
    lr_vanishing_rows,
    monotone_embedding_holds,
    refined_max_lr,
    skew_hive_bound,
    tree_certificate,
    verify_lpp,
    verify_lr_identities,
    verify_skew_cauchy_square,
)
from symcoef.partitions import Partition, enumerate_partitions, sub_partitions
from symcoef.shapes import constants


def P(*parts):
    return Partition(parts)


class CoefficientTests(SimpleTestCase):
    def test_values(self):
        self.assertEqual(lr_coefficient([2], [1], [1]), 1)
        self.assertEqual(lr_coefficient([3, 2, 1], [2, 1], [2, 1]), 2)
        self.assertEqual(lr_coefficient([2, 2], [2], [1, 1]), 0)
        self.assertEqual(lr_coefficient([4, 2], [2, 1], [2, 1]), 1)

    def test_symmetric_in_mu_nu(self):
        for lam in enumerate_partitions(6):
            for mu in sub_partitions(lam, sizes=(2, 3)):
                for nu, c in lr_expand(lam, mu):
                    self.assertEqual(lr_coefficient(lam, nu, mu), c)

    def test_size_mismatch(self):
        with self.assertRaises(ArgumentError):
            lr_coefficient([3], [1], [1])

    @override_settings(SYMCOEF={'LR_CAP': 5})
    def test_cap(self):
        with self.assertRaises(ResourceLimitError):
            lr_coefficient([3, 2, 1], [2, 1], [2, 1])


class ExpansionTests(SimpleTestCase):
    def test_expansions(self):
        self.assertEqual(lr_expand([2, 2], [1]).coeffs, {P(2, 1): 1})
        self.assertEqual(lr_expand([3, 1], [2]).coeffs, {P(2): 1, P(1, 1): 1})
        self.assertEqual(lr_expand([3, 2, 1], [3, 2, 1]).coeffs, {P(): 1})
        self.assertEqual(lr_expand([2], [1, 1]).coeffs, {})

    def test_total_weight_is_skew_count(self):
        self.assertEqual(lr_expand([3, 2, 1], [2, 1]).total_weight(), 6)
        self.assertEqual(lr_expand([4, 2], []).get([4, 2]), 1)


class IdentityTests(SimpleTestCase):
    def test_small(self):
        self.assertEqual(verify_lr_identities(2, 1).details['total'], 2)
        report = verify_lr_identities(4, 2)
        self.assertEqual(report.details['total'], 10)
        self.assertEqual(report.details['binomial'], 6)
        self.assertEqual(verify_lr_identities(5, 0).details['total'], 7)

    def test_all_up_to_eight(self):
        for n in range(9):
            for k in range(n + 1):
                self.assertTrue(verify_lr_identities(n, k).passed)

    def test_bad_k(self):
        with self.assertRaises(ArgumentError):
            verify_lr_identities(3, 4)


class SeriesTests(SimpleTestCase):
    def test_hw(self):
        self.assertEqual(hw_coefficient(0, 0), 1)
        self.assertEqual(hw_coefficient(1, 1), 2)
        self.assertEqual(hw_coefficient(2, 2), 10)

    def test_bicolored(self):
        self.assertEqual([bicolored_count(n) for n in range(3)], [1, 2, 6])

    def test_bicolored_ratio_approaches_k(self):
        k = constants().K
        self.assertAlmostEqual(k, 3.4627466195, places=9)
        ratio = bicolored_count(40) / 2 ** 40
        self.assertLess(abs(ratio - k) / k, 1e-4)


class MaximumTests(SimpleTestCase):
    def test_refined(self):
        self.assertEqual(refined_max_lr([5]).value, 1)
        record = refined_max_lr([3, 2, 1])
        self.assertEqual(record.value, 2)
        self.assertEqual(record.witness, (P(2, 1), P(2, 1)))

    @tag('slow')
    def test_refined_at_eighteen(self):
        self.assertEqual(refined_max_lr([7, 5, 3, 2, 1]).value, 11)

    def test_hook_content(self):
        self.assertEqual(hook_content_bound([1], 1), 2)
        self.assertEqual(hook_content_bound([2, 1], 2), 10)
        self.assertEqual(hook_content_bound([2, 2], 2), Fraction(20))
        with self.assertRaises(ArgumentError):
            hook_content_bound([1, 1, 1], 2)

    def test_hook_content_dominates(self):
        for lam in enumerate_partitions(7):
            hook_content_bound(lam, len(lam))

    def test_skew_hive_bound(self):
        self.assertEqual(skew_hive_bound(5, 2), 1)
        self.assertEqual(skew_hive_bound(5, 3), 6)

    def test_coefficient_bound(self):
        self.assertTrue(lr_coefficient_bound_check([3, 2, 1], [2, 1], [2, 1]))
        self.assertTrue(lr_coefficient_bound_check([4, 3, 2, 1], [3, 2], [3, 2]))


class TreeTests(SimpleTestCase):
    def test_certificates(self):
        self.assertEqual(tree_certificate([2, 2], [2], [2]).product, 1)
        self.assertEqual(tree_certificate([2], [1], [1]).product, 1)
        cert = tree_certificate([3, 2, 1], [2, 1], [2, 1])
        self.assertGreaterEqual(cert.product, 2)
        self.assertLessEqual(cert.product, 16)
        self.assertEqual(cert.dimension, 16)
        self.assertTrue(cert.description.startswith('3,2,1 c=2'))

    def test_zero_root(self):
        with self.assertRaises(ArgumentError):
            tree_certificate([2, 2], [2], [1, 1])


class PropertyTests(SimpleTestCase):
    def test_skew_cauchy(self):
        self.assertEqual(verify_skew_cauchy_square([1], [1]).details['lhs'], 2)
        self.assertEqual(verify_skew_cauchy_square([2], [2]).details['rhs'], 3)
        self.assertEqual(verify_skew_cauchy_square([], [2, 1]).details['lhs'], 1)
        verify_skew_cauchy_square([2, 1], [2, 1])

    def test_lpp(self):
        self.assertTrue(verify_lpp([3, 1], [2], [1, 1]))
        self.assertTrue(verify_lpp([3, 2, 1], [2, 1], [2, 1]))
        self.assertTrue(verify_lpp([4, 2], [3], [2, 1]))

    def test_vanishing_rows(self):
        self.assertTrue(lr_vanishing_rows([1, 1, 1, 1], [2], [2]))
        self.assertEqual(lr_coefficient([1, 1, 1, 1], [2], [2]), 0)
        self.assertFalse(lr_vanishing_rows([2, 2], [2], [2]))
        self.assertFalse(lr_vanishing_rows([1, 1], [1], [1]))

    def test_monotone(self):
        self.assertTrue(monotone_embedding_holds([3, 2, 1], [2, 1], [2, 1]))
        self.assertTrue(monotone_embedding_holds([2, 1], [1], [1, 1]))
