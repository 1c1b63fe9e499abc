# symcoef/tests/test_extremal.py
import math
from fractions import Fraction

from django.test import SimpleTestCase, override_settings, tag

from symcoef.dimensions import max_dim
from symcoef.exceptions import ArgumentError, ResourceLimitError
from symcoef.extremal import (
    cnk_value,
    containment_scan,
    find_large_lr_from_lambda,
    find_large_lr_from_mu_nu,
    golden_cn,
    golden_cnk,
    lr_bounds_report,
    max_lr,
    max_lr_rows,
    max_skew_syt,
    monotonicity_scan,
    stabilization_index,
    stabilization_witness,
    table_checks,
    table_cnk,
    zeta_rho,
)
from symcoef.partitions import Partition


def P(*parts):
    return Partition(parts)


class TableTests(SimpleTestCase):
    def test_small_values(self):
        self.assertEqual(cnk_value(6, 1).value, 1)
        self.assertEqual(cnk_value(6, 2).value, 1)
        record = cnk_value(6, 3)
        self.assertEqual(record.value, 2)
        self.assertIn((P(3, 2, 1), P(2, 1), P(2, 1)), record.witnesses)

    def test_table_matches_published_values(self):
        table = table_cnk(12)
        golden = golden_cnk()
        for n in range(1, 13):
            for k in range(n + 1):
                self.assertEqual(table.value(n, k), golden[(n, k)], (n, k))
        self.assertTrue(table_checks(table).passed)

    def test_corrected_entries(self):
        golden = golden_cnk()
        self.assertEqual(golden[(10, 7)], 2)
        self.assertEqual(golden[(14, 11)], 2)
        self.assertEqual(cnk_value(10, 7).value, 2)

    def test_cnk_value_agrees_with_rows(self):
        table = table_cnk(9)
        for k in range(10):
            self.assertEqual(cnk_value(9, k).value, table.value(9, k))

    def test_threads_do_not_change_witnesses(self):
        from symcoef import extremal

        extremal._ROWS.pop(8, None)
        single = table_cnk(8, threads=1).record(8, 4)
        extremal._ROWS.pop(8, None)
        pooled = table_cnk(8, threads=2).record(8, 4)
        self.assertEqual(single, pooled)

    @override_settings(SYMCOEF={'TABLE_CAP': 5, 'STRETCH_CAP': 6})
    def test_caps(self):
        with self.assertRaises(ResourceLimitError):
            table_cnk(6)
        self.assertEqual(table_cnk(6, stretch=True).value(6, 3), 2)
        with self.assertRaises(ResourceLimitError):
            table_cnk(7, stretch=True)

    def test_time_budget(self):
        from symcoef import extremal

        for n in (13, 14):
            extremal._ROWS.pop(n, None)
        with self.assertRaises(ResourceLimitError):
            table_cnk(14, time_budget=1e-9)

    @tag('slow')
    def test_eighteen(self):
        table = table_cnk(18)
        self.assertEqual(table.value(18, 7), 11)
        self.assertTrue(table_checks(table).passed)


class MaximumTests(SimpleTestCase):
    def test_max_lr(self):
        self.assertEqual(max_lr(1).value, 1)
        for n in range(1, 13):
            self.assertEqual(max_lr(n).value, golden_cn()[n])

    @tag('slow')
    def test_max_lr_eighteen(self):
        record = max_lr(18)
        self.assertEqual(record.value, 11)
        self.assertIn((P(7, 5, 3, 2, 1), P(5, 3, 2, 1), P(4, 2, 1)), record.witnesses)

    def test_rows(self):
        self.assertEqual(max_lr_rows(6, 1).value, 1)
        self.assertEqual(max_lr_rows(6, 3).value, 2)
        with self.assertRaises(ArgumentError):
            max_lr_rows(3, 4)

    def test_skew_maximum(self):
        record = max_skew_syt(0, 4)
        self.assertEqual(record.value, 3)
        self.assertEqual(set(record.witnesses), {(P(3, 1), P()), (P(2, 1, 1), P())})
        self.assertEqual(max_skew_syt(1, 3).witness, (P(2, 1), P(1)))
        self.assertEqual(max_skew_syt(2, 4).value, 2)
        self.assertEqual(max_skew_syt(2, 4).witness, (P(2, 1, 1), P(1, 1)))


class ScanTests(SimpleTestCase):
    def test_zeta_rho(self):
        self.assertEqual(zeta_rho(1), (0, Fraction(1, 2)))
        self.assertEqual(zeta_rho(6), (3, Fraction(0)))

    @override_settings(SYMCOEF={'TABLE_CAP': 5, 'STRETCH_CAP': 6})
    def test_table_scans_need_stretch_past_table_cap(self):
        with self.assertRaises(ResourceLimitError):
            zeta_rho(6)
        with self.assertRaises(ResourceLimitError):
            containment_scan(6)
        self.assertEqual(zeta_rho(6, stretch=True), (3, Fraction(0)))
        self.assertEqual(containment_scan(6, stretch=True).value, 2)

    @tag('slow')
    def test_zeta_eighteen(self):
        self.assertEqual(zeta_rho(18), (7, Fraction(2)))

    def test_stabilization(self):
        result = stabilization_index(1)
        self.assertEqual((result.start, result.exact), (1, True))
        result = stabilization_index(3)
        self.assertEqual((result.start, result.threshold, result.exact), (6, 6, True))
        self.assertEqual(result.witness, stabilization_witness(3))

    @tag('slow')
    def test_stabilization_k4(self):
        result = stabilization_index(4)
        self.assertEqual((result.start, result.exact), (10, True))

    def test_column_equals_max_dim_past_threshold(self):
        for k in range(1, 4):
            d = max_dim(k).value
            for n in range(math.comb(k + 1, 2), 13):
                with self.subTest(n=n, k=k):
                    self.assertEqual(cnk_value(n, k).value, d)

    @tag('slow')
    def test_column_equals_max_dim_up_to_eighteen(self):
        for k in range(1, 6):
            d = max_dim(k).value
            for n in range(math.comb(k + 1, 2), 19):
                with self.subTest(n=n, k=k):
                    self.assertEqual(cnk_value(n, k).value, d)

    def test_staircase_witness(self):
        lam, mu, nu = stabilization_witness(3)
        self.assertEqual((lam, nu), (P(3, 2, 1), P(2, 1)))
        self.assertEqual(mu, P(2, 1))
        lam, _, nu = stabilization_witness(2, r=2)
        self.assertEqual((lam, nu), (P(4, 1), P(3)))

    def test_containment(self):
        self.assertTrue(containment_scan(1).conjecture_holds)
        report = containment_scan(6)
        self.assertEqual(report.value, 2)
        self.assertTrue(report.conjecture_holds)

    @tag('slow')
    def test_containment_eighteen(self):
        report = containment_scan(18)
        self.assertEqual(report.value, 11)

    def test_monotonicity(self):
        report = monotonicity_scan(12)
        self.assertTrue(report.passed)
        self.assertEqual(report.details['non_unimodal'], [(10, 5, 2)])

    def test_row_ten_dips_in_the_middle(self):
        self.assertEqual([cnk_value(10, k).value for k in (4, 5, 6)], [3, 2, 3])


class LargeTermTests(SimpleTestCase):
    def test_from_mu_nu(self):
        self.assertEqual(find_large_lr_from_mu_nu([1], [1]).lam, P(1, 1))
        term = find_large_lr_from_mu_nu([2, 1], [2, 1])
        self.assertEqual((term.lam, term.coefficient, term.weight), (P(3, 2, 1), 2, 32))

    def test_from_lambda(self):
        pair = find_large_lr_from_lambda([2, 2], 2)
        self.assertEqual((pair.mu, pair.nu, pair.coefficient), (P(1, 1), P(1, 1), 1))
        pair = find_large_lr_from_lambda([5], 2)
        self.assertEqual((pair.mu, pair.nu, pair.coefficient), (P(2), P(3), 1))
        pair = find_large_lr_from_lambda([3, 2, 1], 3)
        self.assertEqual((pair.mu, pair.nu, pair.weight), (P(2, 1), P(2, 1), 8))


class BoundsTests(SimpleTestCase):
    def test_twenty_seven(self):
        report = lr_bounds_report(20, 7, exact=11)
        self.assertTrue(report.passed)
        self.assertEqual(report.subject, 'C(20,7)')
        band, dim_cap, dim_bound = report.checks
        self.assertAlmostEqual(math.exp(band.log_lower) / 0.2857, 1, delta=0.01)
        self.assertAlmostEqual(math.exp(band.log_upper) / 278.42, 1, delta=0.01)
        self.assertEqual(round(math.exp(dim_cap.log_upper)), 35)
        self.assertAlmostEqual(math.exp(dim_bound.log_upper) / 70.99, 1, delta=0.01)
        self.assertFalse(dim_bound.asserted)

    def test_computed(self):
        for n in range(1, 11):
            for k in range(n + 1):
                self.assertTrue(lr_bounds_report(n, k).passed, (n, k))
