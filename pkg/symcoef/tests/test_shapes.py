# symcoef/tests/test_shapes.py
import math

import numpy as np
from django.test import SimpleTestCase, tag

from symcoef.dimensions import dim_irrep
from symcoef.exceptions import ArgumentError
from symcoef.reports import log_factorial
from symcoef.partitions import Partition
from symcoef.shapes import (
    constants,
    curve_samples,
    hook_integral_curve,
    hook_integral_partition,
    psi_array,
    row_deviation,
    unit_square_curve,
    vkls_curve,
    vkls_distance,
    vkls_partition,
    vkls_phi,
    vkls_psi,
    zero_curve,
)


class ConstantsTests(SimpleTestCase):
    def test_values(self):
        c = constants()
        self.assertAlmostEqual(c.c1, 1.2825, places=4)
        self.assertAlmostEqual(c.c2, 0.1157, places=4)
        self.assertAlmostEqual(c.d, 3.0963, places=4)
        self.assertAlmostEqual(c.K, 3.4627466195, places=9)


class CurveTests(SimpleTestCase):
    def test_phi(self):
        self.assertAlmostEqual(vkls_phi(math.sqrt(2)), math.sqrt(2), places=12)
        self.assertAlmostEqual(vkls_phi(0.0), 2 * math.sqrt(2) / math.pi, places=12)
        self.assertAlmostEqual(vkls_phi(-math.sqrt(2)), math.sqrt(2), places=12)
        with self.assertRaises(ArgumentError):
            vkls_phi(2.0)

    def test_psi_endpoints_and_fixed_point(self):
        self.assertEqual(vkls_psi(2.0), 0.0)
        self.assertEqual(vkls_psi(0.0), 2.0)
        self.assertLess(abs(vkls_psi(2 / math.pi) - 2 / math.pi), 1e-8)
        with self.assertRaises(ArgumentError):
            vkls_psi(2.5)

    def test_psi_is_an_involution(self):
        for u in np.linspace(0.0, 2.0, 100):
            self.assertAlmostEqual(vkls_psi(vkls_psi(u)), u, delta=1e-6)

    def test_area_under_psi_is_one(self):
        steps = 20000
        mids = (np.arange(steps) + 0.5) * (2.0 / steps)
        area = float(psi_array(mids).sum()) * (2.0 / steps)
        self.assertAlmostEqual(area, 1.0, delta=1e-4)

    def test_vectorised_psi_matches_scalar(self):
        us = np.linspace(0.05, 1.95, 20)
        expected = [vkls_psi(u) for u in us]
        np.testing.assert_allclose(psi_array(us), expected, atol=1e-9)

    def test_curve_is_non_increasing(self):
        self.assertTrue(vkls_curve().is_non_increasing())
        samples = curve_samples(vkls_curve(), 5)
        self.assertEqual(len(samples), 5)
        self.assertAlmostEqual(samples[0][1], 2.0, places=6)


class PartitionShapeTests(SimpleTestCase):
    def test_small(self):
        self.assertEqual(vkls_partition(1), Partition([1]))
        lam = vkls_partition(4)
        self.assertEqual(lam.size, 4)
        self.assertTrue(math.isfinite(row_deviation(lam)))

    def test_large(self):
        lam = vkls_partition(10 ** 4)
        self.assertEqual(lam.size, 10 ** 4)
        self.assertLessEqual(row_deviation(lam), 3)
        self.assertLessEqual(vkls_distance(lam), 0.05)

    def test_distance_of_one_row(self):
        self.assertGreaterEqual(vkls_distance([100]), 0.5)
        self.assertTrue(math.isfinite(vkls_distance([1])))
        with self.assertRaises(ArgumentError):
            vkls_distance([])


class HookIntegralTests(SimpleTestCase):
    def test_single_cell(self):
        self.assertEqual(hook_integral_partition([1]), 0.0)

    def test_single_row(self):
        k = 100
        direct = -sum(math.log(h / math.sqrt(k)) for h in range(1, k + 1)) / k
        self.assertAlmostEqual(hook_integral_partition([k]), direct, places=10)

    def test_limit_shape_partition(self):
        self.assertAlmostEqual(hook_integral_partition(vkls_partition(10 ** 4)), 0.5, delta=0.05)

    def test_dimension_tracks_hook_integral(self):
        # (1/n)(log f − ½ log n!) ≈ Υ − ½
        for n in (100, 400):
            lam = vkls_partition(n)
            scaled = (math.log(dim_irrep(lam)) - 0.5 * log_factorial(n)) / n
            with self.subTest(n=n):
                self.assertLessEqual(abs(scaled - (hook_integral_partition(lam) - 0.5)), 0.1)

    @tag('slow')
    def test_hook_integral_improves_with_n(self):
        gaps = [abs(hook_integral_partition(vkls_partition(n)) - 0.5) for n in (10 ** 3, 10 ** 4, 10 ** 5)]
        self.assertTrue(all(gap <= 0.05 for gap in gaps), gaps)
        self.assertEqual(gaps, sorted(gaps, reverse=True))

    @tag('slow')
    def test_limit_shape_curve(self):
        value = hook_integral_curve(vkls_curve(), zero_curve(), 2000)
        self.assertAlmostEqual(value, 0.5, delta=0.02)

    def test_unit_square_converges(self):
        square = unit_square_curve()
        floor = zero_curve((0.0, 1.0))
        coarse = hook_integral_curve(square, floor, 1000)
        fine = hook_integral_curve(square, floor, 2000)
        self.assertLess(abs(coarse - fine), 1e-3)

    def test_area_must_be_one(self):
        with self.assertRaises(ArgumentError):
            hook_integral_curve(vkls_curve(), vkls_curve(), 100)
