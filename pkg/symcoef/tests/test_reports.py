# symcoef/tests/test_reports.py
import math

from django.test import SimpleTestCase, override_settings

from symcoef import conf
from symcoef.exceptions import ResourceLimitError, VerificationError
from symcoef.parallel import ordered_map
from symcoef.partitions import Partition
from symcoef.reports import BoundCheck, BoundReport, MaxTracker, VerificationReport, log_le, log_value


class MaxTrackerTests(SimpleTestCase):
    def test_keeps_smallest_witnesses(self):
        tracker = MaxTracker(limit=2)
        for witness in ((Partition([3]),), (Partition([1, 1, 1]),), (Partition([2, 1]),)):
            tracker.add(5, witness)
        tracker.add(4, (Partition([1]),))
        record = tracker.result()
        self.assertEqual(record.value, 5)
        self.assertEqual(record.count, 3)
        self.assertEqual(record.witnesses, ((Partition([1, 1, 1]),), (Partition([2, 1]),)))

    def test_larger_value_resets(self):
        tracker = MaxTracker()
        tracker.add(1, ('a',))
        tracker.add(2, ('b',))
        self.assertEqual(tracker.result().witnesses, (('b',),))

    def test_empty(self):
        with self.assertRaises(ValueError):
            MaxTracker().result()


class LogTests(SimpleTestCase):
    def test_log_value(self):
        self.assertEqual(log_value(0), -math.inf)
        self.assertAlmostEqual(log_value(10 ** 400), 400 * math.log(10))

    def test_log_le_tolerance(self):
        self.assertTrue(log_le(1.0, 1.0 - 1e-12))
        self.assertFalse(log_le(1.0, 0.9))


class ReportTests(SimpleTestCase):
    def test_bound_report(self):
        report = BoundReport('x', 3, (
            BoundCheck('a', 1.0, log_lower=0.0, log_upper=2.0),
            BoundCheck('b', 5.0, log_upper=2.0, asserted=False),
        ))
        self.assertTrue(report.passed)
        self.assertEqual(report.upper, 2.0)
        self.assertFalse(report.check('b').passed)

    def test_verification_report(self):
        report = VerificationReport('demo')
        report.record(True, 'ok')
        report.record(False, 'bad', (1, 2))
        self.assertEqual(report.checked, 2)
        with self.assertRaises(VerificationError) as ctx:
            report.raise_on_failure()
        self.assertEqual(ctx.exception.witness, (1, 2))


class ConfTests(SimpleTestCase):
    @override_settings(SYMCOEF={'LR_CAP': 7})
    def test_settings_then_defaults(self):
        self.assertEqual(conf.get('LR_CAP'), 7)
        self.assertEqual(conf.get('WITNESS_LIMIT'), 64)

    def test_overrides(self):
        with conf.overrides(THREADS=3, CACHE_DIR=None):
            self.assertEqual(conf.default_threads(), 3)
            self.assertIsNone(conf.get('CACHE_DIR'))
        self.assertNotEqual(conf.get('THREADS'), 3)

    def test_unknown_key(self):
        with self.assertRaises(KeyError):
            conf.get('NOPE')

    @override_settings(SYMCOEF={'TREE_CAP': 2})
    def test_check_cap(self):
        with self.assertRaises(ResourceLimitError):
            conf.check_cap('TREE_CAP', 3)


class OrderedMapTests(SimpleTestCase):
    def test_order_is_kept(self):
        self.assertEqual(ordered_map(abs, [-3, 2, -1], workers=2), [3, 2, 1])
        self.assertEqual(ordered_map(abs, [], workers=4), [])
