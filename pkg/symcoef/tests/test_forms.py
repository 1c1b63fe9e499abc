# symcoef/tests/test_forms.py
from django.test import SimpleTestCase

from symcoef.forms import BoundsForm, DimForm, ScanForm, SkewForm, TableForm, TripleForm, VerifyForm
from symcoef.partitions import Partition


class PartitionFieldTests(SimpleTestCase):
    def test_valid(self):
        form = DimForm({'lam': '4^2,1'})
        self.assertTrue(form.is_valid())
        self.assertEqual(form.cleaned_data['lam'], Partition([4, 4, 1]))

    def test_invalid(self):
        form = DimForm({'lam': '3,x'})
        self.assertFalse(form.is_valid())
        self.assertIn('lam', form.errors)


class SkewFormTests(SimpleTestCase):
    def test_inner_optional(self):
        form = SkewForm({'outer': '3,2', 'inner': ''})
        self.assertTrue(form.is_valid())
        self.assertIsNone(form.cleaned_data['inner'])

    def test_containment(self):
        self.assertFalse(SkewForm({'outer': '2,1', 'inner': '1,1,1'}).is_valid())


class TripleFormTests(SimpleTestCase):
    def test_lr_sizes(self):
        self.assertTrue(TripleForm({'lam': '3,2,1', 'mu': '2,1', 'nu': '2,1', 'mode': 'lr'}).is_valid())
        self.assertFalse(TripleForm({'lam': '3,2,1', 'mu': '2,1', 'nu': '2', 'mode': 'lr'}).is_valid())

    def test_empty_parts(self):
        form = TripleForm({'lam': '2', 'mu': '[]', 'nu': '2', 'mode': 'lr'})
        self.assertTrue(form.is_valid())
        self.assertEqual(form.cleaned_data['mu'], Partition())

    def test_kron_sizes(self):
        self.assertTrue(TripleForm({'lam': '2,1', 'mu': '3', 'nu': '1,1,1', 'mode': 'kron'}).is_valid())
        self.assertFalse(TripleForm({'lam': '2,1', 'mu': '3', 'nu': '2', 'mode': 'kron'}).is_valid())


class ChoiceFormTests(SimpleTestCase):
    def test_names(self):
        self.assertTrue(TableForm({'table': 'cnk', 'n_max': 5}).is_valid())
        self.assertFalse(TableForm({'table': 'xyz', 'n_max': 5}).is_valid())
        self.assertTrue(VerifyForm({'suite': 'burnside', 'n_max': 6}).is_valid())
        self.assertFalse(VerifyForm({'suite': 'nope', 'n_max': 6}).is_valid())
        self.assertFalse(ScanForm({'name': 'containment', 'n': 0}).is_valid())

    def test_bounds_needs_k(self):
        self.assertFalse(BoundsForm({'target': 'lr', 'n': 6}).is_valid())
        self.assertFalse(BoundsForm({'target': 'lr', 'n': 6, 'k': 7}).is_valid())
        self.assertTrue(BoundsForm({'target': 'kron', 'n': 6}).is_valid())
