import unittest

from fxpoly.perfmodel import BUNDLED_PPDS, PerfProfile, bundled_ppd, bundled_ppd_names
from fxpoly.util import SchemaError, UsageError

BASE = {'add': 0, 'mul': 2, 'gt': 8}


class Validation(unittest.TestCase):
    def assertField(self, field, **kwargs):
        with self.assertRaises(SchemaError) as ctx:
            PerfProfile(**kwargs)
        self.assertEqual(ctx.exception.field, field)

    def test_required_ops(self):
        self.assertField('time_dict.gt', time_dict={'add': 0, 'mul': 1})

    def test_negative_cost(self):
        self.assertField('time_dict.exp', time_dict={**BASE, 'exp': -1})

    def test_non_finite_cost(self):
        self.assertField('time_dict.log', time_dict={**BASE, 'log': float('inf')})

    def test_free_multiplication(self):
        self.assertField('time_dict.mul', time_dict={**BASE, 'mul': 0})

    def test_bad_samples(self):
        self.assertField('samples', time_dict=BASE, samples=((0, 3, 1.0),))
        self.assertField('samples', time_dict=BASE, samples=((3, 3),))
        self.assertField('samples', time_dict=BASE, samples=((3, 3, -1.0),))

    def test_vector_exponent(self):
        self.assertField('vector_exponent', time_dict=BASE, vector_exponent=0)

    def test_normalizes(self):
        profile = PerfProfile(time_dict={'add': 0, 'mul': 2, 'gt': '8'}, samples=[['3', 4, 10]])
        self.assertEqual(profile.time_dict['gt'], 8.0)
        self.assertEqual(profile.samples, ((3, 4, 10.0),))


class Json(unittest.TestCase):
    def test_roundtrip(self):
        profile = PerfProfile(BASE, ((3, 4, 10.0), (5, 6, 20.5)), 0.5, 'custom')
        self.assertEqual(PerfProfile.from_json(profile.to_json()), profile)

    def test_model_carried(self):
        doc = PerfProfile(BASE, model={'degree': 2}).to_json()
        self.assertEqual(doc['model'], {'degree': 2})
        self.assertNotIn('model', PerfProfile(BASE).to_json())

    def test_missing_time_dict(self):
        with self.assertRaises(SchemaError) as ctx:
            PerfProfile.from_json({'samples': []})
        self.assertEqual(ctx.exception.field, 'time_dict')

    def test_not_an_object(self):
        with self.assertRaises(SchemaError):
            PerfProfile.from_json([1, 2])

    def test_non_numeric_cost(self):
        with self.assertRaises(SchemaError):
            PerfProfile.from_json({'time_dict': {**BASE, 'exp': 'slow'}})

    def test_scaled(self):
        profile = PerfProfile(BASE, ((3, 4, 10.0),)).scaled(3)
        self.assertEqual(profile.time_dict['gt'], 24.0)
        self.assertEqual(profile.samples, ((3, 4, 30.0),))


class Bundled(unittest.TestCase):
    def test_all_load(self):
        self.assertEqual(bundled_ppd_names(), list(BUNDLED_PPDS))
        for name in BUNDLED_PPDS:
            with self.subTest(name):
                profile = bundled_ppd(name)
                self.assertGreater(profile.time_dict['mul'], 0)
                self.assertEqual(profile.samples, ())

    def test_ratios(self):
        privpy = bundled_ppd('privpy-rep2k').time_dict
        self.assertEqual(privpy['gt'] / privpy['mul'], 11)
        self.assertEqual(privpy['reciprocal'] / privpy['mul'], 67)
        rep2k = bundled_ppd('rep2k').time_dict
        self.assertEqual(rep2k['gt'] / rep2k['mul'], 4)
        self.assertEqual(rep2k['reciprocal'] / rep2k['mul'], 31)

    def test_unknown(self):
        with self.assertRaises(UsageError):
            bundled_ppd('nope')


if __name__ == '__main__':
    unittest.main()
