import json
import tempfile
import unittest
from pathlib import Path

from fxpoly.codegen import nfd_from_json, pipeline, write_report
from fxpoly.fitters import PiecewisePlan
from fxpoly.perfmodel import PerfProfile

# Synthetic timings: cost grows with k and m, intercept 10
PROFILE = PerfProfile({'add': 0, 'mul': 2, 'gt': 8},
                      tuple((k, m, k * m + 10.0) for k in range(3, 9) for m in range(2, 11)))


def nfd(**changes):
    doc = {'function': 'exp(x)', 'range': [0, 1], 'tol': 1e-3, 'zero_mask': 1e-6, 'n': 96, 'f': 48,
           'k_range': [3, 4], 'name': 'exp_unit', 'default_values': [1, 2.718281828459045]}
    return nfd_from_json({**doc, **changes})


class Pipeline(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.result = pipeline(nfd(), PROFILE)

    def test_selects_plan(self):
        self.assertFalse(self.result.decision.is_direct)
        self.assertTrue(self.result.plan.finalized)
        self.assertIn(self.result.plan.k, (3, 4))

    def test_verified(self):
        self.assertTrue(self.result.verification.passed)

    def test_source_is_sim_plan(self):
        reloaded = PiecewisePlan.from_json(json.loads(self.result.source))
        self.assertEqual(reloaded, self.result.plan)

    def test_report(self):
        report = self.result.report()
        self.assertEqual(report['decision'], 'plan')
        self.assertEqual(report['name'], 'exp_unit')
        self.assertEqual([c['k'] for c in report['candidates']], [3, 4])
        self.assertTrue(report['verification']['passed'])

    def test_write_report(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'report.json'
            write_report(self.result.report(), path)
            self.assertEqual(json.loads(path.read_text())['function'], 'exp(x)')


class DirectEvaluation(unittest.TestCase):
    def test_square_is_direct(self):
        result = pipeline(nfd(function='x^2', default_values=[0, 1], k_range=[3, 3]), PROFILE)
        self.assertTrue(result.decision.is_direct)
        self.assertIsNone(result.source)
        self.assertIsNone(result.verification)
        self.assertEqual(result.report()['decision'], 'direct_eval')
        self.assertEqual(result.report()['predicted_cost'], 2)


if __name__ == '__main__':
    unittest.main()
