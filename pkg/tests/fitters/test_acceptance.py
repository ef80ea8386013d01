import unittest

import numpy as np

from fxpoly.expr import LIBRARY, compile_function, library_function
from fxpoly.fitters import FitConfig, estimate_lipschitz, fit_candidates, fit_candidates_with_report, \
    fit_piecewise, poly_eval, sample, srd_array, srd_bound_report, verify_plan
from fxpoly.fxp import FxpFormat
from fxpoly.util import Log, Logger
from tests.strategies import SLOW_TESTS

Q32 = FxpFormat(32, 16)


def _config(name, **changes):
    f = library_function(name)
    return compile_function(f.text), FitConfig(domain=f.domain, defaults=f.defaults, **changes)


def _failures(F, cfg):
    logger = Logger()
    before = logger.get(Log.FIT_FAILURE, 0)
    _, outcomes = fit_candidates_with_report(F, cfg)
    return logger.get(Log.FIT_FAILURE, 0) - before, outcomes


# Thorough sweeps over the benchmark functions, minutes rather than seconds
@unittest.skipUnless(SLOW_TESTS, 'set FXPOLY_SLOW_TESTS to run')
class LibraryCoverage(unittest.TestCase):
    def test_every_benchmark_function(self):
        for name in LIBRARY:
            with self.subTest(name):
                F, cfg = _config(name)
                plans = fit_candidates(F, cfg)
                self.assertTrue(plans)
                self.assertLessEqual(min(p.m for p in plans), 54)
                for plan in plans:
                    self.assertTrue(verify_plan(plan, F, cfg).passed)

    def test_sigmoid_order_seven(self):
        F, cfg = _config('sigmoid')
        plan = fit_piecewise(F, cfg, 7)
        self.assertIsNotNone(plan)
        self.assertLessEqual(plan.m, 20)


@unittest.skipUnless(SLOW_TESTS, 'set FXPOLY_SLOW_TESTS to run')
class LowWidth(unittest.TestCase):
    def test_tanh(self):
        F = compile_function(library_function('tanh').text)
        cfg = FitConfig(domain=(-11.1, 11.1), epsilon=5e-2, soft_zero=1e-2, format=Q32, k_range=(4, 4))
        plan = fit_piecewise(F, cfg, 4)
        self.assertIsNotNone(plan)
        self.assertLessEqual(plan.m, 12)

    def test_normal_density(self):
        F = compile_function(library_function('normal_dis').text)
        cfg = FitConfig(domain=(-4.7, 4.7), epsilon=5e-2, soft_zero=1e-2, format=Q32, k_range=(3, 5))
        plans = fit_candidates(F, cfg)
        self.assertTrue(any(p.m <= 14 for p in plans))


@unittest.skipUnless(SLOW_TESTS, 'set FXPOLY_SLOW_TESTS to run')
class Ablation(unittest.TestCase):
    def test_boosting_helps_gamma_density(self):
        F, cfg = _config('gamma_dis')
        with_boost, boosted = _failures(F, cfg)
        without_boost, plain = _failures(F, cfg.replace(boosting=False))

        worse_srd = any(a.m == b.m and a.max_srd is not None and b.max_srd is not None and b.max_srd > a.max_srd
                        for a, b in zip(boosted, plain))
        self.assertTrue(without_boost > with_boost or worse_srd)

    def test_scaling_helps_selu(self):
        F, cfg = _config('selu')
        with_scaling, _ = _failures(F, cfg)
        without_scaling, _ = _failures(F, cfg.replace(scaling=False))
        self.assertGreater(without_scaling, with_scaling)


@unittest.skipUnless(SLOW_TESTS, 'set FXPOLY_SLOW_TESTS to run')
class ErrorBound(unittest.TestCase):
    def check(self, name, k):
        F, cfg = _config(name)
        plan = fit_piecewise(F, cfg, k)
        self.assertIsNotNone(plan)
        one = plan.format.one
        stops = [w.mantissa for w in plan.breaks[1:]] + [plan.end.mantissa]
        for start, stop, piece in zip(plan.breaks, stops, plan.pieces):
            lo, hi = start.mantissa / one, stop / one
            coefficients = piece.real_coefficients()
            r = (hi - lo) / (cfg.max_samples - 1)
            dense = np.linspace(lo, hi, 10 * cfg.max_samples)
            reference = sample(F, dense)
            lipschitz_p = estimate_lipschitz(lambda x: float(poly_eval(coefficients, [x])[0]), (lo, hi))
            bound = srd_bound_report(estimate_lipschitz(F, (lo, hi)), lipschitz_p, r, cfg,
                                     float(np.min(np.abs(reference))))
            measured = np.max(srd_array(reference, poly_eval(coefficients, dense), cfg.soft_zero))
            self.assertLessEqual(measured, bound)

    def test_sigmoid(self):
        self.check('sigmoid', 7)

    def test_tanh(self):
        self.check('tanh', 5)


if __name__ == '__main__':
    unittest.main()
