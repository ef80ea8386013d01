import logging

import numpy as np

from fxpoly.fitters._evaluate import eval_scaled_array
from fxpoly.fitters._interpolate import cheby_interpolate
from fxpoly.fitters._polynomial import ScaledPolynomial
from fxpoly.fitters._sampling import SampleGrid, grid_size
from fxpoly.fitters._scaling import scale_poly
from fxpoly.fitters._srd import sample
from fxpoly.fxp import snap_array, to_float_array
from fxpoly.util import Logger, Log

log = logging.getLogger(__name__)


# R(x) = F(x_hat) - p_hat(x_hat), with p_hat evaluated in fixed point so R holds the rounding error
class _Residual:
    def __init__(self, F, p: ScaledPolynomial):
        self.F = F
        self.p = p

    def evaluate(self, xs) -> np.ndarray:
        fmt = self.p.format
        mantissas = snap_array(xs, fmt)
        snapped = to_float_array(mantissas, fmt)
        return sample(self.F, snapped) - to_float_array(eval_scaled_array(self.p, mantissas), fmt)

    def __call__(self, x):
        return float(self.evaluate(np.array([x]))[0])


def _boost(p: ScaledPolynomial, residual: np.ndarray, domain, cfg) -> ScaledPolynomial:
    k = len(residual) - 1
    merged = p.real_coefficients()[:k + 1] + residual
    low = scale_poly(merged, domain, cfg.format, scaling=cfg.scaling)
    return ScaledPolynomial(low.coeffs + p.coeffs[k + 1:], low.scalers + p.scalers[k + 1:])


def residual_boost(p: ScaledPolynomial, F, domain, cfg, grid: SampleGrid = None) -> ScaledPolynomial:
    if grid is None:
        a, b = domain
        count = min(cfg.max_samples, grid_size(a, b, cfg.format))
        grid = SampleGrid.build(F, domain, count, cfg.format, cfg.soft_zero)

    logger = Logger()
    best, best_err = p, grid.max_srd(p)
    for order in range(p.order - 1, -1, -1):
        residual = cheby_interpolate(_Residual(F, best), domain, order)
        candidate = _boost(best, residual, domain, cfg)
        err = grid.max_srd(candidate)
        if err < best_err:
            log.debug('boost at order %d on %s: %.3e -> %.3e', order, domain, best_err, err)
            best, best_err = candidate, err
            logger.increment(Log.BOOST_ACCEPT)
        else:
            logger.increment(Log.BOOST_REJECT)
    return best
