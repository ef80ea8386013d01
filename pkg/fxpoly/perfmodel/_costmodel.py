import logging
import math
from dataclasses import dataclass, replace
from typing import Tuple

import numpy as np

from fxpoly.perfmodel._profile import PerfProfile
from fxpoly.util import ModelFitError

log = logging.getLogger(__name__)

FEATURE_NAMES = ('1', 'k', 'm', 'k*m', 'k*log2(k)', 'm^2', 'k^2')


def features(k: int, m: int) -> np.ndarray:
    return np.array([1.0, k, m, k * m, k * math.log2(k), m * m, k * k])


# Least squares regression of OPPE cost over (k, m)
@dataclass(frozen=True)
class CostModel:
    coefficients: Tuple[float, ...]
    k_range: Tuple[int, int]
    m_range: Tuple[int, int]
    rms_residual: float = 0.0

    def predict(self, k: int, m: int) -> float:
        return float(np.dot(self.coefficients, features(k, m)))

    def in_range(self, k: int, m: int) -> bool:
        return self.k_range[0] <= k <= self.k_range[1] and self.m_range[0] <= m <= self.m_range[1]

    def scaled(self, factor: float) -> 'CostModel':
        return replace(self, coefficients=tuple(c * factor for c in self.coefficients),
                       rms_residual=self.rms_residual * factor)

    def describe(self) -> dict:
        return {
            'features': list(FEATURE_NAMES),
            'degree': 2,
            'coefficients': list(self.coefficients),
            'k_range': list(self.k_range),
            'm_range': list(self.m_range),
            'rms_residual': self.rms_residual,
        }


def fit_cost_model(profile: PerfProfile) -> CostModel:
    samples = profile.samples
    if len(samples) < len(FEATURE_NAMES):
        raise ModelFitError(f'need at least {len(FEATURE_NAMES)} samples, got {len(samples)}')

    X = np.array([features(k, m) for k, m, _ in samples])
    y = np.array([t for _, _, t in samples])

    if np.linalg.matrix_rank(X) < X.shape[1]:
        raise ModelFitError('rank deficient design matrix, widen the (k, m) grid')

    coefficients, _, _, _ = np.linalg.lstsq(X, y, rcond=None)
    if not np.all(np.isfinite(coefficients)):
        raise ModelFitError('non-finite regression coefficients')

    residual = float(np.sqrt(np.mean((X @ coefficients - y) ** 2)))
    ks = [k for k, _, _ in samples]
    ms = [m for _, m, _ in samples]
    log.info('Fitted cost model on %d samples, rms residual %.4g', len(samples), residual)
    return CostModel(tuple(float(c) for c in coefficients), (min(ks), max(ks)), (min(ms), max(ms)), residual)


def predict_oppe_cost(model: CostModel, k: int, m: int) -> float:
    if not model.in_range(k, m):
        log.warning('Extrapolating cost model to (k=%d, m=%d) outside k%s, m%s',
                    k, m, model.k_range, model.m_range)
    return model.predict(k, m)
