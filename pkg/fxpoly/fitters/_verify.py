from dataclasses import dataclass, asdict

import numpy as np

from fxpoly.fitters._config import FitConfig
from fxpoly.fitters._evaluate import eval_plan_array, piece_indices
from fxpoly.fitters._polynomial import PiecewisePlan
from fxpoly.fitters._srd import sample, srd_array
from fxpoly.fxp import snap_array, to_float_array
from fxpoly.util import UsageError


@dataclass(frozen=True)
class VerificationReport:
    max_srd: float
    mean_srd: float
    worst_x: float
    worst_piece: int
    samples: int
    epsilon: float

    @property
    def passed(self) -> bool:
        return self.max_srd < self.epsilon

    def as_dict(self) -> dict:
        return {**asdict(self), 'passed': self.passed}


def verify_plan(plan: PiecewisePlan, F, cfg: FitConfig, samples: int = None) -> VerificationReport:
    samples = cfg.verify_samples if samples is None else samples
    if samples < 2:
        raise UsageError(f'verification needs at least 2 samples, got {samples}')
    if plan.format != cfg.format:
        raise UsageError(f'plan format {plan.format} differs from {cfg.format}')

    fmt = plan.format
    a, b = plan.domain
    xs = snap_array(np.linspace(a, b, samples), fmt)
    points = to_float_array(xs, fmt)
    approx = to_float_array(eval_plan_array(plan, xs), fmt)
    errors = srd_array(sample(F, points), approx, cfg.soft_zero)

    worst = int(np.argmax(errors))
    return VerificationReport(
        max_srd=float(errors[worst]),
        mean_srd=float(np.mean(errors)),
        worst_x=float(points[worst]),
        worst_piece=int(piece_indices(plan, xs[worst:worst + 1])[0]),
        samples=samples,
        epsilon=cfg.epsilon,
    )
