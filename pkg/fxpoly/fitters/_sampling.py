import math

import numpy as np

from fxpoly.fitters._evaluate import eval_scaled_array
from fxpoly.fitters._polynomial import ScaledPolynomial
from fxpoly.fitters._srd import sample, srd_array
from fxpoly.fxp import FxpFormat, as_mantissas, snap_mantissa, to_float_array
from fxpoly.util import DomainError


def grid_size(a: float, b: float, fmt: FxpFormat) -> int:
    # representable points inside [a, b]
    scale = 2.0 ** fmt.f
    return max(0, math.floor(b * scale) - math.ceil(a * scale) + 1)


# The sampled grid of one piece with F evaluated once at every grid point
class SampleGrid:
    def __init__(self, F, mantissas: np.ndarray, fmt: FxpFormat, soft_zero: float):
        self.format = fmt
        self.mantissas = mantissas
        self.points = to_float_array(mantissas, fmt)
        self.reference = sample(F, self.points)
        self.soft_zero = soft_zero

    @classmethod
    def between(cls, F, start: int, stop: int, count: int, fmt: FxpFormat, soft_zero: float) -> 'SampleGrid':
        # Evenly spread over the mantissas start..stop, both ends included, in exact integer arithmetic
        if stop < start:
            raise DomainError(f'empty mantissa range [{start}, {stop}]', x=start / fmt.one)
        count = min(count, stop - start + 1)
        if count < 2:
            return cls(F, as_mantissas([start]), fmt, soft_zero)
        span = stop - start
        return cls(F, as_mantissas([start + span * i // (count - 1) for i in range(count)]), fmt, soft_zero)

    @classmethod
    def build(cls, F, domain, count: int, fmt: FxpFormat, soft_zero: float) -> 'SampleGrid':
        a, b = domain
        return cls.between(F, snap_mantissa(a, fmt, 'ceil'), snap_mantissa(b, fmt, 'floor'), count, fmt, soft_zero)

    def errors(self, p: ScaledPolynomial) -> np.ndarray:
        approx = to_float_array(eval_scaled_array(p, self.mantissas), self.format)
        return srd_array(self.reference, approx, self.soft_zero)

    def max_srd(self, p: ScaledPolynomial) -> float:
        return float(np.max(self.errors(p)))
