import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List

import numpy as np

from fxpoly.fxp._format import FxpFormat
from fxpoly.util import DomainError, UsageError


@dataclass(frozen=True)
class FxpValue:
    mantissa: int
    format: FxpFormat

    def __post_init__(self):
        if not isinstance(self.mantissa, int):
            object.__setattr__(self, 'mantissa', int(self.mantissa))
        if not self.format.min_mantissa <= self.mantissa <= self.format.max_mantissa:
            raise UsageError(f'mantissa {self.mantissa} not representable in {self.format}')

    def to_float(self) -> float:
        return self.mantissa / self.format.one

    def __float__(self):
        return self.to_float()

    def to_decimal_str(self) -> str:
        # m * 2^-f == m * 5^f * 10^-f, so the expansion is finite and exact
        f = self.format.f
        digits = str(abs(self.mantissa) * 5 ** f).rjust(f + 1, '0')
        whole, frac = digits[:-f], digits[-f:].rstrip('0') or '0'
        sign = '-' if self.mantissa < 0 else ''
        return f'{sign}{whole}.{frac}'

    def _check(self, other):
        if not isinstance(other, FxpValue):
            return NotImplemented
        if other.format != self.format:
            raise UsageError(f'format mismatch: {self.format} vs {other.format}')
        return other

    def __lt__(self, other):
        return self.mantissa < self._check(other).mantissa

    def __le__(self, other):
        return self.mantissa <= self._check(other).mantissa

    def __gt__(self, other):
        return self.mantissa > self._check(other).mantissa

    def __ge__(self, other):
        return self.mantissa >= self._check(other).mantissa

    def __repr__(self):
        return f'FxpValue({self.to_decimal_str()}, {self.format})'


def fxp_from_mantissa(m: int, fmt: FxpFormat) -> FxpValue:
    return FxpValue(int(m), fmt)


def fxp_from_decimal_str(text: str, fmt: FxpFormat) -> FxpValue:
    scaled = Fraction(text) * fmt.one
    if scaled.denominator != 1:
        raise UsageError(f'{text} is not on the {fmt} grid')
    return FxpValue(int(scaled), fmt)


def fxp_zero(fmt: FxpFormat) -> FxpValue:
    return FxpValue(0, fmt)


def fxp_one(fmt: FxpFormat) -> FxpValue:
    return FxpValue(fmt.one, fmt)


def snap_mantissa(x, fmt: FxpFormat, rounding: str = 'zero') -> int:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f'cannot represent non-finite value {x}', x=x)

    if abs(x) >= fmt.bound:
        return fmt.max_mantissa if x > 0 else -fmt.max_mantissa

    # |x| < 2^(n-f-1) so the scaled value is exact and below 2^(n-1)
    scaled = x * 2.0 ** fmt.f
    if rounding == 'ceil':
        m = math.ceil(scaled)
    elif rounding == 'floor':
        m = math.floor(scaled)
    else:
        m = int(scaled)
    return max(-fmt.max_mantissa, min(fmt.max_mantissa, m))


def flp_sim_fxp(x, fmt: FxpFormat) -> FxpValue:
    return FxpValue(snap_mantissa(x, fmt), fmt)


def flp_sim_fxp_ceil(x, fmt: FxpFormat) -> FxpValue:
    return FxpValue(snap_mantissa(x, fmt, 'ceil'), fmt)


def flp_sim_fxp_floor(x, fmt: FxpFormat) -> FxpValue:
    return FxpValue(snap_mantissa(x, fmt, 'floor'), fmt)


def _same_format(a: FxpValue, b: FxpValue) -> FxpFormat:
    if a.format != b.format:
        raise UsageError(f'format mismatch: {a.format} vs {b.format}')
    return a.format


def fxp_add(a: FxpValue, b: FxpValue) -> FxpValue:
    fmt = _same_format(a, b)
    return FxpValue(fmt.clamp(a.mantissa + b.mantissa), fmt)


def fxp_sub(a: FxpValue, b: FxpValue) -> FxpValue:
    fmt = _same_format(a, b)
    return FxpValue(fmt.clamp(a.mantissa - b.mantissa), fmt)


def fxp_neg(a: FxpValue) -> FxpValue:
    return FxpValue(a.format.clamp(-a.mantissa), a.format)


def fxp_mul(a: FxpValue, b: FxpValue) -> FxpValue:
    fmt = _same_format(a, b)
    return FxpValue(fmt.clamp(fmt.truncate(a.mantissa * b.mantissa)), fmt)


def fxp_ge(a: FxpValue, b: FxpValue) -> FxpValue:
    fmt = _same_format(a, b)
    return FxpValue(fmt.one if a.mantissa >= b.mantissa else 0, fmt)


def linspace_fxp(a: float, b: float, count: int, fmt: FxpFormat) -> List[FxpValue]:
    if not a < b:
        raise DomainError(f'empty interval [{a}, {b}]', x=a)
    if count < 2:
        raise UsageError(f'linspace needs at least 2 points, got {count}')
    return [flp_sim_fxp(x, fmt) for x in np.linspace(a, b, count)]
