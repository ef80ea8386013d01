from dataclasses import dataclass

from fxpoly.util import UsageError

OVERFLOW_MODES = ('saturate', 'wrap')
TRUNCATION_MODES = ('floor', 'zero')


# <n,f> fixed point format: n-bit signed mantissa scaled by 2^-f
@dataclass(frozen=True)
class FxpFormat:
    n: int
    f: int
    overflow: str = 'saturate'
    truncation: str = 'floor'

    def __post_init__(self):
        if not 2 <= self.n <= 128:
            raise UsageError(f'bit width n={self.n} outside [2, 128]')
        if not 1 <= self.f <= self.n - 2:
            raise UsageError(f'fraction width f={self.f} outside [1, {self.n - 2}]')
        if self.overflow not in OVERFLOW_MODES:
            raise UsageError(f'unknown overflow mode "{self.overflow}"')
        if self.truncation not in TRUNCATION_MODES:
            raise UsageError(f'unknown truncation mode "{self.truncation}"')

    @property
    def max_mantissa(self) -> int:
        return (1 << (self.n - 1)) - 1

    @property
    def min_mantissa(self) -> int:
        if self.overflow == 'wrap':
            return -(1 << (self.n - 1))
        return -self.max_mantissa

    @property
    def one(self) -> int:
        return 1 << self.f

    @property
    def resolution(self) -> float:
        return 2.0 ** -self.f

    @property
    def bound(self) -> float:
        # 2^(n-f-1), first magnitude past the largest representable value
        return 2.0 ** (self.n - self.f - 1)

    @property
    def max_value(self) -> float:
        return self.max_mantissa / self.one

    def clamp(self, m: int) -> int:
        if self.overflow == 'wrap':
            half = 1 << (self.n - 1)
            return ((m + half) % (1 << self.n)) - half
        top = self.max_mantissa
        if m > top:
            return top
        if m < -top:
            return -top
        return m

    def truncate(self, p: int) -> int:
        # Drop f fraction bits of a double-width product
        if self.truncation == 'zero':
            return p >> self.f if p >= 0 else -((-p) >> self.f)
        return p >> self.f

    def __str__(self):
        return f'<{self.n},{self.f}>'
