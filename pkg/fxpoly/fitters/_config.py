import dataclasses
from dataclasses import dataclass
from typing import Optional, Tuple

from fxpoly.fxp import FxpFormat
from fxpoly.util import ConfigError


@dataclass(frozen=True)
class FitConfig:
    domain: Tuple[float, float]
    epsilon: float = 1e-3
    soft_zero: float = 1e-6
    format: FxpFormat = FxpFormat(96, 48)
    k_range: Tuple[int, int] = (3, 10)
    m_max: int = 50
    max_samples: int = 1000
    defaults: Optional[Tuple[float, float]] = None
    verify_samples: int = 10000
    # Ablation switches
    scaling: bool = True
    boosting: bool = True
    merge: bool = True

    def __post_init__(self):
        a, b = self.domain
        if not a < b:
            raise ConfigError(f'domain [{a}, {b}] is empty')
        if not 0 < self.soft_zero < self.epsilon:
            raise ConfigError(f'need 0 < soft_zero < epsilon, got {self.soft_zero} and {self.epsilon}')
        k_min, k_max = self.k_range
        if not 1 <= k_min <= k_max:
            raise ConfigError(f'invalid k_range {self.k_range}')
        if self.m_max < 1:
            raise ConfigError(f'm_max must be at least 1, got {self.m_max}')
        if self.max_samples < 2 or self.verify_samples < 2:
            raise ConfigError('sample counts must be at least 2')
        object.__setattr__(self, 'domain', (float(a), float(b)))
        object.__setattr__(self, 'k_range', (int(k_min), int(k_max)))
        if self.defaults is not None:
            object.__setattr__(self, 'defaults', tuple(float(v) for v in self.defaults))

    @property
    def orders(self):
        return range(self.k_range[0], self.k_range[1] + 1)

    def replace(self, **changes) -> 'FitConfig':
        return dataclasses.replace(self, **changes)

    @classmethod
    def from_nfd(cls, doc) -> 'FitConfig':
        return cls(
            domain=tuple(doc.range),
            epsilon=doc.tol,
            soft_zero=doc.zero_mask,
            format=FxpFormat(doc.n, doc.f),
            k_range=tuple(doc.k_range),
            m_max=doc.m_max,
            max_samples=doc.max_samples,
            defaults=doc.default_values,
        )
