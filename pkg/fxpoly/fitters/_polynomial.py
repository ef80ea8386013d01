from bisect import bisect_right
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from fxpoly.fxp import FxpFormat, FxpValue, fxp_from_decimal_str, fxp_one, fxp_zero, flp_sim_fxp
from fxpoly.util import SchemaError, UsageError


# One piece: coefficient/scaler pairs, term i evaluates as (c_i * x^i) * s_i
@dataclass(frozen=True)
class ScaledPolynomial:
    coeffs: Tuple[FxpValue, ...]
    scalers: Tuple[FxpValue, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(self.coeffs))
        object.__setattr__(self, 'scalers', tuple(self.scalers))
        if len(self.coeffs) == 0 or len(self.coeffs) != len(self.scalers):
            raise UsageError('coefficients and scalers must be non-empty and of equal length')
        fmt = self.coeffs[0].format
        for value in self.coeffs + self.scalers:
            if value.format != fmt:
                raise UsageError('mixed formats in one polynomial')
        for s in self.scalers:
            if not 0 < s.mantissa <= fmt.one:
                raise UsageError(f'scaler {s} outside (0, 1]')

    @property
    def format(self) -> FxpFormat:
        return self.coeffs[0].format

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value: float, fmt: FxpFormat) -> 'ScaledPolynomial':
        return cls((flp_sim_fxp(value, fmt),), (fxp_one(fmt),))

    def padded(self, k: int) -> 'ScaledPolynomial':
        if k < self.order:
            raise UsageError(f'cannot pad order {self.order} down to {k}')
        extra = k - self.order
        return ScaledPolynomial(self.coeffs + (fxp_zero(self.format),) * extra,
                                self.scalers + (fxp_one(self.format),) * extra)

    def real_coefficients(self) -> np.ndarray:
        return np.array([c.to_float() * s.to_float() for c, s in zip(self.coeffs, self.scalers)])


# Breakpoints w_0 < ... < w_{m-1} with one piece each; piece j covers [w_j, w_{j+1}), the last one
# ends at `end`. A finalized plan carries a sentinel piece below the domain and a tail piece from `end`.
@dataclass(frozen=True)
class PiecewisePlan:
    format: FxpFormat
    breaks: Tuple[FxpValue, ...]
    pieces: Tuple[ScaledPolynomial, ...]
    end: FxpValue
    defaults: Tuple[float, float] = (0.0, 0.0)
    finalized: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'breaks', tuple(self.breaks))
        object.__setattr__(self, 'pieces', tuple(self.pieces))
        object.__setattr__(self, 'defaults', tuple(float(v) for v in self.defaults))
        if len(self.breaks) == 0 or len(self.breaks) != len(self.pieces):
            raise UsageError('a plan needs one break per piece')
        for value in self.breaks + (self.end,):
            if value.format != self.format:
                raise UsageError('break format differs from plan format')
        for lo, hi in zip(self.breaks, self.breaks[1:]):
            if not lo.mantissa < hi.mantissa:
                raise UsageError('breaks must be strictly increasing')
        if self.finalized:
            if self.end != self.breaks[-1] or len(self.pieces) < 3:
                raise UsageError('finalized plan must end on its tail break')
        elif not self.breaks[-1].mantissa < self.end.mantissa:
            raise UsageError('plan end must lie above the last break')
        orders = {p.order for p in self.pieces}
        if len(orders) != 1:
            raise UsageError('pieces must be padded to a common order')
        if any(p.format != self.format for p in self.pieces):
            raise UsageError('piece format differs from plan format')

    @property
    def k(self) -> int:
        return self.pieces[0].order

    @property
    def m(self) -> int:
        return len(self.pieces) - 2 if self.finalized else len(self.pieces)

    @property
    def domain(self) -> Tuple[float, float]:
        first = self.breaks[1] if self.finalized else self.breaks[0]
        return first.to_float(), self.end.to_float()

    def break_mantissas(self):
        return [w.mantissa for w in self.breaks]

    def piece_index(self, x: FxpValue) -> int:
        # greatest j with x >= w_j, -1 below the first break
        return bisect_right(self.break_mantissas(), x.mantissa) - 1

    def to_json(self) -> dict:
        return {
            'encoding': 'mantissa',
            'format': {'n': self.format.n, 'f': self.format.f,
                       'overflow': self.format.overflow, 'truncation': self.format.truncation},
            'k': self.k,
            'm': self.m,
            'finalized': self.finalized,
            'defaults': list(self.defaults),
            'breaks': [str(w.mantissa) for w in self.breaks],
            'end': str(self.end.mantissa),
            'coeff': [[str(c.mantissa) for c in p.coeffs] for p in self.pieces],
            'scaler': [[str(s.mantissa) for s in p.scalers] for p in self.pieces],
        }

    @classmethod
    def from_json(cls, doc: dict) -> 'PiecewisePlan':
        try:
            fmt_doc = doc['format']
            fmt = FxpFormat(int(fmt_doc['n']), int(fmt_doc['f']),
                            fmt_doc.get('overflow', 'saturate'), fmt_doc.get('truncation', 'floor'))
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaError('format', str(e))

        encoding = doc.get('encoding', 'mantissa')
        if encoding == 'mantissa':
            def value(text):
                return FxpValue(int(text), fmt)
        elif encoding == 'decimal':
            def value(text):
                return fxp_from_decimal_str(str(text), fmt)
        else:
            raise SchemaError('encoding', f'unknown encoding "{encoding}"')

        for field in ('breaks', 'end', 'coeff', 'scaler'):
            if field not in doc:
                raise SchemaError(field)
        try:
            pieces = [ScaledPolynomial(tuple(value(c) for c in cs), tuple(value(s) for s in ss))
                      for cs, ss in zip(doc['coeff'], doc['scaler'])]
            return cls(
                format=fmt,
                breaks=tuple(value(w) for w in doc['breaks']),
                pieces=tuple(pieces),
                end=value(doc['end']),
                defaults=tuple(doc.get('defaults', (0.0, 0.0))),
                finalized=bool(doc.get('finalized', False)),
            )
        except (TypeError, ValueError, UsageError) as e:
            raise SchemaError('plan', str(e))
