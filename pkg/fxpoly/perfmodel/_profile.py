import math
from dataclasses import dataclass, field, replace
from typing import Dict, Mapping, Optional, Sequence, Tuple

from fxpoly.util import SchemaError

PRICED_OPS = ('add', 'mul', 'gt', 'reciprocal', 'sqrt', 'log', 'exp')
REQUIRED_OPS = ('add', 'mul', 'gt')


# Unit costs in milliseconds per 100-element vector operation, plus timed (k, m) samples
@dataclass(frozen=True)
class PerfProfile:
    time_dict: Mapping[str, float]
    samples: Tuple[Tuple[int, int, float], ...] = ()
    vector_exponent: float = 1.0
    name: str = ''
    model: Optional[dict] = field(default=None, compare=False)

    def __post_init__(self):
        costs = {str(op): float(cost) for op, cost in dict(self.time_dict).items()}
        for op in REQUIRED_OPS:
            if op not in costs:
                raise SchemaError(f'time_dict.{op}')
        for op, cost in costs.items():
            if not math.isfinite(cost) or cost < 0:
                raise SchemaError(f'time_dict.{op}', f'unit cost must be finite and >= 0, got {cost}')
        if costs['mul'] <= 0:
            raise SchemaError('time_dict.mul', 'multiplication must have a positive cost')
        object.__setattr__(self, 'time_dict', costs)

        samples = []
        for entry in self.samples:
            try:
                k, m, t = entry
                k, m, t = int(k), int(m), float(t)
            except (TypeError, ValueError):
                raise SchemaError('samples', f'expected [k, m, time], got {entry!r}')
            if k < 1 or m < 1 or not math.isfinite(t) or t < 0:
                raise SchemaError('samples', f'invalid sample {entry!r}')
            samples.append((k, m, t))
        object.__setattr__(self, 'samples', tuple(samples))

        if not self.vector_exponent > 0:
            raise SchemaError('vector_exponent', 'must be positive')

    def with_samples(self, samples: Sequence[Tuple[int, int, float]], model: Optional[dict] = None) -> 'PerfProfile':
        return replace(self, samples=tuple(samples), model=model if model is not None else self.model)

    def scaled(self, factor: float) -> 'PerfProfile':
        return replace(self,
                       time_dict={op: cost * factor for op, cost in self.time_dict.items()},
                       samples=tuple((k, m, t * factor) for k, m, t in self.samples))

    def to_json(self) -> dict:
        doc = {
            'name': self.name,
            'time_dict': dict(self.time_dict),
            'vector_exponent': self.vector_exponent,
            'samples': [[k, m, t] for k, m, t in self.samples],
        }
        if self.model is not None:
            doc['model'] = self.model
        return doc

    @classmethod
    def from_json(cls, doc: Dict) -> 'PerfProfile':
        if not isinstance(doc, dict):
            raise SchemaError('ppd', 'expected a JSON object')
        if 'time_dict' not in doc or not isinstance(doc['time_dict'], dict):
            raise SchemaError('time_dict')
        try:
            exponent = float(doc.get('vector_exponent', 1.0))
        except (TypeError, ValueError):
            raise SchemaError('vector_exponent', 'must be a number')
        samples = doc.get('samples', [])
        if not isinstance(samples, list):
            raise SchemaError('samples', 'expected a list of [k, m, time]')
        try:
            time_dict = {op: float(cost) for op, cost in doc['time_dict'].items()}
        except (TypeError, ValueError):
            raise SchemaError('time_dict', 'unit costs must be numbers')
        return cls(time_dict=time_dict, samples=tuple(samples), vector_exponent=exponent,
                   name=str(doc.get('name', '')), model=doc.get('model'))
