import json
import math
from importlib import resources
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Tuple

from fxpoly.expr import Expression, parse
from fxpoly.fxp import FxpFormat
from fxpoly.perfmodel import PRICED_OPS, PerfProfile, with_simulated_samples
from fxpoly.util import FxpolyError, SchemaError, UsageError

REQUIRED_FIELDS = ('function', 'range', 'tol', 'zero_mask', 'n', 'f')


# Non-linear function definition: what to fit, on which domain, at which precision
@dataclass(frozen=True)
class NfdDocument:
    function: str
    range: Tuple[float, float]
    tol: float
    zero_mask: float
    n: int
    f: int
    default_values: Optional[Tuple[float, float]] = None
    ops: Tuple[str, ...] = ()
    template: str = 'sim'
    output: Optional[str] = None
    k_range: Tuple[int, int] = (3, 10)
    m_max: int = 50
    max_samples: int = 1000
    name: str = ''
    base_dir: Optional[Path] = field(default=None, compare=False)

    def __post_init__(self):
        try:
            a, b = (float(v) for v in self.range)
        except (TypeError, ValueError):
            raise SchemaError('range', 'expected [a, b]')
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise SchemaError('range', f'need finite a < b, got [{a}, {b}]')
        object.__setattr__(self, 'range', (a, b))

        if not self.tol > 0:
            raise SchemaError('tol', 'must be positive')
        if not 0 < self.zero_mask < self.tol:
            raise SchemaError('zero_mask', f'need 0 < zero_mask < tol, got {self.zero_mask} and {self.tol}')
        try:
            FxpFormat(self.n, self.f)
        except UsageError as e:
            raise SchemaError('n', str(e))
        try:
            parse(self.function)
        except FxpolyError as e:
            raise SchemaError('function', str(e))

        if self.default_values is not None:
            if len(self.default_values) != 2:
                raise SchemaError('default_values', 'expected [left, right]')
            object.__setattr__(self, 'default_values', tuple(float(v) for v in self.default_values))
        k_min, k_max = self.k_range
        if not 1 <= k_min <= k_max:
            raise SchemaError('k_range', f'invalid order range {self.k_range}')
        object.__setattr__(self, 'k_range', (int(k_min), int(k_max)))
        if self.m_max < 1:
            raise SchemaError('m_max', 'must be at least 1')
        if self.max_samples < 2:
            raise SchemaError('max_samples', 'must be at least 2')
        unknown = sorted(set(self.ops) - set(PRICED_OPS))
        if unknown:
            raise SchemaError('ops', f'unknown operation(s) {", ".join(map(str, unknown))}')
        object.__setattr__(self, 'ops', tuple(self.ops))

    @property
    def format(self) -> FxpFormat:
        return FxpFormat(self.n, self.f)

    @property
    def expression(self) -> Expression:
        return parse(self.function)

    @property
    def function_name(self) -> str:
        return self.name or 'fxpoly_fn'

    def output_path(self) -> Optional[Path]:
        if self.output is None:
            return None
        path = Path(self.output)
        if not path.is_absolute() and self.base_dir is not None:
            path = self.base_dir / path
        return path


def _number(doc, name, kind=float):
    try:
        return kind(doc[name])
    except (TypeError, ValueError):
        raise SchemaError(name, f'expected a number, got {doc[name]!r}')


def nfd_from_json(doc: dict, base_dir: Optional[Path] = None) -> NfdDocument:
    if not isinstance(doc, dict):
        raise SchemaError('nfd', 'expected a JSON object')
    for name in REQUIRED_FIELDS:
        if name not in doc:
            raise SchemaError(name)
    if not isinstance(doc['function'], str):
        raise SchemaError('function', 'expected an expression string')

    optional = {}
    for name in ('default_values', 'ops', 'k_range'):
        if name in doc and doc[name] is not None:
            if not isinstance(doc[name], list):
                raise SchemaError(name, 'expected a list')
            optional[name] = tuple(doc[name])
    for name in ('template', 'output', 'name'):
        if name in doc and doc[name] is not None:
            optional[name] = str(doc[name])
    for name in ('m_max', 'max_samples'):
        if name in doc:
            optional[name] = _number(doc, name, int)

    if not isinstance(doc['range'], list):
        raise SchemaError('range', 'expected [a, b]')
    return NfdDocument(
        function=doc['function'],
        range=tuple(doc['range']),
        tol=_number(doc, 'tol'),
        zero_mask=_number(doc, 'zero_mask'),
        n=_number(doc, 'n', int),
        f=_number(doc, 'f', int),
        base_dir=base_dir,
        **optional,
    )


def _read_json(path, field_name):
    with open(path, 'r') as file:
        try:
            return json.load(file)
        except json.JSONDecodeError as e:
            raise SchemaError(field_name, f'invalid JSON: {e}')


def parse_nfd(path) -> NfdDocument:
    return nfd_from_json(_read_json(path, 'nfd'), Path(path).parent)


def parse_ppd(path, seed: int = 0) -> PerfProfile:
    # A PPD without timed samples is completed by the simulator's accountant
    return with_simulated_samples(PerfProfile.from_json(_read_json(path, 'ppd')), seed)


BUNDLED_NFDS = ('sigmoid', 'soft_sign')


def bundled_nfd(name: str) -> NfdDocument:
    if name not in BUNDLED_NFDS:
        raise UsageError(f'unknown bundled function definition "{name}"')
    text = resources.files('fxpoly.codegen').joinpath('nfd', f'{name}.json').read_text()
    return nfd_from_json(json.loads(text))
