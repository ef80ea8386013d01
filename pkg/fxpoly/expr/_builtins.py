import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Mapping, Optional, Tuple

import numpy as np

from fxpoly.expr._quadrature import integrate_simpson
from fxpoly.util import UsageError

DEFAULT_QUAD_TOL = 1e-10


# A function callable from expressions.
# `vector` works on numpy arrays; `valid` masks the arguments inside the mathematical domain;
# `census` is the secure building-block cost of one call, used by the direct-evaluation estimate.
@dataclass(frozen=True)
class Builtin:
    name: str
    arity: int
    vector: Callable
    census: Mapping[str, int]
    valid: Optional[Callable] = None
    constant_args: Tuple[int, ...] = ()
    uses_quadrature: bool = False
    fixed: Tuple[float, ...] = field(default=())


def _elementwise(fn):
    return np.vectorize(fn, otypes=[float])


def lower_inc_gamma(x: float, z: float, tol: float = DEFAULT_QUAD_TOL) -> float:
    if x == 0:
        return 0.0
    return integrate_simpson(lambda t: t ** (z - 1) * math.exp(-t), 0.0, x, tol)


def upper_inc_gamma(x: float, z: float, tol: float = DEFAULT_QUAD_TOL) -> float:
    return math.gamma(z) - lower_inc_gamma(x, z, tol)


def normal_cdf(x):
    return 0.5 * (1.0 + _erf(np.asarray(x) / math.sqrt(2.0)))


def normal_pdf(x):
    x = np.asarray(x)
    return np.exp(-x * x / 2.0) / math.sqrt(2.0 * math.pi)


def _ite(c, a, b):
    return np.where(np.asarray(c) > 0, a, b)


def _is_integer(v):
    return np.asarray(v) == np.floor(v)


def _pow_valid(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return ((a > 0) | _is_integer(b)) & ~((a == 0) & (b < 0))


def _gamma_valid(x):
    x = np.asarray(x)
    return ~((x <= 0) & _is_integer(x))


def _inc_gamma_valid(x, z):
    return (np.asarray(x) >= 0) & (np.asarray(z) >= 1)


_erf = _elementwise(math.erf)

BUILTINS: Dict[str, Builtin] = {}


def register(builtin: Builtin):
    BUILTINS[builtin.name] = builtin
    return builtin


def register_partial(name: str, base: str, *fixed: float) -> Builtin:
    """Registers `name(x)` as `base(x, *fixed)`, e.g. lower_inc_gamma with z bound."""
    if base not in BUILTINS:
        raise UsageError(f'cannot bind unknown function "{base}"')
    parent = BUILTINS[base]
    if parent.arity != len(fixed) + 1:
        raise UsageError(f'{base} needs {parent.arity - 1} fixed argument(s)')
    return register(Builtin(
        name=name,
        arity=1,
        vector=parent.vector,
        census=parent.census,
        valid=parent.valid,
        uses_quadrature=parent.uses_quadrature,
        fixed=tuple(float(v) for v in fixed),
    ))


def lookup(name: str) -> Optional[Builtin]:
    return BUILTINS.get(name)


register(Builtin('exp', 1, np.exp, {'exp': 1}))
register(Builtin('ln', 1, np.log, {'log': 1}, valid=lambda x: np.asarray(x) > 0))
register(Builtin('log2', 1, np.log2, {'log': 1, 'mul': 1}, valid=lambda x: np.asarray(x) > 0))
register(Builtin('sqrt', 1, np.sqrt, {'sqrt': 1}, valid=lambda x: np.asarray(x) >= 0))
register(Builtin('abs', 1, np.abs, {'comparison': 1}))
register(Builtin('tanh', 1, np.tanh, {'exp': 2, 'div': 1}))
# erf, erfc, normal_cdf and gamma use the closed-form library routines (accurate to a few ulp);
# only the incomplete gamma family has no such routine and goes through integrate_simpson.
register(Builtin('erf', 1, _erf, {'other': 1}))
register(Builtin('erfc', 1, _elementwise(math.erfc), {'other': 1}))
register(Builtin('sign', 1, np.sign, {'comparison': 1}))
register(Builtin('min', 2, np.minimum, {'comparison': 1}))
register(Builtin('max', 2, np.maximum, {'comparison': 1}))
register(Builtin('pow', 2, np.power, {'exp': 1, 'log': 1, 'mul': 1}, valid=_pow_valid))
register(Builtin('floor', 1, np.floor, {'other': 1}))
register(Builtin('ite', 3, _ite, {'comparison': 1, 'mul': 1}))
register(Builtin('normal_cdf', 1, normal_cdf, {'other': 1}))
register(Builtin('normal_pdf', 1, normal_pdf, {'exp': 1, 'mul': 2}))
register(Builtin('gamma', 1, _elementwise(math.gamma), {'other': 1}, valid=_gamma_valid))
register(Builtin('lgamma', 1, _elementwise(math.lgamma), {'other': 1}, valid=_gamma_valid))
register(Builtin('lower_inc_gamma', 2, _elementwise(lower_inc_gamma), {'other': 1},
                 valid=_inc_gamma_valid, constant_args=(1,), uses_quadrature=True))
register(Builtin('upper_inc_gamma', 2, _elementwise(upper_inc_gamma), {'other': 1},
                 valid=_inc_gamma_valid, constant_args=(1,), uses_quadrature=True))
