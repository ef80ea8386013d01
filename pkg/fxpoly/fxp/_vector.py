# Mantissa kernels over numpy object arrays of python ints.
# Each one applies the scalar rule element-wise, so results are bit-identical to the scalar ops.
from functools import lru_cache
from typing import List

import numpy as np

from fxpoly.fxp._format import FxpFormat
from fxpoly.fxp._value import snap_mantissa


@lru_cache(maxsize=None)
def _kernels(fmt: FxpFormat):
    clamp, truncate, one = fmt.clamp, fmt.truncate, fmt.one
    return {
        'snap': np.frompyfunc(lambda x: snap_mantissa(x, fmt), 1, 1),
        'mul': np.frompyfunc(lambda a, b: clamp(truncate(a * b)), 2, 1),
        'add': np.frompyfunc(lambda a, b: clamp(a + b), 2, 1),
        'sub': np.frompyfunc(lambda a, b: clamp(a - b), 2, 1),
        'ge': np.frompyfunc(lambda a, b: one if a >= b else 0, 2, 1),
    }


def as_mantissas(values) -> np.ndarray:
    out = np.empty(len(values), dtype=object)
    out[:] = [int(v) for v in values]
    return out


def _array(result) -> np.ndarray:
    # frompyfunc hands back a bare object for 0-d inputs
    if isinstance(result, np.ndarray):
        return result
    out = np.empty(1, dtype=object)
    out[0] = result
    return out


def snap_array(xs, fmt: FxpFormat) -> np.ndarray:
    return _array(_kernels(fmt)['snap'](np.asarray(xs, dtype=float)))


def mul_array(a, b, fmt: FxpFormat) -> np.ndarray:
    return _array(_kernels(fmt)['mul'](a, b))


def add_array(a, b, fmt: FxpFormat) -> np.ndarray:
    return _array(_kernels(fmt)['add'](a, b))


def sub_array(a, b, fmt: FxpFormat) -> np.ndarray:
    return _array(_kernels(fmt)['sub'](a, b))


def ge_array(a, b, fmt: FxpFormat) -> np.ndarray:
    return _array(_kernels(fmt)['ge'](a, b))


def to_float_array(ms, fmt: FxpFormat) -> np.ndarray:
    return np.array([m / fmt.one for m in ms], dtype=float)


def kx_table(xs, k: int, fmt: FxpFormat) -> List[np.ndarray]:
    # [1, x, ..., x^k] by the doubling loop: res[shift:] *= res[:-shift]
    xs = _array(xs) if not isinstance(xs, np.ndarray) else xs
    ones = np.empty(len(xs), dtype=object)
    ones[:] = [fmt.one] * len(xs)
    res = [ones] + [xs] * k

    shift = 1
    while shift <= k:
        res = res[:shift] + [mul_array(res[i], res[i - shift], fmt) for i in range(shift, k + 1)]
        shift *= 2
    return res
