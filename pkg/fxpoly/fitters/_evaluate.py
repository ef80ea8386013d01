# Bit-exact evaluation of pieces and plans, in the same operation order as the oblivious evaluator
from bisect import bisect_right

import numpy as np

from fxpoly.fitters._polynomial import PiecewisePlan, ScaledPolynomial
from fxpoly.fxp import FxpValue, add_array, as_mantissas, kx_table, mul_array
from fxpoly.util import UsageError


def eval_scaled_array(p: ScaledPolynomial, xs: np.ndarray) -> np.ndarray:
    fmt = p.format
    powers = kx_table(xs, p.order, fmt)
    acc = None
    for c, s, power in zip(p.coeffs, p.scalers, powers):
        # coefficient times power strictly before the scaler
        term = mul_array(mul_array(c.mantissa, power, fmt), s.mantissa, fmt)
        acc = term if acc is None else add_array(acc, term, fmt)
    return acc


def eval_scaled_poly_fxp(p: ScaledPolynomial, x: FxpValue) -> FxpValue:
    if x.format != p.format:
        raise UsageError(f'format mismatch: {x.format} vs {p.format}')
    return FxpValue(eval_scaled_array(p, as_mantissas([x.mantissa]))[0], p.format)


def piece_indices(plan: PiecewisePlan, xs: np.ndarray) -> np.ndarray:
    breaks = plan.break_mantissas()
    return np.array([bisect_right(breaks, m) - 1 for m in xs], dtype=int)


def eval_plan_array(plan: PiecewisePlan, xs: np.ndarray) -> np.ndarray:
    # Select-then-evaluate; inputs below the first break get 0, as an all-zero mask would
    index = piece_indices(plan, xs)
    out = np.empty(len(xs), dtype=object)
    out[:] = [0] * len(xs)
    for j in np.unique(index):
        if j < 0:
            continue
        chosen = index == j
        out[chosen] = eval_scaled_array(plan.pieces[j], xs[chosen])
    return out


def eval_plan(plan: PiecewisePlan, x: FxpValue) -> FxpValue:
    return FxpValue(eval_plan_array(plan, as_mantissas([x.mantissa]))[0], plan.format)
