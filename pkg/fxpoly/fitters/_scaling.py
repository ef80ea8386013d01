import math
from typing import Sequence, Tuple

from fxpoly.fitters._polynomial import ScaledPolynomial
from fxpoly.fxp import FxpFormat, FxpValue, flp_sim_fxp, flp_sim_fxp_ceil, fxp_one, fxp_zero


def _overflow_scale(magnitude: float, i: int, x_char: float, fmt: FxpFormat) -> float:
    # |c| * x_char^i / 2^(n-f-1), the scale keeping c_hat * x^i inside the range
    try:
        term = magnitude * float(x_char) ** i / fmt.bound
    except OverflowError:
        return 1.0
    return term if math.isfinite(term) else 1.0


def scale_c(c: float, fmt: FxpFormat, i: int, x_char: float, scaling: bool = True) -> Tuple[FxpValue, FxpValue]:
    one = fxp_one(fmt)
    if c == 0:
        return fxp_zero(fmt), one
    if not scaling:
        return flp_sim_fxp(c, fmt), one

    magnitude = abs(c)
    s = min(max(fmt.resolution,
                _overflow_scale(magnitude, i, x_char, fmt),
                magnitude / fmt.max_value), 1.0)
    s_hat = flp_sim_fxp_ceil(s, fmt)
    return flp_sim_fxp(c / s_hat.to_float(), fmt), s_hat


def scale_poly(coefficients: Sequence[float], domain, fmt: FxpFormat, scaling: bool = True) -> ScaledPolynomial:
    a, b = domain
    x_char = max(abs(a), abs(b))
    pairs = [scale_c(float(c), fmt, i, x_char, scaling) for i, c in enumerate(coefficients)]
    return ScaledPolynomial(tuple(c for c, _ in pairs), tuple(s for _, s in pairs))
