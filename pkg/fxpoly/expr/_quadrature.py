import math

from fxpoly.util import ConvergenceError, DomainError, UsageError

MAX_DEPTH = 50


def _value(f, t):
    y = float(f(t))
    if not math.isfinite(y):
        raise DomainError(f'integrand is not finite at {t}', x=t)
    return y


def _adaptive(f, a, b, fa, fm, fb, whole, tol, depth):
    m = (a + b) / 2
    lm, rm = (a + m) / 2, (m + b) / 2
    flm, frm = _value(f, lm), _value(f, rm)
    left = (m - a) / 6 * (fa + 4 * flm + fm)
    right = (b - m) / 6 * (fm + 4 * frm + fb)
    delta = left + right - whole

    if abs(delta) <= 15 * tol:
        return left + right + delta / 15
    if depth <= 0:
        raise ConvergenceError(f'adaptive Simpson did not converge on [{a}, {b}]')

    return (_adaptive(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
            _adaptive(f, m, b, fm, frm, fb, right, tol / 2, depth - 1))


def integrate_simpson(f, lo: float, hi: float, tol: float = 1e-10, max_depth: int = MAX_DEPTH) -> float:
    if tol <= 0:
        raise UsageError(f'quadrature tolerance must be positive, got {tol}')
    if lo == hi:
        return 0.0
    if hi < lo:
        return -integrate_simpson(f, hi, lo, tol, max_depth)

    fa, fm, fb = _value(f, lo), _value(f, (lo + hi) / 2), _value(f, hi)
    whole = (hi - lo) / 6 * (fa + 4 * fm + fb)
    return _adaptive(f, lo, hi, fa, fm, fb, whole, tol, max_depth)
