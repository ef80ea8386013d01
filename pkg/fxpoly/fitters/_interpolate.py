import math
from typing import Sequence

import numpy as np

from fxpoly.fitters._srd import sample
from fxpoly.util import DomainError, UsageError


def chebyshev_nodes(domain, k: int) -> np.ndarray:
    a, b = domain
    j = np.arange(k + 1)
    return (a + b) / 2 + (b - a) / 2 * np.cos((2 * j + 1) * math.pi / (2 * (k + 1)))


def _divided_differences(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    coef = ys.astype(float).copy()
    for j in range(1, len(xs)):
        coef[j:] = (coef[j:] - coef[j - 1:-1]) / (xs[j:] - xs[:-j])
    return coef


def _newton_to_monomial(xs: np.ndarray, coef: np.ndarray) -> np.ndarray:
    # Horner over the Newton form: p = c0 + (x - x0)(c1 + (x - x1)(c2 + ...))
    n = len(coef)
    poly = np.zeros(n)
    poly[0] = coef[-1]
    for j in range(n - 2, -1, -1):
        shifted = np.zeros(n)
        shifted[1:] = poly[:-1]
        poly = shifted - xs[j] * poly
        poly[0] += coef[j]
    return poly


def newton_interpolate(xs, ys) -> np.ndarray:
    xs, ys = np.asarray(xs, dtype=float), np.asarray(ys, dtype=float)
    return _newton_to_monomial(xs, _divided_differences(xs, ys))


def cheby_interpolate(F, domain, k: int) -> np.ndarray:
    if k < 0:
        raise UsageError(f'negative order {k}')
    nodes = chebyshev_nodes(domain, k)
    return newton_interpolate(nodes, sample(F, nodes))


def lagrange_interpolate(F, points: Sequence[float]) -> np.ndarray:
    points = np.asarray(points, dtype=float)
    if len(points) < 1:
        raise UsageError('interpolation needs at least one point')
    if len(np.unique(points)) != len(points):
        raise UsageError('interpolation points must be distinct')
    ys = sample(F, points)
    if not np.all(np.isfinite(ys)):
        raise DomainError('target function is not finite at an interpolation point')
    return newton_interpolate(points, ys)


def poly_eval(coefficients, xs) -> np.ndarray:
    # Real-valued monomial evaluation, lowest order first
    return np.polynomial.polynomial.polyval(np.asarray(xs, dtype=float), coefficients)
