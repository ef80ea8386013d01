import numpy as np

from fxpoly.util import ConfigError, DomainError


def sample(F, xs) -> np.ndarray:
    # Vectorized when F offers it (ExprFunction), point by point otherwise
    xs = np.asarray(xs, dtype=float)
    evaluate = getattr(F, 'evaluate', None)
    ys = np.asarray(evaluate(xs), dtype=float) if evaluate is not None else \
        np.array([float(F(x)) for x in xs], dtype=float)

    bad = ~np.isfinite(ys)
    if bad.any():
        x = float(xs[int(np.argmax(bad))])
        raise DomainError(f'target function is not finite at x={x}', x=x)
    return ys


def srd(x: float, y: float, soft_zero: float) -> float:
    if soft_zero <= 0:
        raise ConfigError('soft zero must be positive')
    diff = abs(x - y)
    return diff / abs(x) if abs(x) > soft_zero else diff


def srd_array(reference, approx, soft_zero: float) -> np.ndarray:
    reference = np.asarray(reference, dtype=float)
    diff = np.abs(reference - np.asarray(approx, dtype=float))
    magnitude = np.abs(reference)
    relative = magnitude > soft_zero
    return np.where(relative, diff / np.where(relative, magnitude, 1.0), diff)


def srd_bound_report(lipschitz_F: float, lipschitz_p: float, r: float, cfg, f_abs: float) -> float:
    """Upper bound on the SRD anywhere between samples spaced r apart.

    The constant C = C_F + C_p + eps * C_F bounds how far both functions can drift
    within one sampling interval; the bound is relative above the soft zero.
    """
    eps = cfg.epsilon
    c = lipschitz_F + lipschitz_p + eps * lipschitz_F
    if f_abs > cfg.soft_zero:
        return c * r / f_abs + eps
    return c * r + eps


def estimate_lipschitz(F, domain, samples: int = 10000) -> float:
    a, b = domain
    xs = np.linspace(a, b, samples)
    ys = sample(F, xs)
    return float(np.max(np.abs(np.diff(ys) / np.diff(xs))))
