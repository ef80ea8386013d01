import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from fxpoly.fitters import PiecewisePlan, ScaledPolynomial
from fxpoly.fxp import FxpFormat, FxpValue, linspace_fxp
from fxpoly.util import UsageError

log = logging.getLogger(__name__)

TARGET_SUITE_SIZE = 2000


@dataclass(frozen=True)
class SuiteEntry:
    k: int
    m: int
    plan: PiecewisePlan


def _random_piece(k: int, fmt: FxpFormat, rng: random.Random) -> ScaledPolynomial:
    one = fmt.one
    coeffs = tuple(FxpValue(rng.randint(-one, one), fmt) for _ in range(k + 1))
    scalers = tuple(FxpValue(rng.randint(1, one), fmt) for _ in range(k + 1))
    return ScaledPolynomial(coeffs, scalers)


def _random_plan(k: int, m: int, fmt: FxpFormat, rng: random.Random) -> PiecewisePlan:
    points = linspace_fxp(-float(m), float(m), m + 1, fmt)
    return PiecewisePlan(
        format=fmt,
        breaks=tuple(points[:-1]),
        pieces=tuple(_random_piece(k, fmt, rng) for _ in range(m)),
        end=points[-1],
    )


def generate_profiling_suite(k_range: Tuple[int, int] = (3, 10), m_range: Tuple[int, int] = (2, 50),
                             repeats: Optional[int] = None, seed: int = 0,
                             fmt: FxpFormat = FxpFormat(96, 48)) -> List[SuiteEntry]:
    """
    Synthetic plans with random valid coefficients, `repeats` per (k, m) cell
    of the grid. With repeats unset, enough are drawn per cell for about 2000
    plans in total.
    """
    k_lo, k_hi = k_range
    m_lo, m_hi = m_range
    if not (1 <= k_lo <= k_hi and 1 <= m_lo <= m_hi):
        raise UsageError(f'empty profiling grid k={k_range}, m={m_range}')

    cells = (k_hi - k_lo + 1) * (m_hi - m_lo + 1)
    if repeats is None:
        repeats = max(1, round(TARGET_SUITE_SIZE / cells))
    if repeats < 1:
        raise UsageError(f'repeats must be positive, got {repeats}')

    rng = random.Random(seed)
    suite = [SuiteEntry(k, m, _random_plan(k, m, fmt, rng))
             for k in range(k_lo, k_hi + 1)
             for m in range(m_lo, m_hi + 1)
             for _ in range(repeats)]
    log.info('Generated %d profiling plans over %d grid cells', len(suite), cells)
    return suite
