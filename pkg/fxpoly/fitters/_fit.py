import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from typing import List, Optional, Tuple

import numpy as np

from fxpoly.fitters._boosting import residual_boost
from fxpoly.fitters._config import FitConfig
from fxpoly.fitters._constrain import constrain_k
from fxpoly.fitters._interpolate import cheby_interpolate, lagrange_interpolate
from fxpoly.fitters._polynomial import PiecewisePlan, ScaledPolynomial
from fxpoly.fitters._sampling import SampleGrid
from fxpoly.fitters._scaling import scale_poly
from fxpoly.fxp import FxpValue, as_mantissas, snap_mantissa, to_float_array
from fxpoly.util import DomainError, Logger, Log

log = logging.getLogger(__name__)


def _fit_span(F, start: int, stop: int, k: int, cfg: FitConfig) -> Tuple[Optional[ScaledPolynomial], float]:
    # Fits the grid points start..stop (mantissas); the float domain only places nodes and scales
    fmt = cfg.format
    logger = Logger()
    logger.increment(Log.FIT_ONE_PIECE)

    count = stop - start + 1
    if count < 1:
        logger.increment(Log.FIT_FAILURE)
        return None, float('inf')

    domain = (start / fmt.one, stop / fmt.one)
    k_bar = constrain_k(domain, fmt, k)
    if count > k_bar + 1:
        coefficients = cheby_interpolate(F, domain, k_bar)
    else:
        # few enough grid points to interpolate all of them
        points = np.unique(to_float_array(as_mantissas(range(start, stop + 1)), fmt))
        coefficients = lagrange_interpolate(F, points)

    p = scale_poly(coefficients, domain, fmt, scaling=cfg.scaling)
    grid = SampleGrid.between(F, start, stop, cfg.max_samples, fmt, cfg.soft_zero)
    if cfg.boosting:
        p = residual_boost(p, F, domain, cfg, grid=grid)
    p = p.padded(k)

    err = grid.max_srd(p)
    if err < cfg.epsilon:
        return p, err

    logger.increment(Log.FIT_FAILURE)
    return None, err


def _fit_one_piece(F, domain, k: int, cfg: FitConfig) -> Tuple[Optional[ScaledPolynomial], float]:
    a, b = domain
    if not a < b:
        raise DomainError(f'empty interval [{a}, {b}]', x=a)
    fmt = cfg.format
    return _fit_span(F, snap_mantissa(a, fmt, 'ceil'), snap_mantissa(b, fmt, 'floor'), k, cfg)


def fit_one_piece(F, domain, k: int, cfg: FitConfig) -> Optional[ScaledPolynomial]:
    return _fit_one_piece(F, domain, k, cfg)[0]


@dataclass(frozen=True)
class FitOutcome:
    k: int
    m: Optional[int]
    max_srd: Optional[float]
    seconds: float
    reason: Optional[str] = None

    @property
    def succeeded(self) -> bool:
        return self.m is not None


def _merge(F, pieces, k, cfg):
    # Single left-to-right scan; a successful merge is retried against the next neighbour
    i = 0
    while i + 1 < len(pieces):
        lo, hi = pieces[i][0], pieces[i + 1][1]
        poly, err = _fit_span(F, lo, hi, k, cfg)
        if poly is not None:
            pieces[i:i + 2] = [(lo, hi, poly, err)]
            Logger().increment(Log.MERGE)
        else:
            i += 1
    return pieces


def _fit_piecewise(F, cfg: FitConfig, k: int) -> Tuple[Optional[PiecewisePlan], Optional[str], Optional[float]]:
    fmt = cfg.format
    one = fmt.one
    a, b = cfg.domain
    lo, hi = snap_mantissa(a, fmt, 'ceil'), snap_mantissa(b, fmt, 'floor')
    if not lo < hi:
        return None, 'domain holds fewer than two grid points', None

    pieces = []
    pending = [(lo, hi)]
    while pending:
        start, stop = pending.pop()
        poly, err = _fit_span(F, start, stop, k, cfg)
        if poly is not None:
            pieces.append((start, stop, poly, err))
            continue

        if stop - start < 2:
            return None, f'no fit on [{start / one}, {stop / one}] at the format resolution', None

        mid = (start + stop) // 2
        Logger().increment(Log.SPLIT)
        pending.append((mid, stop))
        pending.append((start, mid))
        if len(pieces) + len(pending) > cfg.m_max:
            return None, f'more than {cfg.m_max} pieces', None

    if cfg.merge:
        pieces = _merge(F, pieces, k, cfg)

    defaults = cfg.defaults
    if defaults is None:
        defaults = (float(F(lo / one)), float(F(hi / one)))

    plan = PiecewisePlan(
        format=fmt,
        breaks=tuple(FxpValue(start, fmt) for start, _, _, _ in pieces),
        pieces=tuple(poly.padded(k) for _, _, poly, _ in pieces),
        end=FxpValue(hi, fmt),
        defaults=defaults,
    )
    return plan, None, max(err for _, _, _, err in pieces)


def fit_piecewise(F, cfg: FitConfig, k: int) -> Optional[PiecewisePlan]:
    return _fit_piecewise(F, cfg, k)[0]


def _fit_for_k(F, cfg: FitConfig, k: int) -> Tuple[Optional[PiecewisePlan], FitOutcome]:
    started = time.perf_counter()
    plan, reason, max_srd = _fit_piecewise(F, cfg, k)
    seconds = time.perf_counter() - started
    if plan is None:
        log.info('k=%d: no plan (%s)', k, reason)
        return None, FitOutcome(k, None, None, seconds, reason)
    log.info('k=%d: m=%d, max SRD %.3e, %.2fs', k, plan.m, max_srd, seconds)
    return plan, FitOutcome(k, plan.m, max_srd, seconds)


def fit_candidates_with_report(F, cfg: FitConfig, jobs: int = 1) -> Tuple[List[PiecewisePlan], List[FitOutcome]]:
    orders = list(cfg.orders)
    if jobs > 1 and len(orders) > 1:
        # F and cfg must be picklable (ExprFunction is)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_fit_for_k, repeat(F), repeat(cfg), orders))
    else:
        results = [_fit_for_k(F, cfg, k) for k in orders]

    plans = [plan for plan, _ in results if plan is not None]
    Logger().increment(Log.CANDIDATE, len(plans))
    return plans, [outcome for _, outcome in results]


def fit_candidates(F, cfg: FitConfig, jobs: int = 1) -> List[PiecewisePlan]:
    return fit_candidates_with_report(F, cfg, jobs)[0]
