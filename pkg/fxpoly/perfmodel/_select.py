import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Set

from fxpoly.expr import Expression, census
from fxpoly.fitters import PiecewisePlan
from fxpoly.perfmodel._costmodel import CostModel, predict_oppe_cost
from fxpoly.util import NoFeasiblePlanError, PricingError

log = logging.getLogger(__name__)

# Census kinds and the priced operations each one costs
DIRECT_PRICES = {
    'add': ('add',),
    'mul': ('mul',),
    'div': ('reciprocal', 'mul'),
    'comparison': ('gt',),
    'exp': ('exp',),
    'log': ('log',),
    'sqrt': ('sqrt',),
    'other': ('other',),
}

# Direct evaluation is only considered below this many non-linear steps
MAX_DIRECT_NONLINEAR = 3

# Always available on every platform
LINEAR_OPS = ('add', 'mul')


@dataclass(frozen=True)
class Decision:
    kind: str
    plan: Optional[PiecewisePlan]
    predicted_cost: float
    direct_cost: Optional[float] = None

    @property
    def is_direct(self) -> bool:
        return self.kind == 'direct_eval'

    def as_dict(self) -> dict:
        doc = {'decision': self.kind, 'predicted_cost': self.predicted_cost, 'direct_cost': self.direct_cost}
        if self.plan is not None:
            doc['k'] = self.plan.k
            doc['m'] = self.plan.m
        return doc


def predict_direct_cost(time_dict: Mapping[str, float], expr: Expression) -> float:
    total = 0.0
    for kind, count in census(expr).as_dict().items():
        if count == 0:
            continue
        for op in DIRECT_PRICES[kind]:
            if op not in time_dict:
                raise PricingError(op)
            total += count * time_dict[op]
    return total


def direct_ops(expr: Expression) -> Set[str]:
    # Priced operations a direct evaluation of expr would run
    return {op for kind, count in census(expr).as_dict().items() if count for op in DIRECT_PRICES[kind]}


def select_plan(candidates: Iterable[PiecewisePlan], model: CostModel, time_dict: Mapping[str, float],
                expr: Expression, reasons: Optional[Dict[int, str]] = None,
                supported_ops: Iterable[str] = ()) -> Decision:
    """
    Picks the cheapest candidate by predicted cost, ties going to smaller m and
    then smaller k. Direct evaluation wins instead when the function has no
    exp step, fewer than three non-linear steps and a direct cost strictly
    below every candidate. When `supported_ops` lists the platform's
    non-linear operations, direct evaluation also has to stay within them.
    """
    ranked = sorted(((predict_oppe_cost(model, p.k, p.m), p.m, p.k, p) for p in candidates),
                    key=lambda entry: entry[:3])

    counts = census(expr)
    try:
        direct = predict_direct_cost(time_dict, expr)
    except PricingError as e:
        log.warning('Direct evaluation not considered: %s', e)
        direct = None

    supported = set(supported_ops)
    missing = sorted(direct_ops(expr) - set(LINEAR_OPS) - supported) if supported else []
    if missing:
        log.info('Direct evaluation needs unsupported operation(s): %s', ', '.join(missing))

    eligible = (direct is not None
                and not missing
                and not counts.contains_exp
                and counts.nonlinear_step_count < MAX_DIRECT_NONLINEAR
                and all(direct < cost for cost, _, _, _ in ranked))

    if eligible:
        log.info('Selected direct evaluation at cost %.4g', direct)
        return Decision('direct_eval', None, direct, direct)

    if not ranked:
        raise NoFeasiblePlanError(reasons)

    cost, m, k, plan = ranked[0]
    log.info('Selected plan k=%d m=%d at predicted cost %.4g', k, m, cost)
    return Decision('plan', plan, cost, direct)
