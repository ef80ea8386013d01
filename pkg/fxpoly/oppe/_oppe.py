import json
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

from fxpoly.fitters import PiecewisePlan, ScaledPolynomial
from fxpoly.fxp import FxpValue
from fxpoly.oppe._backend import Backend
from fxpoly.oppe._cipher import SimCipher, SimContext
from fxpoly.oppe._trace import OpTrace
from fxpoly.util import SchemaError, UsageError

log = logging.getLogger(__name__)


def calculate_kx(x: SimCipher, k: int) -> SimCipher:
    """
    Computes [1, x, x^2, ..., x^k] for a single-slot cipher in floor(log2 k) + 1
    vectorized multiplications: each round multiplies res[shift:] by res[:-shift].
    """
    if k < 1:
        raise UsageError(f'order k={k} must be at least 1')
    ctx = x.context
    res = SimCipher.concat(ctx.constant([ctx.format.one]), x.take([0] * k))

    shift = 1
    while shift <= k:
        res = SimCipher.concat(res[:shift], res[shift:] * res[:k + 1 - shift])
        shift *= 2
    return res


def piece_mask(x: SimCipher, breaks: Sequence[FxpValue]) -> SimCipher:
    # comp_j = x >= w_j, mask_j = comp_j - comp_{j+1} with comp_m = 0
    ctx = x.context
    comp = ctx.ge_plain(x, breaks)
    shifted = SimCipher.concat(comp[1:], ctx.constant([0]))
    return comp - shifted


def _select(mask: SimCipher, table: List[List[FxpValue]]) -> SimCipher:
    # table[j][i] is parameter i of piece j; result slot i is sum_j mask_j * table[j][i]
    pieces, width = len(table), len(table[0])
    spread = mask.take([j for j in range(pieces) for _ in range(width)])
    products = spread * [table[j][i] for j in range(pieces) for i in range(width)]
    return products.context.sum_blocks(products, width)


def _mask_and_select(plan: PiecewisePlan, x: SimCipher) -> Tuple[SimCipher, SimCipher]:
    ctx = x.context
    with ctx.stage('mask'):
        mask = piece_mask(x, plan.breaks)
    with ctx.stage('select'):
        coeff = _select(mask, [list(p.coeffs) for p in plan.pieces])
        scaler = _select(mask, [list(p.scalers) for p in plan.pieces])
    return coeff, scaler


def _powers(plan: PiecewisePlan, x: SimCipher) -> SimCipher:
    with x.context.stage('kx'):
        return calculate_kx(x, plan.k)


def oppe_eval(plan: PiecewisePlan, x: SimCipher, independent: bool = False) -> SimCipher:
    """
    Oblivious evaluation of a finalized plan on a single-slot cipher. The
    sequence of secure operations depends only on the plan's (k, m).

    The mask/selection branch and the power table branch share no data; with
    `independent` they run on two threads. Each branch gets its own backend
    stream and their traces are merged in a fixed order (mask and selection
    first), so the result and trace are the same either way.
    """
    if not plan.finalized:
        raise UsageError('oppe_eval needs a finalized plan, see finalize_plan')
    if len(x) != 1:
        raise UsageError(f'expected a single-slot cipher, got {len(x)} slots')

    ctx = x.context
    select_ctx, kx_ctx = ctx.fork('select'), ctx.fork('kx')

    if independent:
        with ThreadPoolExecutor(max_workers=2) as pool:
            selected = pool.submit(_mask_and_select, plan, x.rebind(select_ctx))
            powered = pool.submit(_powers, plan, x.rebind(kx_ctx))
            coeff, scaler = selected.result()
            xterm = powered.result()
    else:
        coeff, scaler = _mask_and_select(plan, x.rebind(select_ctx))
        xterm = _powers(plan, x.rebind(kx_ctx))

    ctx.merge(select_ctx)
    ctx.merge(kx_ctx)

    with ctx.stage('term'):
        terms = (coeff.rebind(ctx) * xterm.rebind(ctx)) * scaler.rebind(ctx)
        return ctx.sum(terms)


def finalize_plan(plan: PiecewisePlan) -> PiecewisePlan:
    """
    Installs a sentinel piece from the most negative representable value up to
    the domain start, holding the left default, and a tail piece from the
    domain end onward holding the right default. Finalized plans are returned
    unchanged.
    """
    if plan.finalized:
        return plan

    fmt = plan.format
    sentinel = FxpValue(fmt.min_mantissa, fmt)
    if plan.breaks[0].mantissa <= sentinel.mantissa:
        raise UsageError('plan already starts at the most negative representable value')

    left, right = plan.defaults
    head = ScaledPolynomial.constant(left, fmt).padded(plan.k)
    tail = ScaledPolynomial.constant(right, fmt).padded(plan.k)
    return PiecewisePlan(
        format=fmt,
        breaks=(sentinel,) + plan.breaks + (plan.end,),
        pieces=(head,) + plan.pieces + (tail,),
        end=plan.end,
        defaults=plan.defaults,
        finalized=True,
    )


def trace_of(plan: PiecewisePlan, x: FxpValue, independent: bool = False) -> OpTrace:
    ctx = SimContext(plan.format)
    oppe_eval(plan, ctx.encrypt([x]), independent)
    return ctx.trace


def _eval_one(plan: PiecewisePlan, index: int, x: FxpValue, backend: Optional[Backend], independent: bool):
    ctx = SimContext(plan.format, None if backend is None else backend.derive(index))
    out = oppe_eval(plan, ctx.encrypt([x]), independent)
    return out.reveal()[0], ctx.trace


def oppe_eval_batch(plan: PiecewisePlan, xs: Sequence[FxpValue], jobs: int = 1,
                    backend: Optional[Backend] = None,
                    independent: bool = False) -> Tuple[List[FxpValue], List[OpTrace]]:
    # One context and one backend stream per input, keyed by its batch index; results come back in input order
    if jobs > 1:
        log.debug('Evaluating %d inputs on %d threads', len(xs), jobs)
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda ix: _eval_one(plan, ix[0], ix[1], backend, independent), enumerate(xs)))
    else:
        results = [_eval_one(plan, i, x, backend, independent) for i, x in enumerate(xs)]

    values = [value for value, _ in results]
    traces = [trace for _, trace in results]
    return values, traces


def load_plan(path, k: Optional[int] = None) -> PiecewisePlan:
    """
    Reads a plan file, or one plan out of the candidates file `fxpoly fit -o` writes.

    A candidates file holding more than one plan needs `k` to pick the order; a lone
    plan file is checked against `k` when it is given.
    """
    with open(path, 'r') as file:
        try:
            doc = json.load(file)
        except json.JSONDecodeError as e:
            raise SchemaError('plan', f'invalid JSON: {e}')
    if not isinstance(doc, dict):
        raise SchemaError('plan', 'expected a JSON object')

    if 'candidates' not in doc:
        plan = PiecewisePlan.from_json(doc)
        if k is not None and plan.k != k:
            raise SchemaError('k', f'plan has order {plan.k}, not {k}')
        return plan

    candidates = doc['candidates']
    if not isinstance(candidates, list) or not all(isinstance(c, dict) for c in candidates):
        raise SchemaError('candidates', 'expected a list of plan objects')
    plans = [PiecewisePlan.from_json(c) for c in candidates]
    if k is not None:
        plans = [plan for plan in plans if plan.k == k]
    if len(plans) == 1:
        return plans[0]
    if not plans:
        wanted = '' if k is None else f' of order {k}'
        raise SchemaError('candidates', f'no candidate plan{wanted}')
    raise SchemaError('candidates', f'{len(plans)} candidate plans, pick one with k in {[p.k for p in plans]}')


def expected_counts(k: int, pieces: int) -> dict:
    # Closed-form operation counts of one evaluation with `pieces` pieces of order k
    rounds = k.bit_length()
    return {
        'GT': pieces,
        'MUL_pc': 2 * (k + 1) * pieces,
        'MUL_cc kx': rounds * (k + 1) - 2 ** rounds + 1,
        'MUL_cc term': 2 * (k + 1),
    }
