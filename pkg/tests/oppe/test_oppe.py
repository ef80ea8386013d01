import json
import tempfile
import unittest
from dataclasses import replace
from pathlib import Path

from hypothesis import given, settings, strategies as st

from fxpoly.fitters import PiecewisePlan, ScaledPolynomial, eval_plan
from fxpoly.fxp import FxpFormat, FxpValue, flp_sim_fxp, fxp_one
from fxpoly.oppe import OpKind, SimContext, expected_counts, finalize_plan, load_plan, oppe_eval, \
    oppe_eval_batch, trace_of
from fxpoly.util import SchemaError, UsageError
from tests.strategies import SLOW_TESTS, finalized_plans, formats, mantissas

Q8 = FxpFormat(8, 3)
Q32 = FxpFormat(32, 16)
Q96 = FxpFormat(96, 48)


def linear_plan(fmt=Q96, defaults=(0.0, 1.0)):
    # x on [0, 1), 0.5 + 0.25x on [1, 2)
    one = fxp_one(fmt)
    return PiecewisePlan(
        format=fmt,
        breaks=(flp_sim_fxp(0, fmt), flp_sim_fxp(1, fmt)),
        pieces=(ScaledPolynomial((flp_sim_fxp(0, fmt), one), (one, one)),
                ScaledPolynomial((flp_sim_fxp(0.5, fmt), flp_sim_fxp(0.25, fmt)), (one, one))),
        end=flp_sim_fxp(2, fmt),
        defaults=defaults,
    )


def evaluate(plan, x, **kwargs):
    ctx = SimContext(plan.format)
    return oppe_eval(plan, ctx.encrypt([x]), **kwargs).reveal()[0]


class OracleEquivalence(unittest.TestCase):
    @settings(max_examples=300 if not SLOW_TESTS else 1000, deadline=None)
    @given(st.data())
    def test_matches_select_then_evaluate(self, data):
        fmt = data.draw(formats(min_n=8, max_n=96))
        plan = data.draw(finalized_plans(fmt))
        for _ in range(100 if SLOW_TESTS else 5):
            x = FxpValue(data.draw(mantissas(fmt)), fmt)
            self.assertEqual(evaluate(plan, x), eval_plan(plan, x))

    @settings(max_examples=5 if not SLOW_TESTS else 50, deadline=None)
    @given(finalized_plans(Q8, max_k=4, max_m=4))
    def test_exhaustive_small_format(self, plan):
        for m in range(Q8.min_mantissa, Q8.max_mantissa + 1):
            x = FxpValue(m, Q8)
            self.assertEqual(evaluate(plan, x), eval_plan(plan, x))

    def test_linear_plan(self):
        plan = finalize_plan(linear_plan())
        self.assertEqual(evaluate(plan, flp_sim_fxp(0.5, Q96)).to_float(), 0.5)
        self.assertEqual(evaluate(plan, flp_sim_fxp(1.5, Q96)).to_float(), 0.875)


class Obliviousness(unittest.TestCase):
    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_traces_independent_of_input(self, data):
        plan = data.draw(finalized_plans(Q32))
        xs = data.draw(st.lists(mantissas(Q32), min_size=2, max_size=10, unique=True))
        traces = [trace_of(plan, FxpValue(m, Q32)) for m in xs]
        for trace in traces[1:]:
            self.assertEqual(trace, traces[0])

    @settings(max_examples=5 if not SLOW_TESTS else 50, deadline=None)
    @given(finalized_plans(Q8, max_k=4, max_m=4))
    def test_traces_identical_over_every_small_format_input(self, plan):
        first = trace_of(plan, FxpValue(Q8.min_mantissa, Q8))
        for m in range(Q8.min_mantissa + 1, Q8.max_mantissa + 1):
            self.assertEqual(trace_of(plan, FxpValue(m, Q8)), first)

    def test_inside_and_outside_domain(self):
        plan = finalize_plan(linear_plan())
        xs = [flp_sim_fxp(x, Q96) for x in (-1e6, -0.5, 0.0, 0.5, 1.0, 1.999, 2.0, 1e6)]
        traces = [trace_of(plan, x) for x in xs]
        self.assertTrue(all(t == traces[0] for t in traces))


class OperationCounts(unittest.TestCase):
    def check(self, k, m):
        pieces = [ScaledPolynomial.constant(0.25, Q96).padded(k)] * m
        plan = finalize_plan(PiecewisePlan(
            format=Q96,
            breaks=tuple(flp_sim_fxp(j, Q96) for j in range(m)),
            pieces=tuple(pieces),
            end=flp_sim_fxp(m, Q96),
        ))
        trace = trace_of(plan, flp_sim_fxp(0.5, Q96))
        expected = expected_counts(k, m + 2)

        self.assertEqual(trace.count(OpKind.GT), expected['GT'])
        self.assertEqual(trace.count(OpKind.GT), m + 2)
        self.assertEqual(trace.count(OpKind.MUL_pc), expected['MUL_pc'])
        self.assertEqual(trace.count(OpKind.MUL_cc, 'kx'), expected['MUL_cc kx'])
        self.assertEqual(trace.count(OpKind.MUL_cc, 'term'), expected['MUL_cc term'])
        rounds = k.bit_length()
        self.assertEqual(trace.count(OpKind.MUL_cc, 'kx'), rounds * (k + 1) - 2 ** rounds + 1)
        self.assertEqual(trace.rounds(OpKind.MUL_cc, 'kx'), rounds)
        pieces = m + 2
        self.assertEqual(trace.count(OpKind.ADD), pieces + 2 * (k + 1) * (pieces - 1) + k)
        self.assertEqual(trace.stages(), ['mask', 'select', 'kx', 'term'])

    def test_grid(self):
        for k in range(3, 11):
            for m in (2, 10, 50):
                with self.subTest(k=k, m=m):
                    self.check(k, m)

    def test_order_seven(self):
        self.assertEqual(expected_counts(7, 4)['MUL_cc kx'], 17)


class IndependentBranches(unittest.TestCase):
    @settings(max_examples=25, deadline=None)
    @given(st.data())
    def test_same_result_and_trace(self, data):
        plan = data.draw(finalized_plans(Q32))
        x = FxpValue(data.draw(mantissas(Q32)), Q32)
        ctx_a, ctx_b = SimContext(Q32), SimContext(Q32)
        a = oppe_eval(plan, ctx_a.encrypt([x])).reveal()
        b = oppe_eval(plan, ctx_b.encrypt([x]), independent=True).reveal()
        self.assertEqual(a, b)
        self.assertEqual(ctx_a.trace, ctx_b.trace)


class Preconditions(unittest.TestCase):
    def test_needs_finalized_plan(self):
        ctx = SimContext(Q96)
        with self.assertRaises(UsageError):
            oppe_eval(linear_plan(), ctx.encrypt([0]))

    def test_needs_single_slot(self):
        ctx = SimContext(Q96)
        with self.assertRaises(UsageError):
            oppe_eval(finalize_plan(linear_plan()), ctx.encrypt([0, 1]))


class FinalizePlan(unittest.TestCase):
    def setUp(self):
        self.plan = finalize_plan(linear_plan(defaults=(-1.0, 1.0)))

    def test_shape(self):
        self.assertTrue(self.plan.finalized)
        self.assertEqual(len(self.plan.pieces), 4)
        self.assertEqual(self.plan.m, 2)
        self.assertEqual(self.plan.breaks[0].mantissa, Q96.min_mantissa)
        self.assertEqual(self.plan.breaks[-1], self.plan.end)
        self.assertEqual(self.plan.domain, (0.0, 2.0))

    def test_right_default_above_domain(self):
        above = FxpValue(flp_sim_fxp(2, Q96).mantissa + 1, Q96)
        self.assertEqual(evaluate(self.plan, above).to_float(), 1.0)
        self.assertEqual(evaluate(self.plan, flp_sim_fxp(2, Q96)).to_float(), 1.0)

    def test_left_default_below_domain(self):
        self.assertEqual(evaluate(self.plan, FxpValue(Q96.min_mantissa, Q96)).to_float(), -1.0)
        self.assertEqual(evaluate(self.plan, flp_sim_fxp(-0.5, Q96)).to_float(), -1.0)

    def test_idempotent(self):
        self.assertIs(finalize_plan(self.plan), self.plan)

    def test_plan_starting_at_minimum(self):
        one = fxp_one(Q8)
        plan = PiecewisePlan(Q8, (FxpValue(Q8.min_mantissa, Q8),), (ScaledPolynomial((one,), (one,)),), one)
        with self.assertRaises(UsageError):
            finalize_plan(plan)


class Batch(unittest.TestCase):
    def test_input_order(self):
        plan = finalize_plan(linear_plan())
        xs = [flp_sim_fxp(x, Q96) for x in (1.5, -3.0, 0.25, 7.0, 1.0, 0.75)]
        values, traces = oppe_eval_batch(plan, xs, jobs=3)
        self.assertEqual(values, [eval_plan(plan, x) for x in xs])
        self.assertEqual(len(traces), len(xs))
        self.assertTrue(all(t == traces[0] for t in traces))

    def test_sequential_equals_threaded(self):
        plan = finalize_plan(linear_plan())
        xs = [flp_sim_fxp(x / 8, Q96) for x in range(-8, 24)]
        self.assertEqual(oppe_eval_batch(plan, xs)[0], oppe_eval_batch(plan, xs, jobs=4, independent=True)[0])


class LoadPlan(unittest.TestCase):
    def setUp(self):
        self.dir = tempfile.TemporaryDirectory()
        self.path = Path(self.dir.name) / 'plan.json'

    def tearDown(self):
        self.dir.cleanup()

    def test_roundtrip(self):
        plan = finalize_plan(linear_plan())
        self.path.write_text(json.dumps(plan.to_json()))
        self.assertEqual(load_plan(self.path), plan)

    def test_invalid_json(self):
        self.path.write_text('{"breaks": ')
        with self.assertRaises(SchemaError):
            load_plan(self.path)

    def test_not_an_object(self):
        self.path.write_text('[]')
        with self.assertRaises(SchemaError):
            load_plan(self.path)

    def write_candidates(self, *plans):
        self.path.write_text(json.dumps({'function': 'x', 'candidates': [p.to_json() for p in plans], 'outcomes': []}))

    def test_candidates_pick_by_order(self):
        plan = linear_plan()
        cubic = replace(plan, pieces=tuple(p.padded(3) for p in plan.pieces))
        self.write_candidates(plan, cubic)
        self.assertEqual(load_plan(self.path, k=3), cubic)
        self.assertEqual(load_plan(self.path, k=1), plan)

    def test_lone_candidate_needs_no_order(self):
        self.write_candidates(linear_plan())
        self.assertEqual(load_plan(self.path), linear_plan())

    def test_candidates_ambiguous_without_order(self):
        plan = linear_plan()
        self.write_candidates(plan, replace(plan, pieces=tuple(p.padded(2) for p in plan.pieces)))
        with self.assertRaises(SchemaError) as cm:
            load_plan(self.path)
        self.assertEqual(cm.exception.field, 'candidates')

    def test_candidates_missing_order(self):
        self.write_candidates(linear_plan())
        with self.assertRaises(SchemaError):
            load_plan(self.path, k=5)

    def test_plan_file_order_checked(self):
        self.path.write_text(json.dumps(linear_plan().to_json()))
        with self.assertRaises(SchemaError) as cm:
            load_plan(self.path, k=4)
        self.assertEqual(cm.exception.field, 'k')


if __name__ == '__main__':
    unittest.main()
