import tempfile
import unittest
from pathlib import Path

from fxpoly.fitters import PiecewisePlan, ScaledPolynomial
from fxpoly.fxp import FxpFormat, flp_sim_fxp
from fxpoly.oppe import OpKind, OpTrace, TraceRecord, finalize_plan, render_trace_graph, trace_of

Q32 = FxpFormat(32, 16)


def sample_trace():
    plan = finalize_plan(PiecewisePlan(
        format=Q32,
        breaks=(flp_sim_fxp(0, Q32), flp_sim_fxp(1, Q32)),
        pieces=(ScaledPolynomial.constant(0.5, Q32).padded(3), ScaledPolynomial.constant(0.25, Q32).padded(3)),
        end=flp_sim_fxp(2, Q32),
    ))
    return trace_of(plan, flp_sim_fxp(0.5, Q32))


class Trace(unittest.TestCase):
    def test_dump_format(self):
        trace = OpTrace([TraceRecord(OpKind.GT, 4, 'mask'), TraceRecord(OpKind.MUL_cc, 3, 'kx')])
        self.assertEqual(trace.dump(), 'GT 4\nMUL_cc 3')

    def test_parse_drops_stages(self):
        trace = sample_trace()
        parsed = OpTrace.parse(trace.dump() + '\n')
        self.assertEqual(len(parsed), len(trace))
        self.assertEqual(parsed.dump(), trace.dump())
        self.assertEqual(parsed.stages(), [''])

    def test_counts(self):
        trace = OpTrace()
        trace.append(OpKind.ADD, 3, 'a')
        trace.append(OpKind.ADD, 5, 'b')
        self.assertEqual(trace.count(OpKind.ADD), 8)
        self.assertEqual(trace.count(OpKind.ADD, 'b'), 5)
        self.assertEqual(trace.rounds(OpKind.ADD), 2)
        self.assertEqual(trace.count(OpKind.GT), 0)


class TraceGraph(unittest.TestCase):
    def test_saves_dot_source(self):
        with tempfile.TemporaryDirectory() as tmp:
            filename = Path(tmp) / 'graphs' / 'trace.gv'
            path = render_trace_graph(sample_trace(), filename)
            text = Path(path).read_text()
        self.assertIn('__start0', text)
        self.assertIn('MUL_cc', text)
        self.assertIn('rankdir=LR', text)


if __name__ == '__main__':
    unittest.main()
