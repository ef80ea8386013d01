import unittest

from fxpoly.fxp import FxpFormat, flp_sim_fxp
from fxpoly.oppe import OpKind, SimCipher, SimContext, calculate_kx, piece_mask
from fxpoly.util import UsageError

Q96 = FxpFormat(96, 48)
Q16 = FxpFormat(16, 8)


def floats(cipher):
    return [v.to_float() for v in cipher.reveal()]


class SimContextOps(unittest.TestCase):
    def setUp(self):
        self.ctx = SimContext(Q16)

    def encrypt(self, *xs):
        return self.ctx.encrypt([flp_sim_fxp(x, Q16) for x in xs])

    def test_arithmetic(self):
        a, b = self.encrypt(1.5, -2.0), self.encrypt(0.5, 4.0)
        self.assertEqual(floats(a + b), [2.0, 2.0])
        self.assertEqual(floats(a - b), [1.0, -6.0])
        self.assertEqual(floats(a * b), [0.75, -8.0])

    def test_one_record_per_op(self):
        a, b = self.encrypt(1.0, 2.0, 3.0), self.encrypt(1.0)
        a + b
        a * b
        a * [flp_sim_fxp(2.0, Q16)]
        self.ctx.ge_plain(a, [flp_sim_fxp(2.0, Q16)])
        kinds = [(r.kind, r.length) for r in self.ctx.trace]
        self.assertEqual(kinds, [(OpKind.ADD, 3), (OpKind.MUL_cc, 3), (OpKind.MUL_pc, 3), (OpKind.GT, 3)])

    def test_length_mismatch(self):
        with self.assertRaises(UsageError):
            self.encrypt(1.0, 2.0) + self.encrypt(1.0, 2.0, 3.0)

    def test_format_mismatch(self):
        other = SimContext(Q96).encrypt([flp_sim_fxp(1.0, Q96)])
        with self.assertRaises(UsageError):
            self.ctx.add(self.encrypt(1.0), other)
        with self.assertRaises(UsageError):
            self.ctx.encrypt([flp_sim_fxp(1.0, Q96)])

    def test_sum_blocks(self):
        a = self.encrypt(1, 2, 3, 4, 5, 6)
        self.assertEqual(floats(self.ctx.sum_blocks(a, 2)), [9.0, 12.0])
        self.assertEqual(floats(self.ctx.sum(a)), [21.0])
        self.assertEqual([r.length for r in self.ctx.trace], [4, 5])

    def test_sum_single_block_is_free(self):
        self.ctx.sum_blocks(self.encrypt(1, 2), 2)
        self.assertEqual(len(self.ctx.trace), 0)

    def test_bad_block_width(self):
        with self.assertRaises(UsageError):
            self.ctx.sum_blocks(self.encrypt(1, 2, 3), 2)

    def test_stage_labels(self):
        with self.ctx.stage('outer'):
            self.encrypt(1.0) + self.encrypt(1.0)
            self.assertEqual(self.ctx.current_stage, 'outer')
        self.encrypt(1.0) + self.encrypt(1.0)
        self.assertEqual([r.stage for r in self.ctx.trace], ['outer', ''])

    def test_fork_and_merge(self):
        forked = self.ctx.fork()
        forked.add(forked.encrypt([1]), forked.encrypt([2]))
        self.assertEqual(len(self.ctx.trace), 0)
        self.ctx.merge(forked)
        self.assertEqual(len(self.ctx.trace), 1)


class SimCipherLayout(unittest.TestCase):
    def test_slicing_and_concat_are_free(self):
        ctx = SimContext(Q16)
        a = ctx.encrypt([1, 2, 3])
        joined = SimCipher.concat(a[1:], a[0], a.take([2, 2]))
        self.assertEqual([v.mantissa for v in joined.reveal()], [2, 3, 1, 3, 3])
        self.assertEqual(len(ctx.trace), 0)

    def test_last_slot(self):
        a = SimContext(Q16).encrypt([1, 2, 3])
        self.assertEqual([v.mantissa for v in a[-1].reveal()], [3])


class CalculateKx(unittest.TestCase):
    def kx(self, x, k, fmt=Q96):
        ctx = SimContext(fmt)
        return floats(calculate_kx(ctx.encrypt([flp_sim_fxp(x, fmt)]), k))

    def test_two(self):
        self.assertEqual(self.kx(2.0, 3), [1.0, 2.0, 4.0, 8.0])

    def test_half(self):
        self.assertEqual(self.kx(0.5, 4), [1.0, 0.5, 0.25, 0.125, 0.0625])

    def test_order_one(self):
        self.assertEqual(self.kx(3.0, 1), [1.0, 3.0])

    def test_saturates(self):
        self.assertEqual(self.kx(16.0, 3, Q16)[3], 127.99609375)

    def test_rounds(self):
        ctx = SimContext(Q96)
        calculate_kx(ctx.encrypt([flp_sim_fxp(1.5, Q96)]), 7)
        self.assertEqual([r.length for r in ctx.trace], [7, 6, 4])

    def test_order_zero(self):
        ctx = SimContext(Q96)
        with self.assertRaises(UsageError):
            calculate_kx(ctx.encrypt([0]), 0)


class PieceMask(unittest.TestCase):
    def test_one_hot(self):
        ctx = SimContext(Q96)
        breaks = [flp_sim_fxp(w, Q96) for w in (-2, 0, 2)]
        self.assertEqual(floats(piece_mask(ctx.encrypt([flp_sim_fxp(1.0, Q96)]), breaks)), [0.0, 1.0, 0.0])
        self.assertEqual(floats(piece_mask(ctx.encrypt([flp_sim_fxp(5.0, Q96)]), breaks)), [0.0, 0.0, 1.0])
        self.assertEqual(floats(piece_mask(ctx.encrypt([flp_sim_fxp(0.0, Q96)]), breaks)), [0.0, 1.0, 0.0])

    def test_below_all_breaks(self):
        ctx = SimContext(Q96)
        breaks = [flp_sim_fxp(w, Q96) for w in (-2, 0, 2)]
        self.assertEqual(floats(piece_mask(ctx.encrypt([flp_sim_fxp(-3.0, Q96)]), breaks)), [0.0, 0.0, 0.0])


if __name__ == '__main__':
    unittest.main()
