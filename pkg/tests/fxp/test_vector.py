import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from fxpoly.fxp import FxpFormat, FxpValue, add_array, as_mantissas, flp_sim_fxp, fxp_add, fxp_ge, fxp_mul, \
    ge_array, kx_table, mul_array, snap_array, to_float_array
from tests.strategies import formats, mantissas

Q96 = FxpFormat(96, 48)


class Kernels(unittest.TestCase):

    @settings(max_examples=300)
    @given(st.data())
    def test_bit_identical_to_scalar_ops(self, data):
        fmt = data.draw(formats())
        a = data.draw(st.lists(mantissas(fmt), min_size=1, max_size=8))
        b = data.draw(st.lists(mantissas(fmt), min_size=len(a), max_size=len(a)))
        va, vb = as_mantissas(a), as_mantissas(b)
        for i, (x, y) in enumerate(zip(a, b)):
            x, y = FxpValue(x, fmt), FxpValue(y, fmt)
            self.assertEqual(mul_array(va, vb, fmt)[i], fxp_mul(x, y).mantissa)
            self.assertEqual(add_array(va, vb, fmt)[i], fxp_add(x, y).mantissa)
            self.assertEqual(ge_array(va, vb, fmt)[i], fxp_ge(x, y).mantissa)

    def test_snap_matches_scalar(self):
        xs = np.linspace(-3, 3, 101)
        snapped = snap_array(xs, Q96)
        self.assertEqual(list(snapped), [flp_sim_fxp(x, Q96).mantissa for x in xs])

    def test_scalar_broadcast(self):
        out = mul_array(Q96.one * 2, as_mantissas([Q96.one, Q96.one * 3]), Q96)
        self.assertEqual(list(to_float_array(out, Q96)), [2.0, 6.0])


class PowerTable(unittest.TestCase):
    def powers(self, x, k, fmt=Q96):
        table = kx_table(as_mantissas([flp_sim_fxp(x, fmt).mantissa]), k, fmt)
        return [float(to_float_array(p, fmt)[0]) for p in table]

    def test_integer_powers(self):
        self.assertEqual(self.powers(2, 4), [1, 2, 4, 8, 16])

    def test_dyadic_powers(self):
        self.assertEqual(self.powers(0.5, 3), [1, 0.5, 0.25, 0.125])

    def test_order_one(self):
        self.assertEqual(self.powers(3, 1), [1, 3])

    @settings(max_examples=200)
    @given(st.integers(1, 12), st.integers(-3, 3))
    def test_exact_integer_powers(self, k, x):
        fmt = FxpFormat(128, 20)
        table = kx_table(as_mantissas([x * fmt.one]), k, fmt)
        self.assertEqual(len(table), k + 1)
        self.assertEqual([p[0] for p in table], [x ** i * fmt.one for i in range(k + 1)])


if __name__ == '__main__':
    unittest.main()
