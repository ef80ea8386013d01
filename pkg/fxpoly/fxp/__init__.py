# Fixed point formats and values
from ._format import FxpFormat
from ._value import FxpValue, fxp_from_mantissa, fxp_from_decimal_str, fxp_zero, fxp_one, \
    snap_mantissa, flp_sim_fxp, flp_sim_fxp_ceil, flp_sim_fxp_floor, linspace_fxp

# Simulated secure arithmetic
from ._value import fxp_add, fxp_sub, fxp_neg, fxp_mul, fxp_ge

# Vectorized mantissa kernels
from ._vector import as_mantissas, snap_array, mul_array, add_array, sub_array, ge_array, \
    to_float_array, kx_table
