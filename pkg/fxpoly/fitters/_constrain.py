import math

from fxpoly.fxp import FxpFormat, as_mantissas, kx_table, snap_mantissa
from fxpoly.util import DomainError


def _powers_fit(mantissas, k: int, fmt: FxpFormat, check_underflow: bool) -> bool:
    powers = kx_table(as_mantissas(mantissas), k, fmt)
    for power in powers[1:]:
        for m in power:
            if abs(m) >= fmt.max_mantissa:
                return False
            if check_underflow and m == 0:
                return False
    return True


def constrain_k(domain, fmt: FxpFormat, k: int) -> int:
    a, b = domain
    if not a < b:
        raise DomainError(f'empty interval [{a}, {b}]', x=a)

    ends = [snap_mantissa(a, fmt), snap_mantissa(b, fmt)]
    x_max = max(abs(m) for m in ends) / fmt.one
    touches_zero = a * b <= 0 or 0 in ends
    x_min = 0.0 if touches_zero else min(abs(m) for m in ends) / fmt.one

    k_over = k if x_max <= 1 else math.floor((fmt.n - fmt.f - 1) / math.log2(x_max))
    if touches_zero:
        k_under = 3
    else:
        k_under = k if x_min >= 1 else math.floor(fmt.f / -math.log2(x_min))
    k_bar = max(1, min(k, k_over, k_under))

    # The bounds hold in real arithmetic; truncated powers at the exact limit can still miss
    nonzero = [m for m in ends if m != 0]
    while k_bar > 1 and not _powers_fit(nonzero, k_bar, fmt, check_underflow=not touches_zero):
        k_bar -= 1
    return k_bar
