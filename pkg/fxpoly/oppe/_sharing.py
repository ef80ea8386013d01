import random
import threading
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from fxpoly.fxp import FxpFormat, FxpValue
from fxpoly.oppe._backend import Backend, PlainBackend


# Three additive shares of a mantissa in the ring Z_{2^n}
@dataclass(frozen=True)
class ShareTriple:
    shares: Tuple[int, int, int]
    format: FxpFormat

    def __post_init__(self):
        modulus = 1 << self.format.n
        if len(self.shares) != 3 or any(not 0 <= s < modulus for s in self.shares):
            raise ValueError(f'shares must be three ring elements modulo 2^{self.format.n}')


def _share_mantissa(m: int, fmt: FxpFormat, rng: random.Random) -> ShareTriple:
    modulus = 1 << fmt.n
    s1 = rng.getrandbits(fmt.n)
    s2 = rng.getrandbits(fmt.n)
    return ShareTriple((s1, s2, (m - s1 - s2) % modulus), fmt)


def _reconstruct_mantissa(t: ShareTriple) -> int:
    n = t.format.n
    total = sum(t.shares) % (1 << n)
    # back to a signed mantissa
    if total >= 1 << (n - 1):
        total -= 1 << n
    return total


def share(v: FxpValue, seed: int = 0) -> ShareTriple:
    return _share_mantissa(v.mantissa, v.format, random.Random(seed))


def reconstruct(t: ShareTriple) -> FxpValue:
    return FxpValue(_reconstruct_mantissa(t), t.format)


# Mock 3-party backend: every operand is split into fresh shares and reconstructed
# before the plain arithmetic runs. With probabilistic truncation, products round
# their dropped fraction up with probability equal to that fraction.
# Each derived stream draws from its own generator seeded by its path ('71/3/kx'), so
# a batch gives the same shares and roundings whatever the thread schedule.
class SharingBackend(Backend):

    def __init__(self, seed: Union[int, str] = 0, probabilistic_truncation: bool = False):
        self.seed = seed
        self.probabilistic_truncation = probabilistic_truncation
        self._rng = random.Random(seed)
        self._lock = threading.Lock()
        self._plain = PlainBackend()

    def derive(self, label) -> 'SharingBackend':
        return SharingBackend(f'{self.seed}/{label}', self.probabilistic_truncation)

    def _roundtrip(self, a: np.ndarray, fmt: FxpFormat) -> np.ndarray:
        out = np.empty(len(a), dtype=object)
        with self._lock:
            out[:] = [_reconstruct_mantissa(_share_mantissa(int(m), fmt, self._rng)) for m in a]
        return out

    def add(self, a, b, fmt):
        return self._plain.add(self._roundtrip(a, fmt), self._roundtrip(b, fmt), fmt)

    def sub(self, a, b, fmt):
        return self._plain.sub(self._roundtrip(a, fmt), self._roundtrip(b, fmt), fmt)

    def ge(self, a, b, fmt):
        return self._plain.ge(self._roundtrip(a, fmt), self._roundtrip(b, fmt), fmt)

    def mul(self, a, b, fmt):
        a, b = self._roundtrip(a, fmt), self._roundtrip(b, fmt)
        if not self.probabilistic_truncation:
            return self._plain.mul(a, b, fmt)

        out = np.empty(len(a), dtype=object)
        with self._lock:
            out[:] = [self._mul_pr(int(x), int(y), fmt) for x, y in zip(a, b)]
        return out

    def _mul_pr(self, a: int, b: int, fmt: FxpFormat) -> int:
        product = a * b
        q = product >> fmt.f
        dropped = product - (q << fmt.f)
        if self._rng.getrandbits(fmt.f) < dropped:
            q += 1
        return fmt.clamp(q)
