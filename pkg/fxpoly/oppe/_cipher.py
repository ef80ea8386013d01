import logging
from contextlib import contextmanager
from typing import Iterable, List, Optional, Sequence

import numpy as np

from fxpoly.fxp import FxpFormat, FxpValue
from fxpoly.oppe._backend import Backend, PlainBackend
from fxpoly.oppe._trace import OpKind, OpTrace
from fxpoly.util import Log, Logger, UsageError

log = logging.getLogger(__name__)


def _broadcast(a: np.ndarray, b: np.ndarray):
    if len(a) == len(b):
        return a, b
    if len(a) == 1:
        return np.repeat(a, len(b)), b
    if len(b) == 1:
        return a, np.repeat(b, len(a))
    raise UsageError(f'vector length mismatch: {len(a)} vs {len(b)}')


def _plain_mantissas(values, fmt: FxpFormat) -> np.ndarray:
    out = np.empty(len(values), dtype=object)
    out[:] = [v.mantissa if isinstance(v, FxpValue) else int(v) for v in values]
    for v in values:
        if isinstance(v, FxpValue) and v.format != fmt:
            raise UsageError(f'plaintext format {v.format} does not match {fmt}')
    return out


# Evaluation context: owns the format, the arithmetic backend and the trace.
# Every secure step goes through one of the methods below and leaves exactly one record.
class SimContext:
    def __init__(self, fmt: FxpFormat, backend: Optional[Backend] = None,
                 trace: Optional[OpTrace] = None, stage: str = ''):
        self.format = fmt
        self.backend = backend if backend is not None else PlainBackend()
        self.trace = trace if trace is not None else OpTrace()
        self._stage = stage
        self._logger = Logger()

    @property
    def current_stage(self) -> str:
        return self._stage

    @contextmanager
    def stage(self, name: str):
        previous = self._stage
        self._stage = name
        try:
            yield self
        finally:
            self._stage = previous

    def fork(self, label=None) -> 'SimContext':
        backend = self.backend if label is None else self.backend.derive(label)
        return SimContext(self.format, backend, OpTrace(), self._stage)

    def merge(self, other: 'SimContext'):
        self.trace.extend(other.trace)

    def _record(self, kind: OpKind, length: int):
        self.trace.append(kind, length, self._stage)
        self._logger.increment(Log.SECURE_OP, length)

    def encrypt(self, values: Iterable) -> 'SimCipher':
        return SimCipher(_plain_mantissas(list(values), self.format), self)

    def constant(self, values: Iterable) -> 'SimCipher':
        # public values placed in cipher slots
        return self.encrypt(values)

    def _check(self, *ciphers: 'SimCipher'):
        for c in ciphers:
            if c.context.format != self.format:
                raise UsageError(f'cipher format {c.context.format} does not match {self.format}')

    def add(self, a: 'SimCipher', b: 'SimCipher') -> 'SimCipher':
        self._check(a, b)
        x, y = _broadcast(a.payload, b.payload)
        self._record(OpKind.ADD, len(x))
        return SimCipher(self.backend.add(x, y, self.format), self)

    def sub(self, a: 'SimCipher', b: 'SimCipher') -> 'SimCipher':
        self._check(a, b)
        x, y = _broadcast(a.payload, b.payload)
        self._record(OpKind.ADD, len(x))
        return SimCipher(self.backend.sub(x, y, self.format), self)

    def mul(self, a: 'SimCipher', b: 'SimCipher') -> 'SimCipher':
        self._check(a, b)
        x, y = _broadcast(a.payload, b.payload)
        self._record(OpKind.MUL_cc, len(x))
        return SimCipher(self.backend.mul(x, y, self.format), self)

    def mul_plain(self, a: 'SimCipher', plain: Sequence) -> 'SimCipher':
        self._check(a)
        x, y = _broadcast(a.payload, _plain_mantissas(list(plain), self.format))
        self._record(OpKind.MUL_pc, len(x))
        return SimCipher(self.backend.mul(x, y, self.format), self)

    def ge_plain(self, a: 'SimCipher', plain: Sequence) -> 'SimCipher':
        self._check(a)
        x, y = _broadcast(a.payload, _plain_mantissas(list(plain), self.format))
        self._record(OpKind.GT, len(x))
        return SimCipher(self.backend.ge(x, y, self.format), self)

    def sum(self, a: 'SimCipher') -> 'SimCipher':
        # left to right, one ADD record for the whole reduction
        return self.sum_blocks(a, 1)

    def sum_blocks(self, a: 'SimCipher', width: int) -> 'SimCipher':
        """
        Sums consecutive blocks of `width` slots: slot i of the result is
        a[i] + a[width + i] + a[2 * width + i] + ..., accumulated left to right.
        """
        self._check(a)
        if width < 1 or len(a) % width:
            raise UsageError(f'cannot split {len(a)} slots into blocks of {width}')
        blocks = len(a) // width
        acc = a.payload[:width]
        if blocks > 1:
            self._record(OpKind.ADD, width * (blocks - 1))
            for j in range(1, blocks):
                acc = self.backend.add(acc, a.payload[j * width:(j + 1) * width], self.format)
        return SimCipher(acc, self)


# Vector of secret values bound to a SimContext. Slicing and concatenation are local.
class SimCipher:
    __slots__ = ('payload', 'context')

    def __init__(self, payload: np.ndarray, context: SimContext):
        self.payload = payload
        self.context = context

    def __len__(self):
        return len(self.payload)

    def __getitem__(self, item) -> 'SimCipher':
        if isinstance(item, int):
            item = slice(item, item + 1 if item != -1 else None)
        return SimCipher(self.payload[item], self.context)

    def take(self, indices: Sequence[int]) -> 'SimCipher':
        return SimCipher(self.payload[list(indices)], self.context)

    def rebind(self, context: SimContext) -> 'SimCipher':
        return SimCipher(self.payload, context)

    @staticmethod
    def concat(*ciphers: 'SimCipher') -> 'SimCipher':
        if not ciphers:
            raise UsageError('nothing to concatenate')
        context = ciphers[0].context
        payload = np.concatenate([c.payload for c in ciphers])
        return SimCipher(payload, context)

    def __add__(self, other: 'SimCipher') -> 'SimCipher':
        return self.context.add(self, other)

    def __sub__(self, other: 'SimCipher') -> 'SimCipher':
        return self.context.sub(self, other)

    def __mul__(self, other) -> 'SimCipher':
        if isinstance(other, SimCipher):
            return self.context.mul(self, other)
        return self.context.mul_plain(self, other)

    def reveal(self) -> List[FxpValue]:
        return [FxpValue(int(m), self.context.format) for m in self.payload]

    def __repr__(self):
        return f'SimCipher({len(self)} slots, {self.context.format})'
