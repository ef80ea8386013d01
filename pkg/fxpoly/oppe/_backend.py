from abc import ABC, abstractmethod

import numpy as np

from fxpoly.fxp import FxpFormat, add_array, ge_array, mul_array, sub_array


# Arithmetic black box behind SimCipher; operands are object arrays of mantissas
class Backend(ABC):

    def derive(self, label) -> 'Backend':
        # Backend for an independent stream of work (one input, one branch); stateless backends share themselves
        return self

    @abstractmethod
    def add(self, a: np.ndarray, b: np.ndarray, fmt: FxpFormat) -> np.ndarray:
        pass

    @abstractmethod
    def sub(self, a: np.ndarray, b: np.ndarray, fmt: FxpFormat) -> np.ndarray:
        pass

    @abstractmethod
    def mul(self, a: np.ndarray, b: np.ndarray, fmt: FxpFormat) -> np.ndarray:
        pass

    @abstractmethod
    def ge(self, a: np.ndarray, b: np.ndarray, fmt: FxpFormat) -> np.ndarray:
        pass


class PlainBackend(Backend):

    def add(self, a, b, fmt):
        return add_array(a, b, fmt)

    def sub(self, a, b, fmt):
        return sub_array(a, b, fmt)

    def mul(self, a, b, fmt):
        return mul_array(a, b, fmt)

    def ge(self, a, b, fmt):
        return ge_array(a, b, fmt)
