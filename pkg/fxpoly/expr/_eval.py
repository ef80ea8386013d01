from dataclasses import dataclass
from typing import Union

import numpy as np

from fxpoly.expr._builtins import BUILTINS, DEFAULT_QUAD_TOL
from fxpoly.expr._nodes import BinOp, Call, Const, Expression, Neg, Num, Var, to_text
from fxpoly.expr._parser import parse
from fxpoly.util import DomainError


class _Evaluator:
    def __init__(self, xs: np.ndarray, quad_tol: float):
        self.xs = xs
        self.quad_tol = quad_tol

    def _fail(self, message, mask):
        bad = np.broadcast_to(np.asarray(mask), self.xs.shape)
        x = float(self.xs[int(np.argmax(bad))]) if bad.any() else None
        raise DomainError(f'{message} at x={x}', x=x)

    def visit(self, node: Expression):
        if isinstance(node, Num):
            return np.float64(node.value)
        if isinstance(node, Const):
            return np.float64(node.value)
        if isinstance(node, Var):
            return self.xs
        if isinstance(node, Neg):
            return -self.visit(node.operand)
        if isinstance(node, BinOp):
            return self._binop(node)
        if isinstance(node, Call):
            return self._call(node)
        raise TypeError(f'not an expression: {node!r}')

    def _binop(self, node: BinOp):
        left, right = self.visit(node.left), self.visit(node.right)
        if node.op == '+':
            return left + right
        if node.op == '-':
            return left - right
        if node.op == '*':
            return left * right
        if node.op == '/':
            zero = np.asarray(right) == 0
            if zero.any():
                self._fail('division by zero', zero)
            return left / right
        if node.op == '^':
            builtin = BUILTINS['pow']
            ok = builtin.valid(left, right)
            if not np.all(ok):
                self._fail('power outside its domain', ~np.asarray(ok))
            return np.power(left, right)
        raise TypeError(f'unknown operator {node.op}')

    def _call(self, node: Call):
        builtin = BUILTINS[node.name]
        args = [self.visit(arg) for arg in node.args] + list(builtin.fixed)
        if builtin.valid is not None:
            ok = builtin.valid(*args)
            if not np.all(ok):
                self._fail(f'{node.name} outside its domain', ~np.asarray(ok))
        if builtin.uses_quadrature:
            args.append(self.quad_tol)
        return builtin.vector(*args)


def eval_array(expr: Expression, xs, quad_tol: float = DEFAULT_QUAD_TOL) -> np.ndarray:
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    with np.errstate(all='ignore'):
        out = _Evaluator(xs, quad_tol).visit(expr)
    out = np.array(np.broadcast_to(out, xs.shape), dtype=float)

    bad = ~np.isfinite(out)
    if bad.any():
        x = float(xs[int(np.argmax(bad))])
        raise DomainError(f'{to_text(expr)} is not finite at x={x}', x=x)
    return out


def eval_real(expr: Expression, x: float, quad_tol: float = DEFAULT_QUAD_TOL) -> float:
    return float(eval_array(expr, [x], quad_tol)[0])


# Picklable callable F(x) with a vectorized `evaluate` for grids
@dataclass(frozen=True)
class ExprFunction:
    expr: Expression
    quad_tol: float = DEFAULT_QUAD_TOL

    def __call__(self, x: float) -> float:
        return eval_real(self.expr, x, self.quad_tol)

    def evaluate(self, xs) -> np.ndarray:
        return eval_array(self.expr, xs, self.quad_tol)

    @property
    def text(self) -> str:
        return to_text(self.expr)


def compile_function(source: Union[str, Expression], quad_tol: float = DEFAULT_QUAD_TOL) -> ExprFunction:
    expr = parse(source) if isinstance(source, str) else source
    return ExprFunction(expr, quad_tol)
