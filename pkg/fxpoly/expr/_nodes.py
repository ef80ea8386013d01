from abc import ABC
from dataclasses import dataclass
from typing import Tuple

CONSTANTS = {
    'pi': 3.141592653589793,
    'e': 2.718281828459045,
}

# Binding strength used by the printer
_PRECEDENCE = {'+': 1, '-': 1, '*': 2, '/': 2, 'neg': 3, '^': 4}
_ATOM = 5


class Expression(ABC):

    def children(self) -> Tuple['Expression', ...]:
        return ()

    def depends_on_x(self) -> bool:
        return any(child.depends_on_x() for child in self.children())

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Num(Expression):
    value: float


@dataclass(frozen=True)
class Const(Expression):
    name: str

    @property
    def value(self):
        return CONSTANTS[self.name]


@dataclass(frozen=True)
class Var(Expression):
    name: str = 'x'

    def depends_on_x(self) -> bool:
        return True


@dataclass(frozen=True)
class Neg(Expression):
    operand: Expression

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class BinOp(Expression):
    op: str
    left: Expression
    right: Expression

    def children(self):
        return self.left, self.right


@dataclass(frozen=True)
class Call(Expression):
    name: str
    args: Tuple[Expression, ...]

    def children(self):
        return self.args


def _precedence(expr: Expression) -> int:
    if isinstance(expr, BinOp):
        return _PRECEDENCE[expr.op]
    if isinstance(expr, Neg):
        return _PRECEDENCE['neg']
    return _ATOM


def _wrap(text, needed):
    return f'({text})' if needed else text


def to_text(expr: Expression) -> str:
    if isinstance(expr, Num):
        return repr(float(expr.value))
    if isinstance(expr, (Const, Var)):
        return expr.name
    if isinstance(expr, Call):
        return f'{expr.name}({", ".join(to_text(a) for a in expr.args)})'
    if isinstance(expr, Neg):
        return '-' + _wrap(to_text(expr.operand), _precedence(expr.operand) < _PRECEDENCE['neg'])
    if isinstance(expr, BinOp):
        prec = _PRECEDENCE[expr.op]
        left_prec, right_prec = _precedence(expr.left), _precedence(expr.right)
        if expr.op == '^':
            # right associative, exponent may be a bare unary minus
            left = _wrap(to_text(expr.left), left_prec <= prec)
            right = _wrap(to_text(expr.right), right_prec < _PRECEDENCE['neg'])
        else:
            left = _wrap(to_text(expr.left), left_prec < prec)
            right = _wrap(to_text(expr.right), right_prec <= prec)
        return f'{left} {expr.op} {right}'
    raise TypeError(f'not an expression: {expr!r}')
