from dataclasses import dataclass, fields, asdict

from fxpoly.expr._builtins import BUILTINS
from fxpoly.expr._eval import eval_real
from fxpoly.expr._nodes import BinOp, Call, Expression, Neg, to_text

NONLINEAR_KINDS = ('div', 'comparison', 'exp', 'log', 'sqrt', 'other')


# Static count of secure building blocks a direct evaluation of F would use
@dataclass(frozen=True)
class OpCensus:
    add: int = 0
    mul: int = 0
    div: int = 0
    comparison: int = 0
    exp: int = 0
    log: int = 0
    sqrt: int = 0
    other: int = 0

    @property
    def contains_exp(self) -> bool:
        return self.exp > 0

    @property
    def nonlinear_step_count(self) -> int:
        return sum(getattr(self, kind) for kind in NONLINEAR_KINDS)

    def as_dict(self):
        return asdict(self)

    def __add__(self, other: 'OpCensus') -> 'OpCensus':
        return OpCensus(**{f.name: getattr(self, f.name) + getattr(other, f.name) for f in fields(self)})


def _constant_value(expr: Expression) -> float:
    return eval_real(expr, 0.0)


def _power_census(exponent: Expression) -> dict:
    if exponent.depends_on_x():
        return {'exp': 1, 'log': 1, 'mul': 1}

    value = _constant_value(exponent)
    if value != int(value):
        return {'exp': 1, 'log': 1, 'mul': 1}

    # integer exponents by repeated multiplication
    n = int(value)
    counts = {'mul': max(abs(n) - 1, 0)}
    if n < 0:
        counts['div'] = 1
    return counts


def census(expr: Expression) -> OpCensus:
    counts = {f.name: 0 for f in fields(OpCensus)}
    seen = set()

    def visit(node: Expression):
        # Constant subtrees are computed in the clear; repeated subtrees are computed once
        if not node.depends_on_x():
            return
        key = to_text(node)
        if key in seen:
            return
        seen.add(key)

        local = {}
        if isinstance(node, BinOp):
            if node.op in '+-':
                local = {'add': 1}
            elif node.op == '*':
                local = {'mul': 1}
            elif node.op == '/':
                local = {'mul': 1} if not node.right.depends_on_x() else {'div': 1}
            elif node.op == '^':
                local = _power_census(node.right)
        elif isinstance(node, Call):
            local = BUILTINS[node.name].census
        elif isinstance(node, Neg):
            local = {}

        for kind, n in local.items():
            counts[kind] += n
        for child in node.children():
            visit(child)

    visit(expr)
    return OpCensus(**counts)
