import re
from typing import List, NamedTuple

from fxpoly.expr._builtins import lookup
from fxpoly.expr._nodes import CONSTANTS, BinOp, Call, Const, Expression, Neg, Num, Var
from fxpoly.util import ArityError, ExpressionSyntaxError, UnknownIdentifierError

_TOKEN = re.compile(r'''
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\*\*|[-+*/^(),])
''', re.VERBOSE)

VARIABLE = 'x'


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ExpressionSyntaxError(f'unexpected character "{text[pos]}"', pos)
        if match.lastgroup != 'ws':
            value = '^' if match.group() == '**' else match.group()
            tokens.append(Token(match.lastgroup, value, pos))
        pos = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


# Recursive descent over
#   expr    := term (('+' | '-') term)*
#   term    := unary (('*' | '/') unary)*
#   unary   := '-' unary | power
#   power   := primary ('^' unary)?
#   primary := number | ident | ident '(' expr (',' expr)* ')' | '(' expr ')'
class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _accept(self, text) -> bool:
        if self.current.kind == 'op' and self.current.text == text:
            self.index += 1
            return True
        return False

    def _expect(self, text):
        if not self._accept(text):
            self._fail(f'expected "{text}"')

    def _fail(self, message):
        token = self.current
        if token.kind == 'end':
            raise ExpressionSyntaxError('unexpected end of input', token.position)
        raise ExpressionSyntaxError(f'{message}, found "{token.text}"', token.position)

    def parse(self) -> Expression:
        expr = self.expr()
        if self.current.kind != 'end':
            self._fail('unexpected token')
        return expr

    def expr(self) -> Expression:
        node = self.term()
        while self.current.kind == 'op' and self.current.text in '+-':
            op = self._advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expression:
        node = self.unary()
        while self.current.kind == 'op' and self.current.text in '*/':
            op = self._advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expression:
        if self._accept('-'):
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expression:
        base = self.primary()
        if self._accept('^'):
            return BinOp('^', base, self.unary())
        return base

    def primary(self) -> Expression:
        token = self.current
        if token.kind == 'number':
            self._advance()
            return Num(float(token.text))
        if token.kind == 'ident':
            self._advance()
            if self.current.kind == 'op' and self.current.text == '(':
                return self._call(token)
            if token.text == VARIABLE:
                return Var(VARIABLE)
            if token.text in CONSTANTS:
                return Const(token.text)
            raise UnknownIdentifierError(token.text, token.position)
        if self._accept('('):
            node = self.expr()
            self._expect(')')
            return node
        self._fail('expected a number, name or "("')

    def _call(self, name: Token) -> Expression:
        builtin = lookup(name.text)
        if builtin is None:
            raise UnknownIdentifierError(name.text, name.position)

        self._expect('(')
        args = [self.expr()]
        while self._accept(','):
            args.append(self.expr())
        self._expect(')')

        if len(args) != builtin.arity:
            raise ArityError(name.text, builtin.arity, len(args))
        for i in builtin.constant_args:
            if args[i].depends_on_x():
                raise ExpressionSyntaxError(f'argument {i + 1} of {name.text} must not depend on x',
                                            name.position)
        return Call(name.text, tuple(args))


def parse(text: str) -> Expression:
    if not text or not text.strip():
        raise ExpressionSyntaxError('empty expression', 0)
    return _Parser(text).parse()
