"""Parser and realization of graph expressions.

Grammar (whitespace is ignored)::

    expr  := union ('+' union)*
    union := term ('u' term)*
    term  := INT '*' atom | atom
    atom  := '~' atom | '(' expr ')' | NAME

``+`` is the join and binds weaker than the disjoint union ``u``. Names are ``K<n>``,
``K<a>,<b>``, ``P<n>``, ``C<n>``, ``M<n>``, ``E<n>``, ``S<a1>,...,<aj>``, ``D<a>,<b>``,
``D2,2*`` and ``F<k>``.
"""
from dataclasses import dataclass
from functools import reduce
from typing import Tuple

from spexlab.graphs import named
from spexlab.graphs.exceptions import ExpressionSyntaxError, ParameterRangeError


_ARITY = {
    'K': (1, 2),
    'P': (1,),
    'C': (1,),
    'M': (1,),
    'E': (1,),
    'D': (2,),
    'F': (1,),
}

_MINIMUM = {
    'K': 0,
    'P': 1,
    'C': 3,
    'M': 0,
    'E': 0,
    'S': 1,
    'D': 0,
    'F': 1,
}


class GraphExpr(object):
    """Base class of the expression syntax tree."""

    def realize(self):
        raise NotImplementedError()


@dataclass(frozen=True)
class Atom(GraphExpr):
    name: str
    params: Tuple[int, ...] = ()

    def realize(self):
        if self.name == 'D*':
            return named.double_star_extended()
        elif self.name == 'K':
            if len(self.params) == 1:
                return named.complete(self.params[0])
            return named.complete_bipartite(*self.params)
        elif self.name == 'S':
            return named.spider(self.params)

        constructor = {
            'P': named.path,
            'C': named.cycle,
            'M': named.matching,
            'E': named.empty,
            'D': named.double_star,
            'F': named.friendship,
        }[self.name]
        return constructor(*self.params)

    def __str__(self):
        if self.name == 'D*':
            return 'D2,2*'
        return self.name + ','.join(str(p) for p in self.params)


@dataclass(frozen=True)
class Join(GraphExpr):
    parts: Tuple[GraphExpr, ...]

    def realize(self):
        return reduce(lambda left, right: left.join(right), (p.realize() for p in self.parts))

    def __str__(self):
        return '+'.join(_wrap(p, Join) for p in self.parts)


@dataclass(frozen=True)
class Union(GraphExpr):
    parts: Tuple[GraphExpr, ...]

    def realize(self):
        return reduce(lambda left, right: left.union(right), (p.realize() for p in self.parts))

    def __str__(self):
        return ' u '.join(_wrap(p, (Join, Union)) for p in self.parts)


@dataclass(frozen=True)
class Repeat(GraphExpr):
    times: int
    expr: GraphExpr

    def realize(self):
        return self.expr.realize().repeat(self.times)

    def __str__(self):
        return f'{self.times}*' + _wrap(self.expr, (Join, Union, Repeat))


@dataclass(frozen=True)
class Complement(GraphExpr):
    expr: GraphExpr

    def realize(self):
        return self.expr.realize().complement()

    def __str__(self):
        return '~' + _wrap(self.expr, (Join, Union, Repeat))


def _wrap(expr, types):
    text = str(expr)
    return f'({text})' if isinstance(expr, types) else text


class _Parser(object):

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, position=None):
        return ExpressionSyntaxError(message, self.pos if position is None else position)

    def skip_whitespace(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_whitespace()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def expect(self, char):
        if self.peek() != char:
            found = repr(self.peek()) if self.peek() else 'end of input'
            raise self.error(f'Expected {char!r}, found {found}')
        self.pos += 1

    def integer(self):
        self.skip_whitespace()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error('Expected an integer')
        return int(self.text[start:self.pos])

    def parse(self):
        expr = self.expr()
        if self.peek() != '':
            raise self.error(f'Unexpected character {self.peek()!r}')
        return expr

    def expr(self):
        parts = [self.union()]
        while self.peek() == '+':
            self.pos += 1
            parts.append(self.union())
        return parts[0] if len(parts) == 1 else Join(tuple(parts))

    def union(self):
        parts = [self.term()]
        while self.peek() == 'u':
            self.pos += 1
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else Union(tuple(parts))

    def term(self):
        if self.peek().isdigit():
            times = self.integer()
            self.expect('*')
            return Repeat(times, self.atom())
        return self.atom()

    def atom(self):
        char = self.peek()
        if char == '~':
            self.pos += 1
            return Complement(self.atom())
        elif char == '(':
            self.pos += 1
            expr = self.expr()
            self.expect(')')
            return expr
        elif char in _MINIMUM:
            return self.name()
        elif char == '':
            raise self.error('Unexpected end of input')
        raise self.error(f'Unexpected character {char!r}')

    def name(self):
        start = self.pos
        letter = self.text[self.pos]
        self.pos += 1
        params = [self.integer()]
        while self.peek() == ',':
            self.pos += 1
            params.append(self.integer())

        if letter == 'D' and self.peek() == '*':
            self.pos += 1
            if params != [2, 2]:
                raise self.error('Only D2,2* is defined', start)
            return Atom('D*')

        if letter in _ARITY and len(params) not in _ARITY[letter]:
            raise self.error(f'{letter} takes {" or ".join(map(str, _ARITY[letter]))} '
                             f'parameter(s), got {len(params)}', start)
        for param in params:
            if param < _MINIMUM[letter]:
                raise ParameterRangeError(f'{letter} requires parameters >= {_MINIMUM[letter]}, '
                                          f'got {param} (at position {start})')
        return Atom(letter, tuple(params))


def parse_expr(text):
    """Parses a graph expression.

    Parameters
    ----------
    text : str
        Expression, e.g. ``'K2+(P8 u 3*P4)'``.

    Returns
    -------
    expr : GraphExpr
        The syntax tree.

    Raises
    ------
    ExpressionSyntaxError
        If `text` does not match the grammar.
    ParameterRangeError
        If a named graph's parameter is out of range.
    """
    return _Parser(text).parse()


def realize(expr):
    """Builds the graph of a parsed expression (or of an expression string)."""
    if isinstance(expr, str):
        expr = parse_expr(expr)
    return expr.realize()
