"""
Text form of virtual classes
~~~~~~~~~~~~~~~~~~~~~~~~~~~~

Grammar accepted by :func:`parse_class` (whitespace is ignored)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' ['-'] INT]
    atom   := INT | 'L' | NAME | 'Sym' INT '(' expr ')' | '(' expr ')'

Negative exponents are only allowed on ``L``. The output of
:meth:`VirtualClass.format` is always accepted.

"""
import re

from typing import Iterator, List, NamedTuple

from ..exceptions import ClassParseError, InvalidInput
from .ring import ONE, Symbol, VirtualClass, lefschetz
from .symmetric import sym_power

TOKEN_RE = re.compile(r'\s*(?:(?P<int>\d+)|(?P<sym>Sym\d+)(?=\s*\()|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))')


class Token(NamedTuple):
    kind: str
    value: str
    position: int


def tokenize(text: str) -> Iterator[Token]:
    position = 0
    end = len(text.rstrip())
    while position < end:
        match = TOKEN_RE.match(text, position)
        if not match:
            raise ClassParseError("Unexpected character", text, len(text) - len(text[position:].lstrip()))
        kind = match.lastgroup
        yield Token(kind, match.group(kind), match.start(kind))
        position = match.end()
    yield Token('end', '', end)


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens: List[Token] = list(tokenize(text))
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def error(self, message: str) -> ClassParseError:
        return ClassParseError(message, self.text, self.current.position)

    def accept(self, value: str) -> bool:
        if self.current.kind == 'op' and self.current.value == value:
            self.index += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            raise self.error(f"Expected {value!r}")

    def integer(self) -> int:
        token = self.current
        if token.kind != 'int':
            raise self.error("Expected an integer")
        self.index += 1
        return int(token.value)

    def parse(self) -> VirtualClass:
        result = self.expr()
        if self.current.kind != 'end':
            raise self.error("Unexpected trailing input")
        return result

    def expr(self) -> VirtualClass:
        negate = self.accept('-')
        result = self.term()
        if negate:
            result = -result
        while True:
            if self.accept('+'):
                result = result + self.term()
            elif self.accept('-'):
                result = result - self.term()
            else:
                return result

    def term(self) -> VirtualClass:
        result = self.factor()
        while self.accept('*'):
            result = result * self.factor()
        return result

    def factor(self) -> VirtualClass:
        is_lefschetz = self.current.kind == 'name' and self.current.value == 'L'
        base = self.atom()
        if not self.accept('^'):
            return base
        negative = self.accept('-')
        exponent = self.integer()
        if is_lefschetz:
            return lefschetz(-exponent if negative else exponent)
        if negative:
            raise self.error("Negative exponents are only allowed on L")
        return base ** exponent

    def atom(self) -> VirtualClass:
        token = self.current
        if token.kind == 'int':
            self.index += 1
            return VirtualClass.coerce(int(token.value))

        if token.kind == 'name':
            self.index += 1
            if token.value == 'L':
                return lefschetz(1)
            try:
                return VirtualClass.from_symbol(Symbol.atomic(token.value))
            except InvalidInput:
                raise ClassParseError(f"Invalid symbol {token.value!r}", self.text, token.position) from None

        if token.kind == 'sym':
            self.index += 1
            n = int(token.value[3:])
            self.expect('(')
            inner = self.expr()
            self.expect(')')
            return sym_power(inner, n) if n else ONE

        if self.accept('('):
            inner = self.expr()
            self.expect(')')
            return inner

        raise self.error("Expected a term")


def parse_class(text: str) -> VirtualClass:
    """
    Parse the text form of a virtual class.
    """
    if not text or not text.strip():
        raise ClassParseError("Empty class expression")
    return _Parser(text).parse()


def format_class(a: VirtualClass) -> str:
    return VirtualClass.coerce(a).format()


def parse_symbol(text: str) -> Symbol:
    """
    Parse the text of a single symbol, eg ``X`` or ``Sym2(X)``.
    """
    parsed = parse_class(text)
    terms = list(parsed)
    if len(terms) == 1:
        (monomial, coefficient), = terms
        if coefficient == 1 and monomial.lexp == 0 and len(monomial.symbols) == 1:
            return monomial.symbols[0]
    raise ClassParseError(f"Not a single symbol: {text!r}")
