"""
Grothendieck ring arithmetic
~~~~~~~~~~~~~~~~~~~~~~~~~~~~

Exact arithmetic in K_0(Var/k)[L^-1]. A class is a finite integer
combination of monomials; a monomial is a multiset of variety symbols
together with a (possibly negative) power of the Lefschetz class L.

"""
import re

from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Tuple, Union

from ..constants import SymbolKind
from ..exceptions import InvalidInput

NAME_RE = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')
RESERVED_NAME_RE = re.compile(r'^(L|Sym\d+)$')


class Symbol:
    """
    Formal class of a variety.

    Symbols compare and hash by their text, which is unique per kind:
    ``X`` (atomic), ``Sym2(X)`` (symmetric power) and ``X * Y`` (product
    closure, only ever seen as the argument of a symmetric power).
    """
    __slots__ = ('kind', 'text', 'name', 'n', 'base', 'factors')

    def __init__(self, kind: SymbolKind, text: str, *,
                 name: str=None, n: int=None, base: 'Symbol'=None,
                 factors: Tuple['Symbol', ...]=None) -> None:
        self.kind = kind
        self.text = text
        self.name = name
        self.n = n
        self.base = base
        self.factors = factors

    @classmethod
    def atomic(cls, name: str) -> 'Symbol':
        if not NAME_RE.match(name) or RESERVED_NAME_RE.match(name):
            raise InvalidInput(f"Invalid symbol name: {name!r}")
        return cls(SymbolKind.Atomic, name, name=name)

    @classmethod
    def sym_power(cls, n: int, base: 'Symbol') -> 'Symbol':
        """
        Opaque symbol standing for Sym^n of `base` (n >= 2).
        """
        if n < 2:
            raise InvalidInput(f"Symmetric power symbols need n >= 2, got {n}")
        return cls(SymbolKind.SymPower, f"Sym{n}({base.text})", n=n, base=base)

    @classmethod
    def product(cls, factors: Iterable['Symbol']) -> 'Symbol':
        factors = tuple(sorted(factors))
        if len(factors) < 2:
            raise InvalidInput("Product symbols need at least two factors")
        return cls(SymbolKind.Product, ' * '.join(f.text for f in factors), factors=factors)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Symbol):
            return self.text == other.text
        return NotImplemented

    def __lt__(self, other: 'Symbol') -> bool:
        if isinstance(other, Symbol):
            return self.text < other.text
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.text)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"Symbol({self.text!r})"

    @property
    def atoms(self) -> Tuple['Symbol', ...]:
        """
        Atomic symbols this symbol is built from.
        """
        if self.kind is SymbolKind.Atomic:
            return self,
        if self.kind is SymbolKind.SymPower:
            return self.base.atoms
        return tuple(a for f in self.factors for a in f.atoms)


class Monomial(NamedTuple):
    """
    Multiset of symbols (kept sorted) times L^lexp.
    """
    symbols: Tuple[Symbol, ...]
    lexp: int

    @property
    def sort_key(self) -> Tuple[int, Tuple[str, ...]]:
        return self.lexp, tuple(s.text for s in self.symbols)

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        return Monomial(tuple(sorted(self.symbols + other.symbols)), self.lexp + other.lexp)


UNIT = Monomial((), 0)

Coercible = Union['VirtualClass', int]


class VirtualClass:
    """
    Element of K_0(Var/k)[L^-1]; immutable.
    """
    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Mapping[Monomial, int]=None) -> None:
        items = ((m, c) for m, c in (terms or {}).items() if c)
        self._terms: Tuple[Tuple[Monomial, int], ...] = tuple(sorted(items, key=lambda t: t[0].sort_key))
        self._hash = None

    @classmethod
    def coerce(cls, value: Coercible) -> 'VirtualClass':
        if isinstance(value, VirtualClass):
            return value
        if isinstance(value, int):
            return cls({UNIT: value})
        raise TypeError(f"Cannot interpret {value!r} as a virtual class")

    @classmethod
    def from_symbol(cls, symbol: Symbol, coefficient: int=1) -> 'VirtualClass':
        return cls({Monomial((symbol,), 0): coefficient})

    @classmethod
    def from_monomial(cls, monomial: Monomial, coefficient: int=1) -> 'VirtualClass':
        return cls({monomial: coefficient})

    # Container protocol ####################################################

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def symbols(self) -> Tuple[Symbol, ...]:
        """
        Distinct symbols occurring in this class.
        """
        return tuple(sorted({s for m, _ in self._terms for s in m.symbols}))

    @property
    def min_lexp(self) -> int:
        return min((m.lexp for m, _ in self._terms), default=0)

    # Arithmetic ############################################################

    def _combine(self, other: 'VirtualClass', sign: int) -> 'VirtualClass':
        terms: Dict[Monomial, int] = dict(self._terms)
        for m, c in other:
            terms[m] = terms.get(m, 0) + sign * c
        return VirtualClass(terms)

    def __add__(self, other: Coercible) -> 'VirtualClass':
        try:
            other = VirtualClass.coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> 'VirtualClass':
        try:
            other = VirtualClass.coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other: Coercible) -> 'VirtualClass':
        return (-self) + other

    def __neg__(self) -> 'VirtualClass':
        return VirtualClass({m: -c for m, c in self._terms})

    def __mul__(self, other: Coercible) -> 'VirtualClass':
        if isinstance(other, int):
            return VirtualClass({m: c * other for m, c in self._terms})
        if not isinstance(other, VirtualClass):
            return NotImplemented
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self._terms:
            for m2, c2 in other:
                m = m1 * m2
                terms[m] = terms.get(m, 0) + c1 * c2
        return VirtualClass(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'VirtualClass':
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            # Only pure powers of L are units.
            if len(self._terms) == 1 and not self._terms[0][0].symbols and self._terms[0][1] == 1:
                return lefschetz(self._terms[0][0].lexp * exponent)
            raise InvalidInput(f"Class {self} is not invertible")
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = VirtualClass.coerce(other)
        if isinstance(other, VirtualClass):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"VirtualClass({self.format()!r})"

    def shift(self, k: int) -> 'VirtualClass':
        """
        Multiply by L^k.
        """
        return VirtualClass({Monomial(m.symbols, m.lexp + k): c for m, c in self._terms})

    # Formatting ############################################################

    @staticmethod
    def _format_monomial(monomial: Monomial) -> str:
        factors = []
        if monomial.lexp == 1:
            factors.append('L')
        elif monomial.lexp:
            factors.append(f"L^{monomial.lexp}")
        symbols = list(monomial.symbols)
        for symbol in sorted(set(symbols)):
            power = symbols.count(symbol)
            factors.append(symbol.text if power == 1 else f"{symbol.text}^{power}")
        return ' * '.join(factors)

    def format(self) -> str:
        """
        Canonical text form, eg ``1 - Sym2(X) + 2 * L + L^2``: terms ordered by power of L, then symbols.
        """
        if not self._terms:
            return '0'

        parts = []
        for idx, (monomial, coefficient) in enumerate(self._terms):
            body = self._format_monomial(monomial)
            magnitude = abs(coefficient)
            if not body:
                body = str(magnitude)
            elif magnitude != 1:
                body = f"{magnitude} * {body}"

            if idx == 0:
                parts.append(f"-{body}" if coefficient < 0 else body)
            else:
                parts.append(f" - {body}" if coefficient < 0 else f" + {body}")
        return ''.join(parts)


def lefschetz(k: int=1) -> VirtualClass:
    """
    The class L^k.
    """
    return VirtualClass({Monomial((), k): 1})


ZERO = VirtualClass()
ONE = VirtualClass({UNIT: 1})
L = lefschetz(1)


def symbol(name: str) -> VirtualClass:
    """
    Class of an atomic variety symbol.
    """
    return VirtualClass.from_symbol(Symbol.atomic(name))


def add(a: Coercible, b: Coercible) -> VirtualClass:
    return VirtualClass.coerce(a) + VirtualClass.coerce(b)


def mul(a: Coercible, b: Coercible) -> VirtualClass:
    return VirtualClass.coerce(a) * VirtualClass.coerce(b)


def projective_space(n: int) -> VirtualClass:
    """
    [P^n] = 1 + L + ... + L^n
    """
    if n < 0:
        raise InvalidInput(f"Projective space dimension must be nonnegative, got {n}")
    return VirtualClass({Monomial((), k): 1 for k in range(n + 1)})
