"""
Symmetric powers
~~~~~~~~~~~~~~~~

Truncated Kapranov series Sym_t(a) = sum [Sym^n a] t^n, extended to all
of K_0(Var/k)[L^-1] by multiplicativity and Sym^n(L^m a) = L^{mn} Sym^n a.

"""
from typing import List, Sequence

from ..exceptions import InvalidInput
from .ring import Coercible, Monomial, ONE, Symbol, VirtualClass, ZERO


class SymSeries:
    """
    Power series in t with VirtualClass coefficients, truncated at `order`.
    """
    __slots__ = ('coefficients',)

    def __init__(self, coefficients: Sequence[VirtualClass]) -> None:
        coefficients = tuple(VirtualClass.coerce(c) for c in coefficients)
        if not coefficients or coefficients[0] != ONE:
            raise InvalidInput("Symmetric power series must start with 1")
        self.coefficients = coefficients

    @classmethod
    def one(cls, order: int) -> 'SymSeries':
        return cls([ONE] + [ZERO] * order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> VirtualClass:
        return self.coefficients[n]

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SymSeries):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return "SymSeries([{}])".format(', '.join(repr(str(c)) for c in self.coefficients))

    def __mul__(self, other: 'SymSeries') -> 'SymSeries':
        if not isinstance(other, SymSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return SymSeries([
            sum((self[i] * other[n - i] for i in range(n + 1)), ZERO)
            for n in range(order + 1)
        ])

    def inverse(self) -> 'SymSeries':
        """
        Series inverse: b_0 = 1, b_n = -sum_{i=1..n} a_i b_{n-i}.
        """
        result: List[VirtualClass] = [ONE]
        for n in range(1, self.order + 1):
            result.append(-sum((self[i] * result[n - i] for i in range(1, n + 1)), ZERO))
        return SymSeries(result)

    def __pow__(self, exponent: int) -> 'SymSeries':
        if exponent < 0:
            return self.inverse() ** -exponent
        result, base = SymSeries.one(self.order), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def substitute_lefschetz(self, k: int) -> 'SymSeries':
        """
        Substitute t -> L^k t.
        """
        return SymSeries([c.shift(k * n) for n, c in enumerate(self.coefficients)])


def _monomial_series(monomial: Monomial, order: int) -> SymSeries:
    """
    Sym_t of a single monomial with coefficient 1.
    """
    symbols = monomial.symbols
    if not symbols:
        # Sym^n(point) = point
        coefficients = [ONE] * (order + 1)
    else:
        base = symbols[0] if len(symbols) == 1 else Symbol.product(symbols)
        coefficients = [ONE, VirtualClass.from_monomial(Monomial(symbols, 0))]
        coefficients += [VirtualClass.from_symbol(Symbol.sym_power(n, base)) for n in range(2, order + 1)]
        coefficients = coefficients[:order + 1]
    return SymSeries(coefficients).substitute_lefschetz(monomial.lexp)


def sym_series(a: Coercible, order: int) -> SymSeries:
    """
    Kapranov series of `a` truncated at t^order.
    """
    if order < 0:
        raise InvalidInput(f"Series order must be nonnegative, got {order}")
    result = SymSeries.one(order)
    for monomial, coefficient in VirtualClass.coerce(a):
        result = result * (_monomial_series(monomial, order) ** coefficient)
    return result


def sym_power(a: Coercible, n: int) -> VirtualClass:
    """
    [Sym^n a]
    """
    return sym_series(a, n)[n]


def sym2(a: Coercible) -> VirtualClass:
    return sym_power(a, 2)
