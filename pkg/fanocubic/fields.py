"""
Finite fields
~~~~~~~~~~~~~

Small finite fields with precomputed arithmetic tables. Elements are
integer codes ``sum a_i p^i`` of their coefficient vectors over F_p, so
the prime field embeds as the codes ``0..p-1`` of every extension.

"""
import functools
import itertools
import logging

from typing import Tuple

import numpy as np
import sympy

from .exceptions import InvalidField

logger = logging.getLogger(__name__)

MAX_TABLE_ENTRIES = 1 << 22
"""
Cells of one q x q arithmetic table; bounds the field order at 2048.
"""

TABLE_ROWS = 128
"""
Rows of the extension tables computed per step.
"""


def table_fits(p: int, degree: int=1) -> bool:
    """
    Arithmetic tables of F_{p^degree} stay within MAX_TABLE_ENTRIES.
    """
    return (p ** degree) ** 2 <= MAX_TABLE_ENTRIES


def _check_table_size(p: int, degree: int) -> None:
    if not table_fits(p, degree):
        order = p ** degree
        raise InvalidField(
            f"F_{order} needs {order * order} table entries; at most {MAX_TABLE_ENTRIES} are supported"
        )


class FiniteField:
    """
    Table driven arithmetic on element codes (numpy integer arrays).
    """
    characteristic: int
    degree: int
    add_table: np.ndarray
    mul_table: np.ndarray

    def __init__(self) -> None:
        order = self.order
        self.elements = np.arange(order, dtype=np.int64)
        self.neg_table = np.argmax(self.add_table == 0, axis=1).astype(np.int64)
        self.inv_table = np.argmax(self.mul_table == 1, axis=1).astype(np.int64)
        self.inv_table[0] = 0
        self.power_tables = [np.ones(order, dtype=np.int64), self.elements.copy()]
        for _ in range(2, 4):
            self.power_tables.append(self.mul_table[self.power_tables[-1], self.elements])
        self.frobenius_table = self.power(self.elements, self.characteristic)

    @property
    def order(self) -> int:
        return self.characteristic ** self.degree

    @property
    def prime_field(self) -> 'PrimeField':
        raise NotImplementedError()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FiniteField):
            return self.key == other.key
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def key(self) -> Tuple:
        return self.characteristic, self.degree

    def add(self, a, b):
        return self.add_table[a, b]

    def sub(self, a, b):
        return self.add_table[a, self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a):
        return self.inv_table[a]

    def power(self, a, exponent: int):
        """
        Elementwise power by square and multiply.
        """
        a = np.asarray(a, dtype=np.int64)
        result = np.ones_like(a)
        while exponent:
            if exponent & 1:
                result = self.mul_table[result, a]
            a = self.mul_table[a, a]
            exponent >>= 1
        return result

    def cube_power(self, a, exponent: int):
        """
        Powers up to 3 by table lookup (the only ones cubic forms need).
        """
        return self.power_tables[exponent][a]

    def frobenius(self, a):
        """
        x -> x^p
        """
        return self.frobenius_table[a]

    def embed(self, value: int) -> int:
        """
        Image of an integer under Z -> F_p -> this field.
        """
        return int(value) % self.characteristic


class PrimeField(FiniteField):
    """
    The prime field F_p.
    """
    degree = 1

    def __init__(self, p: int) -> None:
        if not isinstance(p, (int, np.integer)) or not sympy.isprime(int(p)):
            raise InvalidField(f"Field characteristic must be prime, got {p!r}")
        _check_table_size(int(p), 1)
        self.characteristic = self.p = int(p)
        codes = np.arange(self.p, dtype=np.int64)
        self.add_table = np.add.outer(codes, codes) % self.p
        self.mul_table = np.multiply.outer(codes, codes) % self.p
        super().__init__()

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __str__(self) -> str:
        return f"F_{self.p}"

    @property
    def prime_field(self) -> 'PrimeField':
        return self


def smallest_irreducible(p: int, degree: int) -> Tuple[int, ...]:
    """
    Lexicographically smallest monic irreducible polynomial of degree 2 or
    3 over F_p, as low to high coefficients without the leading 1.

    In these degrees irreducible means no root in F_p.
    """
    if degree not in (2, 3):
        raise InvalidField(f"Only extensions of degree 2 and 3 are supported, got {degree}")
    xs = np.arange(p, dtype=np.int64)
    for high_to_low in itertools.product(range(p), repeat=degree):
        low_to_high = high_to_low[::-1]
        values = xs ** degree
        for i, c in enumerate(low_to_high):
            values = values + c * xs ** i
        if np.all(values % p):
            return tuple(low_to_high)
    raise InvalidField(f"No irreducible polynomial of degree {degree} over F_{p}")  # pragma: no cover


class ExtField(FiniteField):
    """
    F_{p^n} = F_p[x] / (modulus) for n in {2, 3}.
    """
    def __init__(self, base: PrimeField, degree: int=2) -> None:
        if base.degree != 1:
            raise InvalidField("Extensions are only built over a prime field")
        p = base.p
        _check_table_size(p, degree)
        self.base = base
        self.characteristic = p
        self.degree = degree
        self.modulus = smallest_irreducible(p, degree)

        order = p ** degree
        self.digits = (np.arange(order, dtype=np.int64)[:, None] // p ** np.arange(degree)) % p
        weights = p ** np.arange(degree, dtype=np.int64)

        self.add_table = np.empty((order, order), dtype=np.int64)
        self.mul_table = np.empty((order, order), dtype=np.int64)
        for start in range(0, order, TABLE_ROWS):
            rows = self.digits[start:start + TABLE_ROWS]
            stop = start + len(rows)
            self.add_table[start:stop] = ((rows[:, None, :] + self.digits[None, :, :]) % p) @ weights
            self.mul_table[start:stop] = self._products(rows) @ weights

        logger.debug("Built F_%d^%d with modulus %s", p, degree, self.modulus)
        super().__init__()

    def _products(self, rows: np.ndarray) -> np.ndarray:
        """
        Coefficient vectors of `rows` times every element.
        """
        p, degree = self.characteristic, self.degree
        # Polynomial product, then reduce x^k for k >= degree using x^n = -sum m_i x^i
        product = np.zeros((len(rows), len(self.digits), 2 * degree - 1), dtype=np.int64)
        for i in range(degree):
            for j in range(degree):
                product[:, :, i + j] += np.multiply.outer(rows[:, i], self.digits[:, j])
        for k in range(2 * degree - 2, degree - 1, -1):
            lead = product[:, :, k] % p
            product[:, :, k] = 0
            for i, m in enumerate(self.modulus):
                product[:, :, k - degree + i] -= lead * m
        return product[:, :, :degree] % p

    def __repr__(self) -> str:
        return f"ExtField({self.base!r}, {self.degree})"

    def __str__(self) -> str:
        return f"F_{self.order}"

    @property
    def prime_field(self) -> PrimeField:
        return self.base

    def fixed_by_frobenius(self) -> np.ndarray:
        """
        Codes of elements with x^p = x.
        """
        return np.flatnonzero(self.frobenius_table == self.elements)


@functools.lru_cache(maxsize=None)
def get_field(p: int, degree: int=1) -> FiniteField:
    """
    Shared (cached) instance of F_{p^degree}; fields are immutable.
    """
    if degree == 1:
        return PrimeField(p)
    return ExtField(get_field(p), degree)
