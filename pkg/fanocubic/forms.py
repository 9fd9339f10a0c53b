"""
Cubic forms
~~~~~~~~~~~

Homogeneous forms over a prime field, the cubic file format and the
catalog of named cubics.

Named cubics (``d`` is the hypersurface dimension, variables
``x_0 .. x_{d+1}``):

``fermat``
    ``x_0^3 + ... + x_{d+1}^3``. Smooth for p != 3; for p = 3 it is the
    cube of ``x_0 + ... + x_{d+1}`` and is rejected as non-reduced.

``node``
    ``x_{d+1} * Q + C`` with ``Q = x_0 x_1 - x_2^2 - ... - x_d^2`` and
    ``C = x_2 (x_1 - x_0)(x_1 - 4 x_0) + x_3^3 + ... + x_d^3``
    (``C = x_0^3 + x_1^3`` for d = 1). The point ``(0 : ... : 0 : 1)`` is
    singular. For d = 2 and p >= 7 the six lines through it are rational
    and distinct, so it is the only singular point and all 21 lines are
    rational.

``cone``
    The cone over the Fermat (d-1)-fold: ``x_0^3 + ... + x_d^3`` in d + 2
    variables, singular at the vertex ``(0 : ... : 0 : 1)``.

``random``
    Uniform random coefficients drawn from a seeded numpy generator,
    redrawn until the cubic is nonzero and reduced.

"""
import itertools
import logging

from pathlib import Path
from typing import Callable, Dict, Iterator, List, Mapping, Sequence, Tuple, Union

import numpy as np

from .exceptions import InvalidCubic
from .fields import FiniteField, PrimeField, get_field

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


def monomials(nvars: int, degree: int) -> List[Exponents]:
    """
    All exponent vectors of the given total degree, in a fixed order.
    """
    result = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        exponents = [0] * nvars
        for i in combo:
            exponents[i] += 1
        result.append(tuple(exponents))
    return result


class Form:
    """
    Homogeneous polynomial with coefficients in F_p.
    """
    def __init__(self, nvars: int, degree: int, coeffs: Mapping[Sequence[int], int], p: int) -> None:
        self.nvars = nvars
        self.degree = degree
        self.p = p

        terms: Dict[Exponents, int] = {}
        for exponents, coefficient in coeffs.items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != nvars:
                raise InvalidCubic(f"Exponent vector {exponents} does not have {nvars} entries")
            if any(e < 0 for e in exponents) or sum(exponents) != degree:
                raise InvalidCubic(f"Exponent vector {exponents} is not of degree {degree}")
            terms[exponents] = (terms.get(exponents, 0) + int(coefficient)) % p
        self.coeffs: Dict[Exponents, int] = {e: c for e, c in sorted(terms.items(), reverse=True) if c}

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Form):
            return (self.nvars, self.degree, self.p, self.coeffs) == (other.nvars, other.degree, other.p, other.coeffs)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, self.degree, self.p, tuple(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return '0'
        terms = []
        for exponents, coefficient in self.coeffs.items():
            factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exponents) if e]
            if coefficient != 1 or not factors:
                factors.insert(0, str(coefficient))
            terms.append('*'.join(factors))
        return ' + '.join(terms)

    def partial(self, i: int) -> 'Form':
        """
        Formal partial derivative with respect to x_i.
        """
        coeffs = {}
        for exponents, coefficient in self.coeffs.items():
            if exponents[i]:
                lowered = list(exponents)
                lowered[i] -= 1
                coeffs[tuple(lowered)] = coefficient * exponents[i]
        return Form(self.nvars, self.degree - 1, coeffs, self.p)

    def evaluate(self, field: FiniteField, points: np.ndarray) -> np.ndarray:
        """
        Values at the rows of `points` (element codes of `field`).
        """
        points = np.asarray(points, dtype=np.int64)
        result = np.zeros(points.shape[0], dtype=np.int64)
        for exponents, coefficient in self.coeffs.items():
            value = np.full(points.shape[0], field.embed(coefficient), dtype=np.int64)
            for i, e in enumerate(exponents):
                if e:
                    value = field.mul(value, field.cube_power(points[:, i], e) if e <= 3
                                      else field.power(points[:, i], e))
            result = field.add(result, value)
        return result

    def to_sympy(self, variables: Sequence):
        """
        The form as an integer sympy polynomial expression.
        """
        total = 0
        for exponents, coefficient in self.coeffs.items():
            term = coefficient
            for x, e in zip(variables, exponents):
                term = term * x ** e
            total = total + term
        return total


class CubicForm(Form):
    """
    Cubic form in d + 2 variables defining a hypersurface Y of dimension d.
    """
    def __init__(self, dim: int, coeffs: Mapping[Sequence[int], int], p: int, *, name: str=None) -> None:
        if dim < 1:
            raise InvalidCubic(f"Hypersurface dimension must be at least 1, got {dim}")
        super().__init__(dim + 2, 3, coeffs, p)
        if not self.coeffs:
            raise InvalidCubic("Cubic form is identically zero")
        self.dim = dim
        self.name = name

    @property
    def field(self) -> PrimeField:
        return get_field(self.p)

    @property
    def label(self) -> str:
        return self.name or f"cubic(d={self.dim}, p={self.p})"

    @property
    def gradient(self) -> Tuple[Form, ...]:
        return tuple(self.partial(i) for i in range(self.nvars))


# File format ###############################################################

def parse_cubic(text: str, *, name: str=None) -> CubicForm:
    """
    Read a cubic from its text form::

        cubic d=<d> p=<p>
        <coeff> <e_0> <e_1> ... <e_{d+1}>

    Blank lines and ``#`` comments are ignored.
    """
    lines = [line.split('#', 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise InvalidCubic("Empty cubic definition")

    header = lines[0].split()
    try:
        if header[0] != 'cubic' or len(header) != 3:
            raise ValueError(header)
        params = dict(h.split('=', 1) for h in header[1:])
        dim, p = int(params['d']), int(params['p'])
    except (ValueError, KeyError, IndexError):
        raise InvalidCubic(f"Invalid header {lines[0]!r}; expected `cubic d=<d> p=<p>`") from None

    field = get_field(p)
    coeffs: Dict[Exponents, int] = {}
    for term_no, line in enumerate(lines[1:], start=1):
        try:
            values = [int(v) for v in line.split()]
        except ValueError:
            raise InvalidCubic(f"Term {term_no}: expected integers, got {line!r}") from None
        if len(values) != dim + 3:
            raise InvalidCubic(f"Term {term_no}: expected a coefficient and {dim + 2} exponents")
        exponents = tuple(values[1:])
        coeffs[exponents] = coeffs.get(exponents, 0) + values[0]
    return CubicForm(dim, coeffs, field.p, name=name)


def load_cubic(path: Union[str, Path]) -> CubicForm:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as ex:
        raise InvalidCubic(f"Unable to read cubic file {path}: {ex}") from ex
    return parse_cubic(text, name=path.name)


def format_cubic(f: CubicForm) -> str:
    lines = [f"cubic d={f.dim} p={f.p}"]
    lines += [' '.join(map(str, (c,) + e)) for e, c in f.coeffs.items()]
    return '\n'.join(lines) + '\n'


# Named cubics ##############################################################

def _unit(nvars: int, *powers: Tuple[int, int]) -> Exponents:
    exponents = [0] * nvars
    for i, e in powers:
        exponents[i] += e
    return tuple(exponents)


def fermat(d: int, p: int) -> CubicForm:
    n = d + 2
    return CubicForm(d, {_unit(n, (i, 3)): 1 for i in range(n)}, p, name=f"fermat({d})")


def cone(d: int, p: int) -> CubicForm:
    n = d + 2
    return CubicForm(d, {_unit(n, (i, 3)): 1 for i in range(n - 1)}, p, name=f"cone({d})")


def node(d: int, p: int) -> CubicForm:
    n = d + 2
    apex = d + 1
    coeffs: Dict[Exponents, int] = {}

    def put(coefficient: int, *powers: Tuple[int, int]) -> None:
        key = _unit(n, *powers)
        coeffs[key] = coeffs.get(key, 0) + coefficient

    # x_{d+1} * Q
    put(1, (apex, 1), (0, 1), (1, 1))
    for i in range(2, d + 1):
        put(-1, (apex, 1), (i, 2))

    # C
    if d == 1:
        put(1, (0, 3))
        put(1, (1, 3))
    else:
        # x2 (x1 - x0)(x1 - 4 x0) = x2 (x1^2 - 5 x0 x1 + 4 x0^2)
        put(1, (2, 1), (1, 2))
        put(-5, (2, 1), (0, 1), (1, 1))
        put(4, (2, 1), (0, 2))
        for i in range(3, d + 1):
            put(1, (i, 3))
    return CubicForm(d, coeffs, p, name=f"node({d})")


def random_cubic_candidates(d: int, p: int, seed: int) -> Iterator[CubicForm]:
    """
    Endless deterministic stream of nonzero cubics with uniform coefficients.
    """
    rng = np.random.default_rng(seed)
    basis = monomials(d + 2, 3)
    index = 0
    while True:
        values = rng.integers(0, p, size=len(basis))
        if values.any():
            yield CubicForm(d, dict(zip(basis, values.tolist())), p, name=f"random({d}, seed={seed}#{index})")
        index += 1


NAMED_CUBICS: Dict[str, Callable[[int, int], CubicForm]] = {
    'fermat': fermat,
    'node': node,
    'cone': cone,
}


def named_cubic(name: str, d: int, p: int) -> CubicForm:
    try:
        factory = NAMED_CUBICS[name]
    except KeyError:
        raise InvalidCubic(f"Unknown named cubic {name!r}; choose from: {', '.join(NAMED_CUBICS)}") from None
    return factory(d, p)

