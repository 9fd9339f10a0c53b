"""
Hodge diamonds
~~~~~~~~~~~~~~

Dimension tables h^{p,q} of smooth cubic hypersurfaces and of their
Fano varieties of lines. Only dimensions are modelled; the symmetric
square of a graded table takes the alternating square on odd weights.

"""
import math

from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

import sympy

from .exceptions import InvalidInput
from .motivic import ak_coefficients

U, V, T = sympy.symbols('u v t')

Bidegree = Tuple[int, int]


class HodgeDiamond:
    """
    Finitely supported table (p, q) -> dimension; immutable.
    """
    __slots__ = ('_dims',)

    def __init__(self, dims: Mapping[Bidegree, int]=None) -> None:
        self._dims: Dict[Bidegree, int] = {
            (int(p), int(q)): int(h) for (p, q), h in sorted((dims or {}).items()) if h
        }

    @classmethod
    def tate(cls, k: int=0, multiplicity: int=1) -> 'HodgeDiamond':
        """
        Q(-k)^multiplicity
        """
        return cls({(k, k): multiplicity})

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> 'HodgeDiamond':
        dims = {}
        for key, value in data.items():
            p, q = key.split(',')
            dims[int(p), int(q)] = value
        return cls(dims)

    def to_json(self) -> Dict[str, int]:
        return {f"{p},{q}": h for (p, q), h in self._dims.items()}

    def __getitem__(self, bidegree: Bidegree) -> int:
        return self._dims.get(tuple(bidegree), 0)

    def __iter__(self) -> Iterator[Bidegree]:
        return iter(self._dims)

    def items(self) -> Iterable[Tuple[Bidegree, int]]:
        return self._dims.items()

    def __len__(self) -> int:
        return len(self._dims)

    def __bool__(self) -> bool:
        return bool(self._dims)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HodgeDiamond):
            return self._dims == other._dims
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._dims.items()))

    def __repr__(self) -> str:
        return f"HodgeDiamond({self._dims!r})"

    def __str__(self) -> str:
        return render_diamond(self)

    def __add__(self, other: 'HodgeDiamond') -> 'HodgeDiamond':
        if not isinstance(other, HodgeDiamond):
            return NotImplemented
        dims = dict(self._dims)
        for key, h in other.items():
            dims[key] = dims.get(key, 0) + h
        return HodgeDiamond(dims)

    def __mul__(self, factor: int) -> 'HodgeDiamond':
        if not isinstance(factor, int):
            return NotImplemented
        return HodgeDiamond({key: h * factor for key, h in self._dims.items()})

    __rmul__ = __mul__

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(sorted({p + q for p, q in self._dims}))

    @property
    def dimension(self) -> int:
        """
        Complex dimension of a variety with this diamond.
        """
        return max((max(p, q) for p, q in self._dims), default=0)

    @property
    def total(self) -> int:
        return sum(self._dims.values())

    def weight_part(self, w: int) -> 'HodgeDiamond':
        return HodgeDiamond({(p, q): h for (p, q), h in self._dims.items() if p + q == w})

    def betti(self, k: int) -> int:
        return sum(h for (p, q), h in self._dims.items() if p + q == k)

    def betti_numbers(self) -> List[int]:
        return [self.betti(k) for k in range(2 * self.dimension + 1)]

    def euler(self) -> int:
        return sum((-1) ** (p + q) * h for (p, q), h in self._dims.items())

    def is_symmetric(self) -> bool:
        return all(self[q, p] == h for (p, q), h in self._dims.items())

    def is_self_dual(self, n: int=None) -> bool:
        """
        Poincare duality h^{p,q} = h^{n-p,n-q}.
        """
        n = self.dimension if n is None else n
        return all(self[n - p, n - q] == h for (p, q), h in self._dims.items())

    def is_pure(self, w: int) -> bool:
        return all(p + q == w for p, q in self._dims)


def tate_twist(h: HodgeDiamond, k: int) -> HodgeDiamond:
    """
    h(-k): every (p, q) moves to (p + k, q + k).
    """
    return HodgeDiamond({(p + k, q + k): dim for (p, q), dim in h.items()})


def super_sym2(h: HodgeDiamond) -> HodgeDiamond:
    """
    Graded symmetric square; alternating square on odd weight pieces.
    """
    entries = list(h.items())
    dims: Dict[Bidegree, int] = {}
    for i, ((p1, q1), h1) in enumerate(entries):
        if (p1 + q1) % 2:
            diagonal = h1 * (h1 - 1) // 2
        else:
            diagonal = h1 * (h1 + 1) // 2
        key = (2 * p1, 2 * q1)
        dims[key] = dims.get(key, 0) + diagonal
        for (p2, q2), h2 in entries[i + 1:]:
            key = (p1 + p2, q1 + q2)
            dims[key] = dims.get(key, 0) + h1 * h2
    return HodgeDiamond(dims)


def primitive_hodge_cubic(d: int) -> HodgeDiamond:
    """
    Primitive middle cohomology of a smooth cubic d-fold:
    h^{d-q,q} = C(d + 2, 3q - d + 1).
    """
    if d < 1:
        raise InvalidInput(f"Dimension must be at least 1, got {d}")
    dims = {}
    for q in range(d + 1):
        k = 3 * q - d + 1
        if 0 <= k <= d + 2:
            dims[d - q, q] = math.comb(d + 2, k)
    return HodgeDiamond(dims)


def cubic_hodge(d: int) -> HodgeDiamond:
    h = primitive_hodge_cubic(d)
    for k in range(d + 1):
        h = h + HodgeDiamond.tate(k)
    return h


def rational_defect_hodge(d: int) -> HodgeDiamond:
    """
    H_Y = H^d(Y)_prim(1), pure of weight d - 2.
    """
    return tate_twist(primitive_hodge_cubic(d), -1)


def fano_hodge(d: int) -> HodgeDiamond:
    """
    F(Y) = Sym^2 H_Y + sum_{k=0}^{d-2} H_Y(-k) + sum_k Q(-k)^{a_k}
    """
    if d < 2:
        raise InvalidInput(f"Fano varieties of lines need d >= 2, got {d}")
    h_y = rational_defect_hodge(d)
    result = super_sym2(h_y)
    for k in range(d - 1):
        result = result + tate_twist(h_y, k)
    for k, a in enumerate(ak_coefficients(d)):
        result = result + HodgeDiamond.tate(k, a)
    return result


def fano_hodge_summands(d: int) -> Dict[int, str]:
    """
    Per weight, the summands of the decomposition contributing to it.
    """
    if d < 2:
        raise InvalidInput(f"Fano varieties of lines need d >= 2, got {d}")
    labels: Dict[int, List[str]] = {}
    labels.setdefault(2 * (d - 2), []).append('Sym^2(H_Y)')
    for k in range(d - 1):
        labels.setdefault(d - 2 + 2 * k, []).append('H_Y' if k == 0 else f"H_Y(-{k})")
    for k, a in enumerate(ak_coefficients(d)):
        if a:
            label = 'Q' if k == 0 else f"Q(-{k})"
            labels.setdefault(2 * k, []).append(label if a == 1 else f"{label}^{a}")
    return {w: ' + '.join(parts) for w, parts in sorted(labels.items())}


def hilb2_hodge(h: HodgeDiamond, d: int) -> HodgeDiamond:
    """
    Hilb^2 of a smooth projective d-fold: Sym^2 h + sum_{k=1}^{d-1} h(-k).
    """
    result = super_sym2(h)
    for k in range(1, d):
        result = result + tate_twist(h, k)
    return result


def curve_hodge(g: int) -> HodgeDiamond:
    return HodgeDiamond({(0, 0): 1, (1, 0): g, (0, 1): g, (1, 1): 1})


def surface_hodge(q: int, p_g: int, h11: int) -> HodgeDiamond:
    return HodgeDiamond({
        (0, 0): 1,
        (1, 0): q, (0, 1): q,
        (2, 0): p_g, (1, 1): h11, (0, 2): p_g,
        (2, 1): q, (1, 2): q,
        (2, 2): 1,
    })


def k3_hodge() -> HodgeDiamond:
    return surface_hodge(0, 1, 20)


def e_polynomial(h: HodgeDiamond) -> sympy.Poly:
    """
    E(u, v) = sum (-1)^{p+q} h^{p,q} u^p v^q
    """
    if any(p < 0 or q < 0 for p, q in h):
        raise InvalidInput("E-polynomials need nonnegative bidegrees")
    expr = sum(((-1) ** (p + q) * dim * U ** p * V ** q for (p, q), dim in h.items()), sympy.Integer(0))
    return sympy.Poly(expr, U, V)


def render_diamond(h: HodgeDiamond, labels: Optional[Mapping[int, str]]=None) -> str:
    """
    One row per nonzero weight, top weight first, entries centred with
    h^{w,0} on the left; an optional label per weight follows the row.
    """
    if not h:
        return '0\n'
    n = max(h.dimension, 0)
    width = max(len(str(dim)) for _, dim in h.items())
    label_width = len(f"H^{2 * n}")
    lines = []
    for w in range(2 * n, -1, -1):
        if not h.betti(w) and not any(h[p, w - p] for p in range(w + 1)):
            continue
        slots = [''] * (2 * n + 1)
        for p in range(min(w, n), max(0, w - n) - 1, -1):
            q = w - p
            if h[p, q]:
                slots[n + q - p] = str(h[p, q])
        body = ' '.join(s.rjust(width) for s in slots)
        line = f"{f'H^{w}'.ljust(label_width)} | {body} |"
        if labels and labels.get(w):
            line += f" {labels[w]}"
        lines.append(line)
    return '\n'.join(lines) + '\n'
