"""
Relations between a cubic hypersurface Y, its singular locus and its
Fano variety of lines F(Y) in the Grothendieck ring.
"""
from typing import Tuple

from ..exceptions import InvalidInput, NegativeLefschetzPower
from .ring import Coercible, Monomial, ONE, VirtualClass, lefschetz, projective_space
from .symmetric import sym2


def _require_dimension(d: int, minimum: int) -> None:
    if d < minimum:
        raise InvalidInput(f"Dimension must be at least {minimum}, got {d}")


def blowup_class(x: Coercible, z: Coercible, c: int) -> VirtualClass:
    """
    Class of the blow-up of `x` along a smooth centre `z` of codimension `c`.
    """
    if c < 1:
        raise InvalidInput(f"Codimension must be positive, got {c}")
    x, z = VirtualClass.coerce(x), VirtualClass.coerce(z)
    return x - z + projective_space(c - 1) * z


def hilb2_class(x: Coercible, d: int, sing: Coercible) -> VirtualClass:
    """
    [Hilb^2 X] for a reduced hypersurface X of dimension d in a smooth variety.

    Length two subschemes are unordered pairs of distinct points or a point
    with a tangent direction; singular points carry one extra direction.
    """
    _require_dimension(d, 1)
    x = VirtualClass.coerce(x)
    return sym2(x) + (projective_space(d - 1) - 1) * x + lefschetz(d) * VirtualClass.coerce(sing)


def rational_defect(y: Coercible, d: int) -> VirtualClass:
    """
    M_Y = ([Y] - [P^d]) / L
    """
    _require_dimension(d, 0)
    return (VirtualClass.coerce(y) - projective_space(d)).shift(-1)


def ak_coefficients(d: int) -> Tuple[int, ...]:
    """
    Multiplicities a_0, ..., a_{2d-4} of L^k in Sym^2[P^{d-2}] - L^{d-2}.
    """
    _require_dimension(d, 2)
    result = []
    for k in range(2 * d - 3):
        if k < d - 2:
            result.append((k + 2) // 2)
        elif k == d - 2:
            result.append((d - 2) // 2)
        else:
            result.append((2 * d - 2 - k) // 2)
    return tuple(result)


def fano_class_from_defect(m_y: Coercible, d: int, sing: Coercible) -> VirtualClass:
    """
    [F(Y)] = Sym^2(M_Y + [P^{d-2}]) - L^{d-2} (1 - [Sing Y])
    """
    _require_dimension(d, 2)
    m_y, sing = VirtualClass.coerce(m_y), VirtualClass.coerce(sing)
    return sym2(m_y + projective_space(d - 2)) - lefschetz(d - 2) * (1 - sing)


def fano_class_expanded(m_y: Coercible, d: int, sing: Coercible) -> VirtualClass:
    """
    [F(Y)] = Sym^2 M_Y + [P^{d-2}] M_Y + sum a_k L^k + L^{d-2} [Sing Y]
    """
    _require_dimension(d, 2)
    m_y, sing = VirtualClass.coerce(m_y), VirtualClass.coerce(sing)
    tate = VirtualClass({Monomial((), k): a for k, a in enumerate(ak_coefficients(d))})
    return sym2(m_y) + projective_space(d - 2) * m_y + tate + lefschetz(d - 2) * sing


def fano_class_from_relation(y: Coercible, d: int, sing: Coercible) -> VirtualClass:
    """
    Solve Sym^2[Y] = (1 + L^d)[Y] + L^2 [F(Y)] - L^d [Sing Y] for [F(Y)].
    """
    _require_dimension(d, 1)
    y, sing = VirtualClass.coerce(y), VirtualClass.coerce(sing)
    return (sym2(y) - (1 + lefschetz(d)) * y + lefschetz(d) * sing).shift(-2)


def yfy_hilb_sides(y: Coercible, d: int, sing: Coercible, fano: Coercible) -> Tuple[VirtualClass, VirtualClass]:
    """
    Both sides of [Hilb^2 Y] = [P^d][Y] + L^2 [F(Y)].
    """
    y = VirtualClass.coerce(y)
    return hilb2_class(y, d, sing), projective_space(d) * y + VirtualClass.coerce(fano).shift(2)


def yfy_sym_sides(y: Coercible, d: int, sing: Coercible, fano: Coercible) -> Tuple[VirtualClass, VirtualClass]:
    """
    Both sides of Sym^2[Y] = (1 + L^d)[Y] + L^2 [F(Y)] - L^d [Sing Y].
    """
    y, sing = VirtualClass.coerce(y), VirtualClass.coerce(sing)
    rhs = (1 + lefschetz(d)) * y + VirtualClass.coerce(fano).shift(2) - lefschetz(d) * sing
    return sym2(y), rhs


def quadric_class(n: int) -> VirtualClass:
    """
    Class of a smooth n-dimensional quadric with a rational point.
    """
    if n < 0:
        raise InvalidInput(f"Quadric dimension must be nonnegative, got {n}")
    if n % 2:
        return projective_space(n)
    return projective_space(n) + lefschetz(n // 2)


def nodal_cubic_class(v: Coercible, d: int) -> VirtualClass:
    """
    [Y] for a cubic d-fold with one ordinary node, from the class of the
    (d - 2)-dimensional intersection V of lines through the node.

    Projecting from the node identifies Bl_node Y with Bl_V P^d; the
    exceptional divisor over the node is a smooth quadric.
    """
    _require_dimension(d, 2)
    return blowup_class(projective_space(d), v, 2) + ONE - quadric_class(d - 1)


def nodal_defect(v: Coercible, d: int) -> VirtualClass:
    """
    M_Y for a one-nodal cubic d-fold; d=3 gives [C] - [P^1] - 1.
    """
    return rational_defect(nodal_cubic_class(v, d), d)


def cone_classes(y_base: Coercible, sing_base: Coercible,
                 fano_base: Coercible) -> Tuple[VirtualClass, VirtualClass, VirtualClass]:
    """
    ([Y], [Sing Y], [F(Y)]) for the cone Y over a cubic with the given
    classes. Every line of the cone passes through the vertex or lies in
    a plane spanned by the vertex and a line of the base.
    """
    y_base, sing_base = VirtualClass.coerce(y_base), VirtualClass.coerce(sing_base)
    return (
        1 + y_base.shift(1),
        1 + sing_base.shift(1),
        y_base + VirtualClass.coerce(fano_base).shift(2),
    )


def reduce_mod_L(a: Coercible) -> VirtualClass:
    """
    Image in K_0(Var/k) / (L).
    """
    a = VirtualClass.coerce(a)
    if a.min_lexp < 0:
        raise NegativeLefschetzPower(f"Class {a} has negative powers of L")
    return VirtualClass({m: c for m, c in a if m.lexp == 0})
