# flake8: noqa
"""
Motivic ring
~~~~~~~~~~~~

Symbolic classes in the Grothendieck ring of varieties, localized at L.

"""
from .ring import (
    Symbol,
    Monomial,
    VirtualClass,
    ZERO,
    ONE,
    L,
    lefschetz,
    symbol,
    add,
    mul,
    projective_space,
)
from .symmetric import (
    SymSeries,
    sym_series,
    sym_power,
    sym2,
)
from .relations import (
    blowup_class,
    hilb2_class,
    rational_defect,
    ak_coefficients,
    fano_class_from_defect,
    fano_class_expanded,
    fano_class_from_relation,
    yfy_hilb_sides,
    yfy_sym_sides,
    quadric_class,
    nodal_cubic_class,
    nodal_defect,
    cone_classes,
    reduce_mod_L,
)
from .text import (
    parse_class,
    parse_symbol,
    format_class,
)
