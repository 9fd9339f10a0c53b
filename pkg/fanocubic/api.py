# flake8: noqa
"""
Fano Cubic
~~~~~~~~~~

Lines on cubic hypersurfaces: the relation between a cubic Y and its Fano
variety of lines F(Y), checked by point counting, Euler characteristics,
Hodge numbers and symbolic computation.

"""
from .constants import (
    ExitCode,
    OutputFormat,
    Parity,
    Relation,
    Target,
    Verdict,
)
from .exceptions import (
    FanoCubicError,
    ImmediateExit,
    VerificationFailed,
    InvalidInput,
    InvalidField,
    InvalidCubic,
    NonReducedCubic,
    ClassParseError,
    UnsupportedOrder,
    ScanTooLarge,
    NegativeLefschetzPower,
    UnassignedSymbol,
    NonIntegralResult,
)
from .fields import (
    PrimeField,
    ExtField,
    get_field,
)
from .forms import (
    CubicForm,
    parse_cubic,
    load_cubic,
    format_cubic,
    named_cubic,
)
from .geometry import (
    count_points,
    singular_points,
    count_singular_points,
    is_reduced,
    require_reduced,
    enumerate_lines,
    scan_lines,
    count_sym2_points,
    count_hilb2_points,
    count_fano_by_formula,
    verify_yfy_counting,
    verify_sym_counting,
    verify_line_count,
    zeta_sym_counts,
    count_effective_cycles,
    random_cubics,
)
from .hodge import (
    HodgeDiamond,
    cubic_hodge,
    fano_hodge,
    hilb2_hodge,
    e_polynomial,
    render_diamond,
)
from .motivic import (
    VirtualClass,
    Symbol,
    L,
    symbol,
    lefschetz,
    projective_space,
    sym_power,
    sym2,
    parse_class,
    format_class,
    fano_class_from_relation,
    fano_class_from_defect,
    rational_defect,
)
from .realizations import (
    Environment,
    realize,
    chi_fano,
    chi_real_fano,
    psi_polynomial,
    indecomposability_report,
    hasse_weil_truncation,
)
from .resources import (
    VerificationReport,
    RunConfig,
)
