import enum


class SymbolKind(str, enum.Enum):
    """
    Kind of a formal variety symbol.
    """
    Atomic = 'atomic'
    SymPower = 'sym-power'
    Product = 'product'


class Target(str, enum.Enum):
    """
    Realization target.
    """
    Count = 'count'
    Euler = 'euler'
    RealEuler = 'real-euler'
    EPolynomial = 'e-polynomial'


class Parity(str, enum.Enum):
    """
    Parity of the hypersurface dimension.
    """
    Even = 'even'
    Odd = 'odd'

    @classmethod
    def of(cls, d: int) -> 'Parity':
        return cls.Even if d % 2 == 0 else cls.Odd


class Verdict(str, enum.Enum):
    Pass = 'pass'
    Fail = 'fail'
    Indecomposable = 'indecomposable'
    ProductExcluded = 'product-excluded'
    Inconclusive = 'inconclusive'


class OutputFormat(str, enum.Enum):
    Table = 'table'
    Json = 'json'


class ExitCode(enum.IntEnum):
    """
    Process exit codes; a stable contract for scripted use.
    """
    Success = 0
    InvalidInput = 1
    VerificationFailed = 2


class Relation(enum.Enum):
    """
    Relations that can be checked and reported on.
    """
    HilbCounting = 'hilb2-counting', '#Hilb^2 Y = #P^d * N1 + q^2 * #F(Y)'
    SymCounting = 'sym2-counting', '#Sym^2 Y = (1 + q^d) * N1 + q^2 * #F(Y) - q^d * Ns'
    LineCount = 'line-count', '#F(Y) = (N1^2 - 2(1 + q^d) N1 + N2) / 2q^2 + q^(d-2) Ns'
    SymOracle = 'sym2-oracle', '#Sym^2 Y = (N1^2 + N2) / 2'
    ZetaOracle = 'zeta-oracle', '#Sym^m Y = coefficient of exp(sum N_m t^m / m)'
    EulerFano = 'euler-fano', 'chi(F) = chi(Y)(chi(Y) - 3) / 2 + chi(Sing)'
    RealEulerFano = 'real-euler-fano', 'chi_R(F) from chi_R(Y), chi_C(Y) and chi_R(Sing)'
    Symbolic = 'symbolic', 'identity in K_0(Var)[L^-1]'

    def __new__(cls, name: str, formula: str) -> 'Relation':
        instance = object.__new__(cls)
        instance._value_ = name
        instance.formula = formula
        return instance

    def __str__(self):
        return self.value
