"""
Identity suite
~~~~~~~~~~~~~~

Named collections of exact identities in K_0(Var/k)[L^-1]. Each case is
an (lhs, rhs) pair that must be equal after full expansion.

"""
import logging

from typing import Callable, Dict, Iterable, Iterator, NamedTuple, Sequence, Tuple, Union

import numpy as np

from ..constants import Verdict
from ..exceptions import InvalidInput
from ..resources import SymbolicReport
from ..utils.sequences import force_tuple
from .ring import Monomial, Symbol, VirtualClass, lefschetz, projective_space, symbol
from .relations import (
    cone_classes,
    fano_class_expanded,
    fano_class_from_defect,
    fano_class_from_relation,
    hilb2_class,
    nodal_defect,
    reduce_mod_L,
)
from .symmetric import SymSeries, sym2, sym_series

logger = logging.getLogger(__name__)

DEFAULT_DIMENSIONS = range(2, 9)
DEFAULT_SYMBOLS = ('X', 'Y', 'Z')


class IdentityCase(NamedTuple):
    identity: str
    case: str
    lhs: VirtualClass
    rhs: VirtualClass

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def random_class(rng: np.random.Generator, symbols: Sequence[str]=DEFAULT_SYMBOLS, *,
                 max_terms: int=4, max_coefficient: int=3, max_degree: int=2,
                 lexp_range: Tuple[int, int]=(-1, 2)) -> VirtualClass:
    """
    Seeded random class with small coefficients.
    """
    atoms = [Symbol.atomic(s) for s in symbols]
    terms: Dict[Monomial, int] = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        degree = int(rng.integers(0, max_degree + 1))
        picked = tuple(sorted(atoms[i] for i in rng.integers(0, len(atoms), size=degree)))
        monomial = Monomial(picked, int(rng.integers(lexp_range[0], lexp_range[1] + 1)))
        coefficient = int(rng.integers(-max_coefficient, max_coefficient + 1))
        terms[monomial] = terms.get(monomial, 0) + coefficient
    return VirtualClass(terms)


def _main_relation(rng: np.random.Generator, samples: int) -> Iterator[IdentityCase]:
    m_y, sing = symbol('M'), symbol('S')
    generic = [('M, S', m_y, sing)]
    randomized = [
        (f"random #{i}", random_class(rng, lexp_range=(0, 1), max_terms=3), random_class(rng, lexp_range=(0, 1)))
        for i in range(min(samples, 5))
    ]
    for d in DEFAULT_DIMENSIONS:
        for label, m, s in generic + randomized:
            y = projective_space(d) + m.shift(1)
            lhs = fano_class_from_defect(m, d, s).shift(2) + (1 + lefschetz(d)) * y - lefschetz(d) * s
            yield IdentityCase('fano-relation', f"d={d}, {label}", lhs, sym2(y))


def _sym2_projective(rng: np.random.Generator, samples: int) -> Iterator[IdentityCase]:
    for d in DEFAULT_DIMENSIONS:
        p = projective_space(d)
        yield IdentityCase(
            'sym2-projective', f"d={d}",
            sym2(p) - (1 + lefschetz(d)) * p,
            sym2(projective_space(d - 2)).shift(2) - lefschetz(d),
        )


def _nodal(rng: np.random.Generator, samples: int) -> Iterator[IdentityCase]:
    curve, surface = symbol('C'), symbol('S')
    m_3 = nodal_defect(curve, 3)
    yield IdentityCase('nodal', "d=3 defect", m_3, curve - projective_space(1) - 1)
    yield IdentityCase('nodal', "d=3 Fano class", fano_class_from_defect(m_3, 3, 1), sym2(curve) - curve)
    m_4 = nodal_defect(surface, 4)
    yield IdentityCase('nodal', "d=4 defect", m_4, surface - projective_space(2))
    yield IdentityCase('nodal', "d=4 Fano class", fano_class_from_defect(m_4, 4, 1), sym2(surface))


def _cone(rng: np.random.Generator, samples: int) -> Iterator[IdentityCase]:
    y_base, sing_base = symbol('Y'), symbol('S')
    for d in range(2, 8):
        fano_base = fano_class_from_relation(y_base, d - 1, sing_base)
        y, sing, fano = cone_classes(y_base, sing_base, fano_base)
        yield IdentityCase('cone', f"d={d}", fano, fano_class_from_relation(y, d, sing))


def _expanded(rng: np.random.Generator, samples: int) -> Iterator[IdentityCase]:
    m_y, sing = symbol('M'), symbol('S')
    for d in DEFAULT_DIMENSIONS:
        yield IdentityCase('expanded', f"d={d}", fano_class_expanded(m_y, d, sing), fano_class_from_defect(m_y, d, sing))


def _hilb_mod_l(rng: np.random.Generator, samples: int) -> Iterator[IdentityCase]:
    candidates = [('X', symbol('X'))]
    candidates += [(f"random #{i}", random_class(rng, lexp_range=(0, 2))) for i in range(min(samples, 10))]
    for d in range(1, 6):
        for label, x in candidates:
            yield IdentityCase('hilb-mod-L', f"d={d}, {label}", reduce_mod_L(hilb2_class(x, d, 0) - sym2(x)),
                               VirtualClass())


def _series_inverse(rng: np.random.Generator, samples: int) -> Iterator[IdentityCase]:
    order = 3
    for i in range(samples):
        a = random_class(rng, max_terms=3)
        product = sym_series(a, order) * sym_series(-a, order)
        for n, (actual, expected) in enumerate(zip(product, SymSeries.one(order))):
            if n:
                yield IdentityCase('series-inverse', f"random #{i}, t^{n}", actual, expected)


def _multiplicativity(rng: np.random.Generator, samples: int) -> Iterator[IdentityCase]:
    order = 3
    for i in range(max(1, samples // 4)):
        a, b = random_class(rng, max_terms=2), random_class(rng, max_terms=2)
        combined = sym_series(a + b, order)
        product = sym_series(a, order) * sym_series(b, order)
        for n in range(1, order + 1):
            yield IdentityCase('multiplicativity', f"random #{i}, t^{n}", combined[n], product[n])


SuiteFunction = Callable[[np.random.Generator, int], Iterable[IdentityCase]]

SUITE: Dict[str, SuiteFunction] = {
    'fano-relation': _main_relation,
    'sym2-projective': _sym2_projective,
    'nodal': _nodal,
    'cone': _cone,
    'expanded': _expanded,
    'hilb-mod-L': _hilb_mod_l,
    'series-inverse': _series_inverse,
    'multiplicativity': _multiplicativity,
}


def run_suite(selector: Union[str, Sequence[str]]=None, *, seed: int=0,
              samples: int=200) -> Tuple[IdentityCase, ...]:
    """
    Run the named identity families, or all of them when `selector` is
    None or 'all'.
    """
    if selector in (None, 'all'):
        names = list(SUITE)
    else:
        names = force_tuple(selector)
        unknown = [name for name in names if name not in SUITE]
        if unknown:
            raise InvalidInput(f"Unknown identity {unknown[0]!r}; choose from: {', '.join(SUITE)}")

    rng = np.random.default_rng(seed)
    cases = tuple(case for name in names for case in SUITE[name](rng, samples))
    failures = sum(1 for case in cases if not case.passed)
    logger.info("Identity suite %s: %d cases, %d failures", selector or 'all', len(cases), failures)
    return cases


def suite_report(selector: Union[str, Sequence[str]]=None, *, seed: int=0, samples: int=200) -> SymbolicReport:
    cases = run_suite(selector, seed=seed, samples=samples)
    failed = sum(1 for case in cases if not case.passed)
    return SymbolicReport(
        suite=','.join(force_tuple(selector)) if selector else 'all',
        cases=[
            {
                'identity': case.identity,
                'case': case.case,
                'lhs': case.lhs.format(),
                'rhs': case.rhs.format(),
                'verdict': (Verdict.Pass if case.passed else Verdict.Fail).value,
            }
            for case in cases
        ],
        passed=len(cases) - failed,
        failed=failed,
        verdict=(Verdict.Fail if failed else Verdict.Pass).value,
    )
