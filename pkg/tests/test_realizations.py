from fractions import Fraction

import numpy as np
import pytest
import sympy

from hypothesis import given, settings, strategies as st

from fanocubic import realizations
from fanocubic.constants import Parity, Target, Verdict
from fanocubic.exceptions import InvalidInput, NonIntegralResult, UnassignedSymbol, UnsupportedOrder
from fanocubic.hodge import T, U, V, curve_hodge, e_polynomial, fano_hodge, super_sym2
from fanocubic.motivic import L, fano_class_from_relation, lefschetz, projective_space, sym2, sym_power, symbol
from fanocubic.motivic.identities import random_class
from fanocubic.motivic.ring import Symbol
from fanocubic.realizations import Environment, realize

X, Y, Z = symbol('X'), symbol('Y'), symbol('Z')

ENVIRONMENTS = {
    Target.Count: Environment.count(5, {'X': 7, 'Y': 31, 'Z': 0}),
    Target.Euler: Environment.euler({'X': 3, 'Y': -6, 'Z': 27}),
    Target.RealEuler: Environment.real_euler({'X': 1, 'Y': (-5, 9), 'Z': 3}),
    Target.EPolynomial: Environment.e_polynomial({'X': 1 + U * V, 'Y': 1 - 2 * U - 2 * V + U * V, 'Z': 3}),
}

SYM2_ENVIRONMENTS = {
    Target.Count: Environment.count(5, {'X': [7, 31], 'Y': [31, 651], 'Z': [0, 0]}),
    Target.Euler: ENVIRONMENTS[Target.Euler],
    Target.RealEuler: Environment.real_euler({'X': (1, 3), 'Y': (-5, 9), 'Z': (3, 27)}),
    Target.EPolynomial: ENVIRONMENTS[Target.EPolynomial],
}

seeds = st.integers(0, 2 ** 32 - 1)


def with_symmetric_squares(seed):
    rng = np.random.default_rng(seed)
    return random_class(rng) + sym2(random_class(rng, max_terms=2))


def same(left, right):
    if isinstance(left, sympy.Basic) or isinstance(right, sympy.Basic):
        return sympy.expand(sympy.sympify(left) - sympy.sympify(right)) == 0
    return left == right


class TestEnvironment:
    def test_count__needs_q(self):
        with pytest.raises(InvalidInput):
            Environment(Target.Count, {'X': 1})
        with pytest.raises(InvalidInput):
            Environment.count(1)

    @pytest.mark.parametrize('target, expected', (
        (Target.Count, 125),
        (Target.Euler, 1),
        (Target.RealEuler, -1),
        (Target.EPolynomial, U ** 3 * V ** 3),
    ))
    def test_lefschetz(self, target, expected):
        actual = ENVIRONMENTS[target].lefschetz(3)
        assert expected == actual

    def test_to_dict(self):
        target = Environment.count(7, {'Y': [99, 2745], 'S': 0})

        assert {'target': 'count', 'q': 7, 'assignments': {'S': 0, 'Y': [99, 2745]}} == target.to_dict()

    def test_unassigned(self):
        with pytest.raises(UnassignedSymbol):
            realize(symbol('W'), ENVIRONMENTS[Target.Euler])

    def test_count__missing_extension_value(self):
        env = Environment.count(2, {'Y': 3})
        with pytest.raises(UnassignedSymbol):
            realize(sym2(Y), env)

    def test_real_euler__odd_adams(self):
        env = Environment.real_euler({'Y': (1, 3)})
        with pytest.raises(UnsupportedOrder):
            realize(sym_power(Y, 3), env)

    def test_real_euler__needs_complex_value(self):
        env = Environment.real_euler({'Y': 1})
        with pytest.raises(UnassignedSymbol):
            realize(sym2(Y), env)

    def test_override_sym_power(self):
        env = Environment.euler({'Y': 9, 'Sym2(Y)': 100})
        assert 100 == realize(sym2(Y), env)


class TestRealize:
    @pytest.mark.parametrize('value, env, expected', (
        (L, Environment.count(7), 7),
        (lefschetz(-1), Environment.count(7), Fraction(1, 7)),
        (projective_space(2), Environment.count(3), 13),
        (projective_space(3), Environment.euler(), 4),
        (projective_space(3), Environment.real_euler(), 0),
        (projective_space(2), Environment.real_euler(), 1),
        (sym2(Y), Environment.count(2, {'Y': [3, 5]}), 7),
        (sym_power(Y, 3), Environment.count(2, {'Y': [3, 5, 9]}), 15),
        (sym2(Y), Environment.euler({'Y': 9}), 45),
        (sym2(Y), Environment.real_euler({'Y': (-5, 9)}), 17),
        (sym2(X * Y), Environment.euler({'X': 2, 'Y': 3}), 21),
        (sym2(-Y), Environment.euler({'Y': 4}), 6),
    ))
    def test_value(self, value, env, expected):
        actual = realize(value, env)
        assert expected == actual

    def test_e_polynomial__projective_line(self):
        env = Environment.e_polynomial({'Y': 1 + U * V})

        actual = realize(sym2(Y), env)

        assert same(1 + U * V + U ** 2 * V ** 2, actual)

    @pytest.mark.parametrize('g', (1, 2, 3))
    def test_e_polynomial__sym2_curve(self, g):
        env = Environment.e_polynomial({'C': e_polynomial(curve_hodge(g))})

        actual = realize(sym2(symbol('C')), env)

        assert same(e_polynomial(super_sym2(curve_hodge(g))).as_expr(), actual)

    @pytest.mark.parametrize('target', list(Target))
    def test_homomorphism(self, target):
        env = ENVIRONMENTS[target]
        rng = np.random.default_rng(2024)
        for _ in range(200):
            a, b = random_class(rng), random_class(rng)
            assert same(realize(a * b, env), realize(a, env) * realize(b, env))
            assert same(realize(a + b, env), realize(a, env) + realize(b, env))

    @pytest.mark.parametrize('target', list(Target))
    @given(seeds, seeds)
    @settings(max_examples=25, deadline=None)
    def test_homomorphism__symmetric_squares(self, target, left, right):
        env = SYM2_ENVIRONMENTS[target]
        a, b = with_symmetric_squares(left), with_symmetric_squares(right)

        assert same(realize(a * b, env), realize(a, env) * realize(b, env))
        assert same(realize(a + b, env), realize(a, env) + realize(b, env))
        assert same(realize(a - b, env), realize(a, env) - realize(b, env))

    @pytest.mark.parametrize('target', list(Target))
    def test_product_symbol(self, target):
        env = SYM2_ENVIRONMENTS[target]
        x, y = realize(X, env), realize(Y, env)
        x2, y2 = env.adams(Symbol.atomic('X'), 2), env.adams(Symbol.atomic('Y'), 2)

        actual = realize(sym2(X * Y), env)

        assert same(((x * y) ** 2 + x2 * y2) * sympy.Rational(1, 2), actual)

    def test_fano_class__fermat_surface(self):
        env = Environment.count(7, {'Y': [99, 2745], 'S': 0})

        actual = realize(fano_class_from_relation(Y, 2, symbol('S')), env)

        assert 27 == actual


def test_newton_symmetric_powers():
    assert [3, 7, 15] == realizations.newton_symmetric_powers([3, 5, 9])


def test_newton_symmetric_powers__non_integral():
    with pytest.raises(NonIntegralResult):
        realizations.newton_symmetric_powers([1, 2])


class TestEulerCharacteristics:
    @pytest.mark.parametrize('chi_y, chi_sing, expected', (
        (9, 0, 27),
        (8, 1, 21),
        (-6, 0, 27),
        (27, 0, 324),
        (3, 0, 0),
        (0, 0, 0),
    ))
    def test_chi_fano(self, chi_y, chi_sing, expected):
        actual = realizations.chi_fano(chi_y, chi_sing)
        assert expected == actual

    @pytest.mark.parametrize('chi_y, chi_sing', ((9, 0), (8, 1), (-6, 0), (27, 0), (7, 2)))
    def test_euler_fano_report(self, chi_y, chi_sing):
        report = realizations.euler_fano_report(chi_y, chi_sing)

        assert report.passed
        assert str(realizations.chi_fano(chi_y, chi_sing)) == report.rhs
        assert 'euler' == report.environment['target']

    @pytest.mark.parametrize('chi_r, chi_c, parity, expected', (
        (-5, 9, Parity.Even, 27),
        (-3, 9, Parity.Even, 15),
        (-1, 9, Parity.Even, 7),
        (1, 9, Parity.Even, 3),
        (3, 9, Parity.Even, 3),
        (-1, 9, 'odd', 5),
        (0, -6, Parity.Odd, -3),
    ))
    def test_chi_real_fano(self, chi_r, chi_c, parity, expected):
        actual = realizations.chi_real_fano(chi_r, chi_c, parity)
        assert expected == actual

    def test_chi_real_fano__singular(self):
        assert 28 == realizations.chi_real_fano(-5, 9, Parity.Even, 1)
        assert 4 == realizations.chi_real_fano(-1, 9, Parity.Odd, 1)

    def test_chi_real_fano__parity_mismatch(self):
        with pytest.raises(NonIntegralResult):
            realizations.chi_real_fano(-5, 8, Parity.Even)

    def test_chi_real_fano__invalid_parity(self):
        with pytest.raises(ValueError):
            realizations.chi_real_fano(1, 9, 'both')

    @pytest.mark.parametrize('chi_r, chi_c, parity, chi_r_sing', (
        (-5, 9, 'even', 0),
        (3, 9, 'even', 1),
        (-1, 9, 'odd', 0),
        (0, -6, 'odd', 2),
    ))
    def test_real_euler_fano_report(self, chi_r, chi_c, parity, chi_r_sing):
        report = realizations.real_euler_fano_report(chi_r, chi_c, parity, chi_r_sing)
        assert report.passed


class TestPolynomials:
    @pytest.mark.parametrize('d, expected', (
        (2, '27'),
        (3, '1 + 5*t + 10*t^2'),
        (4, '1 + t^2 + t^4'),
        (5, '1'),
        (6, '1'),
        (7, '1'),
        (8, '1'),
    ))
    def test_fano_psi(self, d, expected):
        actual = realizations.psi_polynomial(e_polynomial(fano_hodge(d)))
        assert expected == realizations.format_polynomial(actual)

    def test_format_polynomial(self):
        assert '1 - u - v + u*v' == realizations.format_polynomial(e_polynomial(curve_hodge(1)))
        assert '-2*t + 3*t^2' == realizations.format_polynomial(3 * T ** 2 - 2 * T)
        assert '0' == realizations.format_polynomial(sympy.Poly(0, T))


class TestIndecomposability:
    def test_cubic_threefold(self):
        report = realizations.indecomposability_report(1 + 5 * T + 10 * T ** 2, 25, 3)

        assert Verdict.Indecomposable.value == report.verdict
        assert [] == report.factorizations
        assert 5 == report.genus
        assert 26 == report.sym2_h11

    def test_cubic_fourfold(self):
        report = realizations.indecomposability_report(1 + T ** 2 + T ** 4, 21, 4)

        assert Verdict.ProductExcluded.value == report.verdict
        assert {'q': 0, 'p_g': 1, 'psi_matches_k3_hilb2': True} == report.hilb2_candidate

    def test_sym2_of_curve_not_excluded(self):
        report = realizations.indecomposability_report(1 + 2 * T + T ** 2, 5, 3)

        assert Verdict.Inconclusive.value == report.verdict
        assert ['(1 + t)(1 + t)'] == report.factorizations
        assert 2 == report.genus

    def test_unknown_h11(self):
        report = realizations.indecomposability_report(1 + 5 * T + 10 * T ** 2, None, 3)
        assert Verdict.Inconclusive.value == report.verdict

    def test_product_of_surfaces(self):
        # (1 + t^2)^2
        report = realizations.indecomposability_report(1 + 2 * T ** 2 + T ** 4, None, 4)

        assert Verdict.Inconclusive.value == report.verdict
        assert ['(1 + t^2)(1 + t^2)'] == report.factorizations

    def test_constant(self):
        report = realizations.indecomposability_report(27, None, 3)
        assert Verdict.Inconclusive.value == report.verdict

    def test_invalid_dimension(self):
        with pytest.raises(InvalidInput):
            realizations.indecomposability_report(1 + T, None, 5)


class TestHasseWeil:
    @pytest.mark.parametrize('counts, order, expected', (
        ([3, 5], 2, [3, 7]),
        ([3, 5, 9], 3, [3, 7, 15]),
        ([3, 5, 9], 1, [3]),
        ([3, 9, 9], 3, [3, 9, 21]),
    ))
    def test_truncation(self, counts, order, expected):
        actual = realizations.hasse_weil_truncation(counts, order)
        assert expected == actual

    def test_order(self):
        with pytest.raises(UnsupportedOrder):
            realizations.hasse_weil_truncation([3], 0)

    def test_too_few_counts(self):
        with pytest.raises(InvalidInput):
            realizations.hasse_weil_truncation([3, 5], 3)


class TestHodgeReport:
    def test_cubic_threefold(self):
        report = realizations.hodge_report(3)

        assert -6 == report.cubic_euler
        assert 27 == report.fano_euler
        assert 27 == report.euler_formula
        assert '1 + 5*t + 10*t^2' == report.fano_psi
        assert [1, 10, 45, 10, 1] == report.fano_betti
        assert Verdict.Indecomposable.value == report.decomposability.verdict

    def test_cubic_fourfold(self):
        report = realizations.hodge_report(4)

        assert 27 == report.cubic_euler
        assert 324 == report.fano_euler
        assert [1, 0, 23, 0, 276, 0, 23, 0, 1] == report.fano_betti
        assert '1 + t^2 + t^4' == report.fano_psi

    def test_cubic_surface(self):
        report = realizations.hodge_report(2)

        assert 9 == report.cubic_euler
        assert 27 == report.fano_euler
        assert report.decomposability is None
