import numpy as np
import pytest

from hypothesis import given, settings, strategies as st

from fanocubic import fields
from fanocubic.exceptions import InvalidField


def all_pairs(field):
    a, b = np.meshgrid(field.elements, field.elements, indexing='ij')
    return a.ravel(), b.ravel()


class TestPrimeField:
    @pytest.mark.parametrize('p', (2, 3, 5, 7, 11, 1021, 2039))
    def test_init(self, p):
        target = fields.PrimeField(p)

        assert p == target.order
        assert f"F_{p}" == str(target)

    @pytest.mark.parametrize('p', (0, 1, 4, 9, 2053, -3, 2.0, '5'))
    def test_init__invalid(self, p):
        with pytest.raises(InvalidField):
            fields.PrimeField(p)

    def test_arithmetic(self):
        target = fields.PrimeField(7)

        assert 5 == target.add(3, 2)
        assert 1 == target.add(3, 5)
        assert 5 == target.sub(3, 5)
        assert 6 == target.mul(3, 2)
        assert 4 == target.neg(3)
        assert 5 == target.inv(3)
        assert 6 == target.power(3, 3)

    def test_embed(self):
        target = fields.PrimeField(5)

        assert 4 == target.embed(-1)
        assert 2 == target.embed(12)


@pytest.mark.parametrize('p, degree, expected', (
    (2, 2, (1, 1)),
    (3, 2, (1, 0)),
    (2, 3, (1, 1, 0)),
    (5, 2, (2, 0)),
))
def test_smallest_irreducible(p, degree, expected):
    actual = fields.smallest_irreducible(p, degree)
    assert expected == actual


def test_smallest_irreducible__degree():
    with pytest.raises(InvalidField):
        fields.smallest_irreducible(2, 4)


class TestExtField:
    @pytest.mark.parametrize('p, degree', ((2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (7, 2)))
    def test_field_axioms(self, p, degree):
        target = fields.get_field(p, degree)
        a, b = all_pairs(target)
        nonzero = target.elements[1:]

        assert p ** degree == target.order
        assert np.array_equal(target.add(a, b), target.add(b, a))
        assert np.array_equal(target.mul(a, b), target.mul(b, a))
        assert np.all(target.add(target.elements, target.neg(target.elements)) == 0)
        assert np.all(target.mul(nonzero, target.inv(nonzero)) == 1)
        assert np.all(target.power(nonzero, target.order - 1) == 1)

    @pytest.mark.parametrize('p, degree', ((2, 3), (3, 2)))
    def test_distributive(self, p, degree):
        target = fields.get_field(p, degree)
        x = target.elements
        a, b, c = x[:, None, None], x[None, :, None], x[None, None, :]

        left = target.mul(a, target.add(b, c))
        right = target.add(target.mul(a, b), target.mul(a, c))

        assert np.array_equal(left, right)

    @pytest.mark.parametrize('p, degree', ((2, 2), (3, 2), (2, 3), (5, 2)))
    def test_frobenius_fixes_prime_field(self, p, degree):
        target = fields.get_field(p, degree)

        assert list(range(p)) == target.fixed_by_frobenius().tolist()

    def test_frobenius_is_automorphism(self):
        target = fields.get_field(3, 2)
        a, b = all_pairs(target)

        assert np.array_equal(target.frobenius(target.mul(a, b)), target.mul(target.frobenius(a), target.frobenius(b)))
        assert np.array_equal(target.frobenius(target.add(a, b)), target.add(target.frobenius(a), target.frobenius(b)))

    def test_cube_power(self):
        target = fields.get_field(5, 2)
        x = target.elements

        assert np.array_equal(target.power(x, 3), target.cube_power(x, 3))
        assert np.array_equal(target.power(x, 2), target.cube_power(x, 2))

    def test_prime_field_embeds(self):
        base = fields.get_field(7)
        target = fields.get_field(7, 2)
        x = base.elements

        assert np.array_equal(base.mul_table, target.mul_table[np.ix_(x, x)])
        assert np.array_equal(base.add_table, target.add_table[np.ix_(x, x)])

    @pytest.mark.parametrize('p', (2, 3, 5, 7, 37))
    def test_frobenius_is_involution(self, p):
        target = fields.get_field(p, 2)
        x = target.elements

        assert np.array_equal(x, target.frobenius(target.frobenius(x)))
        assert p * p - p == np.count_nonzero(target.frobenius(x) != x)

    @given(st.sampled_from(((2, 3), (3, 3), (5, 2), (11, 2))), st.integers(0), st.integers(0), st.integers(0))
    @settings(max_examples=100)
    def test_arithmetic__sampled(self, key, x, y, z):
        target = fields.get_field(*key)
        a, b, c = x % target.order, y % target.order, z % target.order

        assert target.mul(target.mul(a, b), c) == target.mul(a, target.mul(b, c))
        assert target.add(target.add(a, b), c) == target.add(a, target.add(b, c))
        assert target.mul(a, target.add(b, c)) == target.add(target.mul(a, b), target.mul(a, c))
        assert target.sub(target.add(a, b), b) == a
        assert target.frobenius(target.add(a, b)) == target.add(target.frobenius(a), target.frobenius(b))
        assert target.frobenius(target.mul(a, b)) == target.mul(target.frobenius(a), target.frobenius(b))
        assert target.power(a, target.order) == a

    def test_order_37_squared(self):
        target = fields.get_field(37, 2)

        assert 1369 == target.order
        assert np.all(target.mul(target.elements[1:], target.inv(target.elements[1:])) == 1)

    @pytest.mark.parametrize('p, degree', ((13, 3), (47, 2)))
    def test_too_large(self, p, degree):
        assert not fields.table_fits(p, degree)
        with pytest.raises(InvalidField):
            fields.get_field(p, degree)

    def test_str(self):
        assert 'F_9' == str(fields.get_field(3, 2))
        assert fields.get_field(3) is fields.get_field(3, 2).prime_field


def test_get_field__cached():
    assert fields.get_field(5, 2) is fields.get_field(5, 2)
    assert fields.get_field(5) == fields.PrimeField(5)
