import cmath
import math
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from fiberburnside.cyclo import Cyclotomic, euler_phi, frac_mod1, rational_str, root_of_unity, root_sum

angles = st.builds(Fraction, st.integers(-30, 30), st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15]))
coeffs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
elements = st.dictionaries(angles, coeffs, max_size=4).map(root_sum)


def numeric(terms) -> complex:
    return sum(complex(c) * cmath.exp(2j * math.pi * float(t)) for t, c in terms.items())


def close(a: complex, b: complex) -> bool:
    return abs(a - b) < 1e-9


@settings(max_examples=200, deadline=None)
@given(st.dictionaries(angles, coeffs, max_size=5))
def test_root_sum_matches_complex_value(terms):
    assert close(root_sum(terms).to_complex(), numeric(terms))


@settings(max_examples=150, deadline=None)
@given(elements, elements, elements)
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert close((x * y).to_complex(), x.to_complex() * y.to_complex())
    assert (x - x).is_zero()


@settings(max_examples=100, deadline=None)
@given(elements)
def test_inverse(x):
    if not x.is_zero():
        assert x * x.inverse() == Cyclotomic.one()


def test_sum_of_all_roots_vanishes():
    for n in range(2, 25):
        assert root_sum({Fraction(k, n): 1 for k in range(n)}).is_zero()


def test_rational_detection():
    # zeta_3 + zeta_3^2 = -1
    x = root_of_unity(Fraction(1, 3)) + root_of_unity(Fraction(2, 3))
    assert x.is_rational() and x.to_rational() == -1
    # zeta_8 + zeta_8^7 = sqrt 2 is not rational
    y = root_of_unity(Fraction(1, 8)) + root_of_unity(Fraction(7, 8))
    assert not y.is_rational()
    assert y * y == 2


def test_mixed_conductors_compare_equal():
    # -1 at conductor 2 equals zeta_4^2
    assert root_of_unity(Fraction(1, 2)) == root_of_unity(Fraction(1, 4)) ** 2
    assert root_of_unity(Fraction(1, 6)) == -root_of_unity(Fraction(2, 3))


def test_json_round_trip():
    x = root_sum({Fraction(1, 5): Fraction(3, 2), Fraction(2, 3): -1})
    assert Cyclotomic.from_json(x.to_json()) == x


def test_helpers():
    assert [euler_phi(n) for n in (1, 2, 9, 12, 64)] == [1, 1, 6, 4, 32]
    assert frac_mod1(Fraction(-1, 3)) == Fraction(2, 3)
    assert rational_str(Fraction(4, 2)) == "2"
    assert rational_str(Fraction(-1, 2)) == "-1/2"
