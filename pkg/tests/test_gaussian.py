from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hrlab.gaussian import GaussianRational, I, fraction_from_str, fraction_to_str

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=7)
gaussians = st.builds(GaussianRational, rationals, rationals)


def test_basic_arithmetic():
    a = GaussianRational(1, 2)
    b = GaussianRational(Fraction(3, 4), -1)
    assert a + b == GaussianRational(Fraction(7, 4), 1)
    assert a - b == GaussianRational(Fraction(1, 4), 3)
    assert a * b == GaussianRational(Fraction(3, 4) + 2, Fraction(3, 2) - 1)
    assert I * I == GaussianRational(-1)
    assert I ** 4 == 1
    assert (a / b) * b == a


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GaussianRational(1) / GaussianRational(0)


def test_scalar_interop():
    a = GaussianRational(1, 1)
    assert a + 1 == GaussianRational(2, 1)
    assert 2 * a == GaussianRational(2, 2)
    assert a * Fraction(1, 2) == GaussianRational(Fraction(1, 2), Fraction(1, 2))
    assert 1 - a == GaussianRational(0, -1)
    assert 2 / GaussianRational(1, 1) == GaussianRational(1, -1)


@given(gaussians)
def test_conjugation_involution(z):
    assert z.conjugate().conjugate() == z
    assert (z * z.conjugate()).is_real()


@given(gaussians, gaussians)
def test_conjugation_multiplicative(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


@given(gaussians)
def test_json_round_trip(z):
    assert GaussianRational.from_json(z.to_json()) == z


def test_fraction_strings():
    assert fraction_to_str(Fraction(-3, 7)) == "-3/7"
    assert fraction_from_str("-3/7") == Fraction(-3, 7)
    assert fraction_from_str("5") == Fraction(5)


def test_immutability_and_hash():
    z = GaussianRational(1, 2)
    with pytest.raises(AttributeError):
        z.re = Fraction(0)
    assert hash(GaussianRational(1, 2)) == hash(z)
    assert bool(GaussianRational(0, 0)) is False
    assert bool(GaussianRational(0, 1)) is True
