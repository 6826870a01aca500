from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from burstcore.density import Density, as_fraction, fraction_to_json


def test_equal_values_with_different_windows():
    assert Density(14, 4) == Density(7, 2) == Fraction(7, 2)
    assert hash(Density(14, 4)) == hash(Fraction(7, 2))
    assert Density(14, 4).sum == 14 and Density(14, 4).len == 4


def test_ordering_against_ints_and_fractions():
    assert Density(11, 3) > 3
    assert Density(11, 3) < Fraction(15, 4)
    assert Density(8, 3) <= Density(16, 6)
    assert sorted([Density(1, 1), Density(1, 3), Density(5, 4)]) == [Density(1, 3), Density(1, 1), Density(5, 4)]


@pytest.mark.parametrize("sum_, len_", [(1, 0), (-1, 2)])
def test_rejects_bad_fields(sum_, len_):
    with pytest.raises(ValueError):
        Density(sum_, len_)


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        Density(1.5, 2)


@given(st.integers(0, 10**6), st.integers(1, 10**4), st.integers(0, 10**6), st.integers(1, 10**4))
def test_cross_multiplication_matches_fractions(a, b, c, d):
    x, y = Density(a, b), Density(c, d)
    assert (x < y) == (Fraction(a, b) < Fraction(c, d))
    assert (x == y) == (Fraction(a, b) == Fraction(c, d))


@pytest.mark.parametrize("text,expected", [
    ("3", Fraction(3)), ("2.5", Fraction(5, 2)), ("7/2", Fraction(7, 2)), (" 0.1 ", Fraction(1, 10)),
])
def test_as_fraction_parses_text_exactly(text, expected):
    assert as_fraction(text) == expected


def test_as_fraction_float_uses_decimal_repr():
    assert as_fraction(0.1) == Fraction(1, 10)
    assert as_fraction(Density(6, 4)) == Fraction(3, 2)


@pytest.mark.parametrize("bad", ["abc", "1/0", float("nan")])
def test_as_fraction_rejects_garbage(bad):
    with pytest.raises(ValueError):
        as_fraction(bad)


def test_as_fraction_rejects_bool():
    with pytest.raises(TypeError):
        as_fraction(True)


def test_json_round_trip_keeps_window_totals():
    d = Density(14, 4)
    assert d.to_json() == {"num": 14, "den": 4}
    back = Density.from_json(d.to_json())
    assert (back.sum, back.len) == (14, 4)
    assert fraction_to_json(Fraction(6, 4)) == {"num": 3, "den": 2}
