from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gelfand.scalars import QPoly, format_rational, parse_rational, q, scalar_to_json, specialize

coeffs = st.lists(st.integers(-50, 50), max_size=6)
polys = coeffs.map(QPoly)
rationals = st.fractions(max_denominator=50)


def test_difference_of_squares():
    assert (q - 1) * (q + 1) == q**2 - 1


def test_quadratic_relation_at_x_equal_q():
    x = q
    assert (x - q) * (x + 1) == 0


def test_add_constant():
    assert (q - 1) + 1 == q


@pytest.mark.parametrize(
    "p, q0, expected",
    [(q**2 - 1, 2, 3), (q, 1, 1), (q - 1, 1, 0), (3 * q**2 - q, Fraction(1, 2), Fraction(1, 4))],
)
def test_specialize_examples(p, q0, expected):
    assert specialize(p, q0) == expected
    assert p(q0) == expected


def test_trimmed_canonical_form():
    assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPoly([0, 0]).coeffs == ()
    assert not QPoly()
    assert (q - q).coeffs == ()
    assert (q - q).degree == -1


def test_integer_coercion_and_hash():
    assert QPoly.const(3) == 3
    assert hash(QPoly.const(3)) == hash(3)
    assert 2 - q == QPoly([2, -1])
    assert 2 * q == q + q
    assert q * Fraction(3) == 3 * q


def test_string_form():
    assert str(q**2 - 1) == "q^2 - 1"
    assert str(-q + 2) == "-q + 2"
    assert str(QPoly()) == "0"
    assert str(3 * q**3 - 2 * q) == "3*q^3 - 2*q"


def test_json_round_trip():
    p = 5 * q**3 - q + 7
    assert p.to_json() == ["7", "-1", "0", "5"]
    assert QPoly.from_json(p.to_json()) == p
    assert scalar_to_json(Fraction(-3, 4)) == "-3/4"
    assert scalar_to_json(q - 1) == ["-1", "1"]


@given(polys, polys, rationals)
def test_specialization_is_multiplicative(a, b, q0):
    assert specialize(a * b, q0) == specialize(a, q0) * specialize(b, q0)


@given(polys, polys, rationals)
def test_specialization_is_additive(a, b, q0):
    assert specialize(a + b, q0) == specialize(a, q0) + specialize(b, q0)
    assert specialize(a - b, q0) == specialize(a, q0) - specialize(b, q0)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + (-a) == 0
    assert a * 1 == a


@given(polys, st.integers(0, 4))
def test_power_matches_repeated_product(a, k):
    expected = QPoly.const(1)
    for _ in range(k):
        expected = expected * a
    assert a**k == expected


@given(rationals, rationals)
def test_rational_round_trip(x, y):
    assert (x + y) - y == x
    assert parse_rational(format_rational(x)) == x


def test_rational_lowest_terms():
    x = parse_rational("6/-4")
    assert (x.numerator, x.denominator) == (-3, 2)
    assert format_rational(Fraction(4, 2)) == "2"


@pytest.mark.parametrize("bad", ["", "1/0", "a/b", "1.5"])
def test_parse_rational_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)
