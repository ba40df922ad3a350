"""Exact scalar rings: rationals, Gaussian rationals, dual rationals."""

import pytest
from hypothesis import given, strategies as st

from tembed.rings import (
    DualRational,
    GaussianRational,
    I,
    dual_lift,
    dual_log_derivative,
    gaussian,
    rational,
    rational_from_str,
    rational_to_str,
    to_float_complex,
)

rationals = st.builds(
    rational,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=50),
)


def test_rational_text_forms():
    assert rational_to_str(rational(7, 10)) == "7/10"
    assert rational_to_str(rational(4, 2)) == "2"
    assert rational_from_str("7/10") == rational(7, 10)
    assert rational_from_str("-3") == rational(-3)
    assert rational_from_str("0.7") == rational(7, 10)
    assert rational_from_str("2.5e-1") == rational(1, 4)


def test_float_input_is_converted_exactly():
    assert rational(0.5) == rational(1, 2)


@given(rationals)
def test_rational_str_round_trip(q):
    assert rational_from_str(rational_to_str(q)) == q


def test_gaussian_arithmetic():
    z = gaussian(1, 2)
    w = gaussian(3, -1)
    assert z * w == gaussian(5, 5)
    assert (z / w) * w == z
    assert z + w - w == z
    assert I * I == gaussian(-1)
    assert z.conjugate() == gaussian(1, -2)
    assert z.modulus_squared() == rational(5)
    assert 2 * z == gaussian(2, 4)


def test_gaussian_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        gaussian(1, 1) / gaussian(0, 0)


@given(rationals, rationals, rationals, rationals)
def test_gaussian_field_axioms(p, q, r, s):
    z, w = GaussianRational(p, q), GaussianRational(r, s)
    assert z * w == w * z
    assert z * (w + w) == z * w + z * w
    if w.modulus_squared() != 0:
        assert (z / w) * w == z


def test_to_float_complex():
    assert to_float_complex(gaussian(1, 2)) == 1 + 2j
    assert to_float_complex(rational(1, 2)) == 0.5 + 0j
    assert to_float_complex(1 + 1j) == 1 + 1j


def test_dual_product_and_quotient_rules():
    x = DualRational(rational(2), rational(3))
    y = DualRational(rational(5), rational(-1))
    prod = x * y
    assert prod.value == rational(10)
    assert prod.infinitesimal == rational(3) * 5 + rational(-1) * 2
    quot = x / y
    assert quot.value == rational(2, 5)
    assert quot.infinitesimal == (rational(3) * 5 - rational(-1) * 2) / 25
    assert (quot * y).value == x.value
    assert (quot * y).infinitesimal == x.infinitesimal


def test_dual_lift_and_log_derivative():
    tagged = dual_lift(rational(7, 10), True)
    plain = dual_lift(rational(7, 10), False)
    assert tagged.infinitesimal == rational(7, 10)
    assert plain.infinitesimal == 0
    # t d/dt log(t^3) = 3 for a tagged variable raised to a power
    cube = tagged * tagged * tagged
    assert dual_log_derivative(cube) == rational(3)
    with pytest.raises(ZeroDivisionError):
        dual_log_derivative(DualRational(rational(0), rational(1)))
