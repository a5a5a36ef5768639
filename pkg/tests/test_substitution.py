import pytest

from algebra.rings import U, ZY
from series.closed_forms import closed_form_G1_poly, closed_form_m1_trivariate_poly
from series.substitution import (
    check_transformed_equation,
    divided_difference_u,
    transformed_poly,
    transformed_series,
    x_of_zu,
)


def test_order_zero_dump():
    dump = transformed_series(1, 0).to_dump(1, "G(z;u,y)")
    assert dump.var == "z"
    assert dump.coeffs == [{"1": "1", "u": "1"}]


def test_y_zero_gives_x():
    assert transformed_poly(2, 4).subs(ZY, 0) == x_of_zu(2, 5)


@pytest.mark.parametrize("m,N", [(1, 5), (2, 4)])
def test_y_one_matches_closed_form(m, N):
    assert transformed_poly(m, N, True) == closed_form_G1_poly(m, N)


def test_m1_double_sum():
    assert transformed_poly(1, 5) == closed_form_m1_trivariate_poly(5)


def test_series_coefficients_are_polynomials():
    assert transformed_series(2, 4).is_polynomial()


@pytest.mark.parametrize("m,N", [(1, 5), (2, 4), (3, 3)])
def test_transformed_equation(m, N):
    assert check_transformed_equation(m, N).status == "pass"


def test_divided_difference():
    assert divided_difference_u(3 + 2 * U + U ** 2) == 2 + U
