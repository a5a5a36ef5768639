import random

import pytest
from sympy.polys.domains import QQ

import algebra.identities as identities
from algebra.identities import (
    G1_alternative_form,
    G1_satisfies_identity,
    combi_lin_check,
    exp_v_series,
    random_laurent,
    reconstruct_check,
    sample_points,
    trivariate_check,
)
from algebra.lambda_ops import lambda_suite_check
from algebra.rings import V, VZ, Z
from series.closed_forms import closed_form_G1_poly
from series.substitution import transformed_poly


def test_exp_v_series():
    assert exp_v_series(2, with_y=False) == V + VZ * V ** 2 + VZ ** 2 * V ** 3 * QQ(1, 2)


def test_sample_points():
    assert sample_points(1) == (2, 3, 5)
    assert sample_points(2) == (6, 12, 20)
    assert sample_points(3) == ()


@pytest.mark.parametrize("m,N", [(1, 6), (2, 4)])
def test_combi_lin(m, N):
    assert combi_lin_check(m, N).status == "pass"


def test_combi_lin_through_symmetric_functions():
    report = combi_lin_check(3, 2)
    assert report.status == "pass"
    assert "Phi_k" in report.detail


def test_combi_lin_reports_a_wrong_series(monkeypatch):
    monkeypatch.setattr(identities, "transformed_poly", lambda m, N: transformed_poly(m, N) + Z ** 2)
    report = combi_lin_check(3, 2)
    assert report.status == "fail"
    assert report.first_mismatch_order == 2


@pytest.mark.parametrize("m,N", [(1, 5), (2, 3), (3, 3)])
def test_g1_identity(m, N):
    assert G1_satisfies_identity(m, N).status == "pass"


def test_g1_alternative_form():
    assert G1_alternative_form(2, 4) == closed_form_G1_poly(2, 4)


@pytest.mark.parametrize("m,N", [(1, 8), (2, 6)])
def test_trivariate(m, N):
    assert trivariate_check(m, N).status == "pass"


@pytest.mark.parametrize("m", [1, 2, 3])
def test_reconstruct(m):
    assert reconstruct_check(m, seed=3, trials=5).status == "pass"


def test_random_laurent_spread():
    L = random_laurent(random.Random(1), spread=2)
    assert L.is_zero() or -2 <= L.bottom_degree() <= L.top_degree() <= 2


@pytest.mark.parametrize("m,N", [(1, 6), (2, 6)])
def test_lambda_suite(m, N):
    assert lambda_suite_check(m, N).status == "pass"
